#include <iostream>
#include <string>
#include <vector>

#include "npspread/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return npspread::cli::run(args, std::cout, std::cerr);
}
