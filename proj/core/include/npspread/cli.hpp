#ifndef NPSPREAD_CLI_HPP
#define NPSPREAD_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace npspread::cli {

/// Runs one CLI invocation (args exclude the program name) writing results to
/// out and diagnostics to err. Exit code: 0 success, 1 user error (parse or
/// hypothesis failure), 2 internal invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace npspread::cli

#endif
