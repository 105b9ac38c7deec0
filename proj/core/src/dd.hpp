#ifndef NPSPREAD_SRC_DD_HPP
#define NPSPREAD_SRC_DD_HPP

#include <vector>

#include "npspread/qlinalg.hpp"

namespace npspread::detail {

struct ConeGenerators {
    std::vector<QVector> lineality; // basis, primitive, sign-normalized
    std::vector<QVector> rays;      // extreme rays, primitive
};

/// Generators of the cone {x in R^dim : row . x <= 0 for every row}, by the
/// double description method run in the pointed quotient modulo the lineality
/// space, with the combinatorial adjacency test on tight-row sets.
/// Deterministic for a fixed row order.
ConeGenerators cone_generators(const std::vector<QVector>& rows, std::size_t dim);

} // namespace npspread::detail

#endif
