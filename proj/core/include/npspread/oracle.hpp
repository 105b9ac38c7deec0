#ifndef NPSPREAD_ORACLE_HPP
#define NPSPREAD_ORACLE_HPP

#include <cstddef>
#include <optional>

#include "npspread/monomial.hpp"
#include "npspread/polyhedral.hpp"

namespace npspread::oracle {

// Deliberately naive reference computations used to validate the fast paths.
// Performance is a non-goal.

inline constexpr std::size_t subset_budget = std::size_t{1} << 20;

/// Max dimension of a bounded face, by enumerating tight subsets of the
/// inequalities: feasibility, boundedness and implied-equality closure are
/// decided by exact LPs, dimension by rank of the closed tight system.
/// Intended for bodies inside the nonnegative orthant. Returns nullopt when
/// the subset budget is exhausted.
std::optional<int> compact_face_bruteforce(const HRep& h, const VRep& v);

/// Least n <= max_power with candidate * ideal^n = ideal^(n+1), by direct
/// ideal arithmetic; nullopt if none in budget. Errors unless candidate is a
/// subideal of ideal.
std::optional<int> reduction_by_definition(const MonomialIdeal& candidate,
                                           const MonomialIdeal& ideal,
                                           int max_power);

/// Membership of x^b in the integral closure via the power characterization:
/// true iff k*b lies in ideal^k for some k <= max_power. A false result is
/// inconclusive when the certifying k would exceed the budget.
bool closure_membership_by_powers(const MonomialIdeal& ideal,
                                  const QVector& exponent,
                                  int max_power);

} // namespace npspread::oracle

#endif
