#ifndef NPSPREAD_QLINALG_HPP
#define NPSPREAD_QLINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "npspread/rational.hpp"

namespace npspread {

using QVector = std::vector<Rational>;

Rational dot(const QVector& a, const QVector& b);
bool is_zero_vector(const QVector& v);
/// Strict lexicographic order; used everywhere canonical sorting is needed.
bool lex_less(const QVector& a, const QVector& b);
bool componentwise_le(const QVector& a, const QVector& b);

/// Scales to an integer vector with entry gcd 1. Direction is preserved
/// (positive scaling only); the zero vector is returned unchanged.
QVector primitive(const QVector& v);
/// primitive() followed by a sign flip making the first nonzero entry positive.
QVector primitive_oriented(const QVector& v);
bool is_parallel(const QVector& a, const QVector& b);

struct QMatrix {
    std::vector<QVector> rows;

    QMatrix() = default;
    explicit QMatrix(std::vector<QVector> r);

    std::size_t row_count() const { return rows.size(); }
    std::size_t col_count() const { return rows.empty() ? 0 : rows.front().size(); }

    friend bool operator==(const QMatrix&, const QMatrix&) = default;
};

QMatrix transpose(const QMatrix& m);

struct RrefResult {
    QMatrix matrix;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form. Shape is preserved (zero rows stay in place at
/// the bottom); pivot columns are strictly increasing.
RrefResult rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// normal . x = rhs (equality) or normal . x <= rhs (inequality).
struct LinearConstraint {
    QVector normal;
    Rational rhs;

    friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    QVector point;      // feasible optimum when status == optimal
    Rational objective; // objective value at point
    QVector ray;        // improving recession direction when status == unbounded
};

/// Exact simplex over the rationals: minimize objective . x subject to the
/// given equalities and <=-inequalities, x unrestricted. Phase-1/phase-2 with
/// Bland's pivot rule, so it terminates and is deterministic for identical
/// input. Throws user_error on dimension mismatch.
LpSolution lp_solve(const QVector& objective,
                    const std::vector<LinearConstraint>& equalities,
                    const std::vector<LinearConstraint>& inequalities,
                    std::size_t unknowns);

/// Phase-1 only: a rational point satisfying every constraint exactly, or
/// nullopt when the system is infeasible.
std::optional<QVector> lp_feasible(const std::vector<LinearConstraint>& equalities,
                                   const std::vector<LinearConstraint>& inequalities,
                                   std::size_t unknowns);

} // namespace npspread

#endif
