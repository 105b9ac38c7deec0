#ifndef NPSPREAD_SPREAD_HPP
#define NPSPREAD_SPREAD_HPP

#include <optional>
#include <vector>

#include "npspread/monomial.hpp"
#include "npspread/polyhedral.hpp"

namespace npspread {

// The analytic spread of a monomial ideal is one more than the largest
// dimension of a compact face of its Newton polyhedron. It is computed here
// from the Newton polytope alone: a face of np(I) is a compact face of NP(I)
// exactly when its normal cone admits an all-negative combination, so the
// spread is 1 + max dim over certified faces.
//
// The halfspace/hyperplane bound: with np(I) on s hyperplanes w_i.u = b_i and
// facet halfspaces h_j.u <= c_j, any combination
//     W = sum alpha_i w_i + sum beta_j h_j,  beta >= 0,
// with every entry of W negative gives spread <= n + 1 - (s + k), where k is
// the minimal number of nonzero betas over all such combinations.

struct BoundCertificate {
    std::vector<Rational> alphas;          // per np equality, unrestricted
    std::vector<std::size_t> beta_support; // indices into np inequalities, |.| = k
    std::vector<Rational> betas;           // aligned with beta_support, each >= 1
    QVector combination;                   // every entry <= -1

    friend bool operator==(const BoundCertificate&, const BoundCertificate&) = default;
};

struct SpreadBound {
    int bound = 0;     // n + 1 - (s + k); n + 1 (vacuous) when no certificate exists
    std::size_t s = 0; // equality count of np(I)
    std::size_t k = 0; // minimal beta support size; meaningful only with a certificate
    std::optional<BoundCertificate> certificate;

    friend bool operator==(const SpreadBound&, const SpreadBound&) = default;
};

struct SpreadReport {
    int spread = 0;
    /// Certified face of np(I) of maximal dimension; indices refer to `polytope`.
    Face witness_face;
    /// np(I), the reference frame of witness_face.
    NewtonBody polytope;
    SpreadBound bound;

    friend bool operator==(const SpreadReport&, const SpreadReport&) = default;
};

SpreadReport analytic_spread(const MonomialIdeal& ideal);

/// Bound data only. The beta-support search proceeds by increasing subset
/// cardinality in lexicographic index order, so k is exact and the reported
/// support is the lexicographically least minimal one.
SpreadBound spread_bound(const MonomialIdeal& ideal);

// The hyperplane-matrix conditions. The column test is the classical
// formulation; it is implied by negative_combination but, with two or more
// hyperplanes, not equivalent to it — positive entries in different columns
// can sit in rows that force contradictory weights. The exact test, and the
// one the verdict uses, is negative_combination: some combination of the
// hyperplane normals is componentwise negative (then it exposes the whole
// polytope as a compact face, giving spread = dim np + 1).
struct BasicConditions {
    bool mu_le_n = false;                    // mu(I) <= n
    bool expected_hyperplane_count = false;  // s = n - mu(I) + 1
    bool every_column_positive = false;      // RREF normals: every column has a positive entry
    bool negative_combination = false;       // some span combination is componentwise negative

    friend bool operator==(const BasicConditions&, const BasicConditions&) = default;
};

struct BasicReport {
    bool basic = false;
    int mu = 0;
    int spread = 0;
    BasicConditions conditions;
    QMatrix rref_normals; // RREF of the np(I) hyperplane normals

    friend bool operator==(const BasicReport&, const BasicReport&) = default;
};

/// Classifies I as basic two independent ways — mu(I) == spread, and the
/// hyperplane-matrix conditions (mu_le_n, expected_hyperplane_count,
/// negative_combination) — and requires them to agree (internal_error
/// otherwise).
BasicReport is_basic(const MonomialIdeal& ideal);

enum class ReductionMethod { np_equality, power_witness };

struct ReductionReport {
    bool is_reduction = false;
    ReductionMethod method = ReductionMethod::np_equality;
    std::optional<int> witness_power; // least n <= max_power with J I^n = I^(n+1)

    friend bool operator==(const ReductionReport&, const ReductionReport&) = default;
};

/// Decides whether candidate is a reduction of ideal. For monomial pairs this
/// is complete: candidate is a reduction iff the Newton polyhedra coincide.
/// When true, a definitional witness power is searched up to max_power.
/// Errors unless candidate is a subideal of ideal.
ReductionReport check_reduction(const MonomialIdeal& candidate,
                                const MonomialIdeal& ideal,
                                int max_power = 6);

/// The ideal generated by the vertices of NP(I): the smallest monomial
/// reduction of I (every vertex is forced into any monomial reduction).
MonomialIdeal minimal_monomial_reduction(const MonomialIdeal& ideal);

/// Spread of an intersection of pairwise disjointly generated primary
/// components covering all ring variables: n - r + 1, no polyhedral work.
/// With cross_check, the intersection's spread is computed directly and must
/// agree. Errors name the violated hypothesis.
int spread_disjoint_primary(const std::vector<PrimaryComponent>& components,
                            bool cross_check = true);

/// Spread of p^a \cap q^b for p = (x vars, y vars), q = (y vars, z vars):
/// n - 1. The x and z groups must be nonempty; a, b >= 1. With cross_check,
/// the ideal is built explicitly and its spread must agree.
int spread_two_prime_powers(const std::vector<std::string>& x_vars,
                            const std::vector<std::string>& y_vars,
                            const std::vector<std::string>& z_vars,
                            const Integer& a,
                            const Integer& b,
                            bool cross_check = true);

} // namespace npspread

#endif
