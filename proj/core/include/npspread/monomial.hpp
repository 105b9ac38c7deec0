#ifndef NPSPREAD_MONOMIAL_HPP
#define NPSPREAD_MONOMIAL_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "npspread/polyhedral.hpp"
#include "npspread/qlinalg.hpp"

namespace npspread {

/// Ordered set of distinct variable names; fixes the exponent coordinates.
struct Ring {
    std::vector<std::string> variables;

    explicit Ring(std::vector<std::string> vars);
    std::size_t dim() const { return variables.size(); }

    friend bool operator==(const Ring&, const Ring&) = default;
};

// A monomial ideal, identified with its unique minimal generating set of
// exponent vectors. The zero ideal has no generators; the unit ideal is
// generated by the zero vector. Construction minimalizes: any generator
// divisible by another is dropped.
class MonomialIdeal {
public:
    MonomialIdeal(Ring ring, std::vector<QVector> exponents);

    static MonomialIdeal zero(Ring ring);
    static MonomialIdeal unit(Ring ring);

    const Ring& ring() const { return ring_; }
    /// Minimal generators, lex-sorted.
    const std::vector<QVector>& generators() const { return generators_; }
    std::size_t mu() const { return generators_.size(); }
    bool is_zero() const { return generators_.empty(); }
    bool is_unit() const;

    /// Membership of the monomial with this exponent vector (divisibility by
    /// some generator).
    bool contains(const QVector& exponent) const;
    /// other is a subideal of this.
    bool contains(const MonomialIdeal& other) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    Ring ring_;
    std::vector<QVector> generators_;
};

/// Same as the MonomialIdeal constructor; errors on negative or fractional
/// exponents.
MonomialIdeal minimalize(Ring ring, std::vector<QVector> exponents);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, const Integer& m);           // m >= 1
MonomialIdeal frobenius_power(const MonomialIdeal& a, const Integer& m); // m >= 1, entrywise scaling
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal radical(const MonomialIdeal& a);
/// Componentwise max (lcm) of generator pairs, minimalized. Agrees with
/// product when the generator variable supports are disjoint.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// Extends the ring by fresh variables; generators are zero-padded.
MonomialIdeal embed(const MonomialIdeal& a, const std::vector<std::string>& extra_variables);

struct NewtonBody {
    HRep hrep;
    VRep vrep;

    friend bool operator==(const NewtonBody&, const NewtonBody&) = default;
};

/// Convex hull of the generator exponent vectors. Errors on the zero ideal.
NewtonBody newton_polytope(const MonomialIdeal& a);
/// Newton polytope plus the nonnegative orthant. Errors on the zero ideal.
NewtonBody newton_polyhedron(const MonomialIdeal& a);

/// Membership of the exponent vector in the Newton polyhedron, i.e. of the
/// monomial in the integral closure. Exact constraint evaluation.
bool closure_contains(const MonomialIdeal& a, const QVector& exponent);

/// A p-primary piece of a decomposition: the prime is generated by
/// prime_vars, the ideal is supported on prime_vars with radical equal to the
/// prime. validate_primary_component checks exactly those two conditions.
struct PrimaryComponent {
    std::vector<std::string> prime_vars;
    MonomialIdeal ideal;
};

void validate_primary_component(const PrimaryComponent& component);

// Text grammar (shared with the CLI): a monomial is a product of factors
// `var` or `var^k`, optionally separated by `*` or whitespace; an ideal is a
// comma-separated monomial list, empty for the zero ideal; `1` is the unit
// monomial. Parse errors name the offending token and position.
QVector parse_monomial(const Ring& ring, std::string_view text);
MonomialIdeal parse_ideal(const Ring& ring, std::string_view text);

std::string format_monomial(const Ring& ring, const QVector& exponent);
std::string format_ideal(const MonomialIdeal& a);

} // namespace npspread

#endif
