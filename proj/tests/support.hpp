#ifndef NPSPREAD_TESTS_SUPPORT_HPP
#define NPSPREAD_TESTS_SUPPORT_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "npspread/monomial.hpp"
#include "npspread/polyhedral.hpp"
#include "npspread/qlinalg.hpp"

namespace npspread::testing {

inline QVector qv(std::vector<long> entries) {
    QVector v;
    v.reserve(entries.size());
    for (long e : entries) {
        v.emplace_back(e);
    }
    return v;
}

inline Ring ring3() { return Ring({"x", "y", "z"}); }

inline MonomialIdeal ideal_of(const Ring& r, const std::string& text) {
    return parse_ideal(r, text);
}

// Does the stored halfspace cut the same halfspace as (normal, rhs) modulo
// the equality system? That is: stored = lambda*(normal,rhs) + combination of
// the equalities, for some lambda > 0. lambda is pinned by the system unless
// the reference normal lies in the equality span, which a genuine facet
// normal never does.
inline bool halfspace_equivalent(const HRep& h, const Halfspace& stored,
                                 const QVector& normal, const Rational& rhs) {
    const std::size_t n = h.dim;
    const std::size_t s = h.equalities.size();
    std::vector<LinearConstraint> eqs;
    for (std::size_t c = 0; c <= n; ++c) {
        QVector row(1 + s);
        row[0] = c < n ? normal[c] : rhs;
        for (std::size_t i = 0; i < s; ++i) {
            row[1 + i] = c < n ? h.equalities[i].normal[c] : h.equalities[i].rhs;
        }
        eqs.push_back({std::move(row), c < n ? stored.normal[c] : stored.rhs});
    }
    auto sol = lp_feasible(eqs, {}, 1 + s);
    return sol && (*sol)[0] > 0;
}

inline bool hrep_has_equivalent_halfspace(const HRep& h, const QVector& normal,
                                          const Rational& rhs) {
    for (const Halfspace& f : h.inequalities) {
        if (halfspace_equivalent(h, f, normal, rhs)) {
            return true;
        }
    }
    return false;
}

inline bool in_cone(const QVector& x, const std::vector<QVector>& rays,
                    const std::vector<QVector>& spans) {
    const std::size_t n = x.size();
    const std::size_t unknowns = rays.size() + spans.size();
    std::vector<LinearConstraint> eqs;
    for (std::size_t c = 0; c < n; ++c) {
        QVector row(unknowns);
        for (std::size_t j = 0; j < rays.size(); ++j) {
            row[j] = rays[j][c];
        }
        for (std::size_t j = 0; j < spans.size(); ++j) {
            row[rays.size() + j] = spans[j][c];
        }
        eqs.push_back({std::move(row), x[c]});
    }
    std::vector<LinearConstraint> ineqs;
    for (std::size_t j = 0; j < rays.size(); ++j) {
        QVector row(unknowns, Rational(0));
        row[j] = -1;
        ineqs.push_back({std::move(row), Rational(0)});
    }
    return lp_feasible(eqs, ineqs, unknowns).has_value();
}

inline bool cones_equal(const NormalCone& a, const NormalCone& b) {
    auto contained = [](const NormalCone& inner, const NormalCone& outer) {
        for (const QVector& g : inner.ray_generators) {
            if (!in_cone(g, outer.ray_generators, outer.span_generators)) {
                return false;
            }
        }
        for (const QVector& g : inner.span_generators) {
            QVector neg = g;
            for (Rational& x : neg) {
                x = -x;
            }
            if (!in_cone(g, outer.ray_generators, outer.span_generators) ||
                !in_cone(neg, outer.ray_generators, outer.span_generators)) {
                return false;
            }
        }
        return true;
    };
    return contained(a, b) && contained(b, a);
}

inline MonomialIdeal random_ideal(std::mt19937_64& rng, const Ring& ring, int max_gens = 8,
                                  int max_exp = 8) {
    std::uniform_int_distribution<int> gen_count(1, max_gens);
    std::uniform_int_distribution<int> exponent(0, max_exp);
    for (;;) {
        std::vector<QVector> gens;
        const int g = gen_count(rng);
        for (int i = 0; i < g; ++i) {
            QVector e(ring.dim());
            bool zero = true;
            for (std::size_t c = 0; c < ring.dim(); ++c) {
                const int value = exponent(rng);
                e[c] = value;
                zero = zero && value == 0;
            }
            if (!zero) {
                gens.push_back(std::move(e));
            }
        }
        if (!gens.empty()) {
            return MonomialIdeal(ring, std::move(gens));
        }
    }
}

// p-primary monomial ideal on the given variable indices: pure powers of each
// variable plus extra monomials supported there.
inline MonomialIdeal random_primary(std::mt19937_64& rng, const Ring& ring,
                                    const std::vector<std::size_t>& support, int max_exp = 5,
                                    int extra = 2) {
    std::uniform_int_distribution<int> exponent(1, max_exp);
    std::uniform_int_distribution<int> maybe(0, max_exp);
    std::vector<QVector> gens;
    for (std::size_t c : support) {
        QVector e(ring.dim(), Rational(0));
        e[c] = exponent(rng);
        gens.push_back(std::move(e));
    }
    std::uniform_int_distribution<int> extra_count(0, extra);
    const int extras = extra_count(rng);
    for (int i = 0; i < extras; ++i) {
        QVector e(ring.dim(), Rational(0));
        bool zero = true;
        for (std::size_t c : support) {
            const int value = maybe(rng);
            e[c] = value;
            zero = zero && value == 0;
        }
        if (!zero) {
            gens.push_back(std::move(e));
        }
    }
    return MonomialIdeal(ring, std::move(gens));
}

} // namespace npspread::testing

#endif
