// Acceptance suite: every check is exact (rational arithmetic, zero
// tolerance). Prints one PASS/FAIL line per criterion and exits nonzero if
// any criterion fails.

#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "npspread/monomial.hpp"
#include "npspread/oracle.hpp"
#include "npspread/polyhedral.hpp"
#include "npspread/spread.hpp"
#include "support.hpp"

using namespace npspread;
using namespace npspread::testing;

namespace {

struct Harness {
    int passed = 0;
    int failed = 0;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "PASS  " : "FAIL  ") << name << "\n";
        if (!ok && !detail.empty()) {
            std::cout << "      " << detail << "\n";
        }
        (ok ? passed : failed) += 1;
    }
};

struct HalfspaceLess {
    bool operator()(const Halfspace& a, const Halfspace& b) const {
        if (a.normal != b.normal) {
            return lex_less(a.normal, b.normal);
        }
        return a.rhs < b.rhs;
    }
};

using HalfspaceSet = std::set<Halfspace, HalfspaceLess>;

HalfspaceSet halfspace_set(const HRep& h) {
    HalfspaceSet out;
    for (const Halfspace& f : h.inequalities) {
        if (!out.insert(f).second) {
            throw internal_error("duplicate facet");
        }
    }
    return out;
}

// a "p.u >= rhs" constraint in canonical <= storage form
Halfspace ge(std::vector<long> normal, long rhs) {
    QVector n = qv(std::move(normal));
    for (Rational& x : n) {
        x = -x;
    }
    return Halfspace{primitive(n), Rational(-rhs)};
}

std::string ideal_text(const MonomialIdeal& a) { return format_ideal(a); }

} // namespace

int main() {
    Harness h;
    Ring r3({"x", "y", "z"});

    const MonomialIdeal triangle = parse_ideal(r3, "xy, xz, yz");
    const MonomialIdeal leaning = parse_ideal(r3, "xy, y^4z^4, x^4z^4");

    // ---- 1. exact reproduction of the worked values ----
    {
        const int s1 = analytic_spread(triangle).spread;
        const int s2 = analytic_spread(leaning).spread;
        std::ostringstream detail;
        detail << "got " << s1 << " and " << s2;
        h.check("1a  spread: (xy, xz, yz) = 3 and (xy, y^4z^4, x^4z^4) = 2",
                s1 == 3 && s2 == 2, detail.str());
    }
    {
        const HalfspaceSet expected1 = {ge({1, 1, 0}, 1), ge({1, 0, 1}, 1),
                                        ge({0, 1, 1}, 1), ge({1, 1, 1}, 2),
                                        ge({1, 0, 0}, 0), ge({0, 1, 0}, 0),
                                        ge({0, 0, 1}, 0)};
        const HalfspaceSet expected2 = {ge({1, 3, 0}, 4), ge({3, 1, 0}, 4),
                                        ge({4, 0, 1}, 4), ge({0, 4, 1}, 4),
                                        ge({1, 0, 0}, 0), ge({0, 1, 0}, 0),
                                        ge({0, 0, 1}, 0)};
        NewtonBody np1 = newton_polyhedron(triangle);
        NewtonBody np2 = newton_polyhedron(leaning);
        const bool ok = np1.hrep.equalities.empty() && np2.hrep.equalities.empty() &&
                        halfspace_set(np1.hrep) == expected1 && halfspace_set(np2.hrep) == expected2;
        h.check("1b  Newton polyhedra of both ideals match the two seven-facet systems", ok);
    }
    {
        NewtonBody np = newton_polytope(leaning);
        SpreadBound bound = spread_bound(leaning);
        bool ok = np.hrep.equalities.size() == 1 &&
                  is_parallel(np.hrep.equalities[0].normal, qv({-2, -2, 1})) &&
                  np.hrep.equalities[0] == Hyperplane{qv({2, 2, -1}), Rational(4)} &&
                  np.hrep.inequalities.size() == 3 &&
                  hrep_has_equivalent_halfspace(np.hrep, qv({1, -1, -1}), Rational(0)) &&
                  hrep_has_equivalent_halfspace(np.hrep, qv({-1, 1, -1}), Rational(0)) &&
                  hrep_has_equivalent_halfspace(np.hrep, qv({-1, -1, 1}), Rational(0)) &&
                  bound.s == 1 && bound.k == 1 && bound.bound == 2 && bound.certificate;
        if (ok) {
            // the certifying facet is the printed one: tight exactly on
            // (1,1,0) and (4,0,4), with an all-negative combination
            const Halfspace& facet = np.hrep.inequalities[bound.certificate->beta_support[0]];
            ok = dot(facet.normal, qv({1, 1, 0})) == facet.rhs &&
                 dot(facet.normal, qv({4, 0, 4})) == facet.rhs &&
                 dot(facet.normal, qv({0, 4, 4})) < facet.rhs;
            for (const Rational& x : bound.certificate->combination) {
                ok = ok && x < 0;
            }
        }
        h.check("1c  leaning polytope: hyperplane -2u-2v+w=-4, three halfspaces, s=1 k=1 "
                "certificate on the expected facet",
                ok);
    }
    {
        const MonomialIdeal degenerate =
            parse_ideal(r3, "x^20, x^8y^2, x^14yz^10, x^2y^10, x^5y^6z^10, y^30, xy^20z^10");
        NewtonBody np = newton_polytope(degenerate);
        SpreadBound bound = spread_bound(degenerate);
        const int spread = analytic_spread(degenerate).spread;
        const std::vector<std::pair<QVector, long>> nine = {
            {qv({-1, -6, 0}), -20},     {qv({-4, -3, 0}), -38}, {qv({-10, -1, 0}), -30},
            {qv({-70, -20, 13}), -340}, {qv({-50, -90, 21}), -580},
            {qv({0, 0, -1}), 0},        {qv({0, 0, 1}), 10},    {qv({15, 10, 8}), 300},
            {qv({190, 130, 111}), 3900}};
        bool ok = np.hrep.equalities.empty() && np.hrep.inequalities.size() == 9;
        for (const auto& [normal, rhs] : nine) {
            ok = ok && hrep_has_equivalent_halfspace(np.hrep, normal, Rational(rhs));
        }
        ok = ok && bound.s == 0 && bound.k == 2 && bound.bound == 2 && spread == 2;
        // k-minimality: no single facet normal is componentwise negative
        for (const Halfspace& f : np.hrep.inequalities) {
            bool all_negative = true;
            for (const Rational& x : f.normal) {
                all_negative = all_negative && x < 0;
            }
            ok = ok && !all_negative;
        }
        h.check("1d  degenerate 7-generator ideal: nine facets, s=0, k=2, bound 2, spread 2, "
                "all singletons fail",
                ok);
    }
    {
        const MonomialIdeal a = parse_ideal(r3, "x^3, xy, y^2");
        const MonomialIdeal b = parse_ideal(r3, "y^4, y^2z^2, z^3");
        const MonomialIdeal computed = intersect(a, b);
        const MonomialIdeal stated = parse_ideal(r3, "y^2z^2, y^4, xyz^2, x^3z^3");
        std::ostringstream detail;
        detail << "computed (" << ideal_text(computed) << "), stated (" << ideal_text(stated)
               << "); xyz^2 is divisible by no generator of (" << ideal_text(b) << ")";
        h.check("1e-i   intersect((x^3,xy,y^2),(y^4,y^2z^2,z^3)) equals the stated four "
                "generators",
                computed == stated, detail.str());
        h.check("1e-ii  that intersection has spread 3",
                analytic_spread(computed).spread == 3);
        h.check("1e-iii the stated four-generator ideal itself has spread 3",
                analytic_spread(stated).spread == 3);
    }
    {
        Ring r2({"x", "y"});
        MonomialIdeal big = power(MonomialIdeal(r2, {qv({1, 0}), qv({0, 1})}), 2);
        MonomialIdeal small(r2, {qv({2, 0}), qv({0, 2})});
        ReductionReport report = check_reduction(small, big);
        h.check("1f  (x^2, y^2) is a reduction of (x, y)^2 with definitional witness n = 1",
                report.is_reduction && report.witness_power == 1);
    }

    // ---- 2. theorem-level random suites ----
    std::mt19937_64 rng(0x5eed2026);

    std::vector<MonomialIdeal> suite3;
    for (int i = 0; i < 200; ++i) {
        suite3.push_back(random_ideal(rng, r3, 8, 8));
    }
    std::vector<SpreadReport> reports3;
    reports3.reserve(suite3.size());
    for (const MonomialIdeal& ideal : suite3) {
        reports3.push_back(analytic_spread(ideal));
    }
    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < suite3.size(); ++i) {
            if (!reports3[i].bound.certificate ||
                reports3[i].spread != reports3[i].bound.bound) {
                ok = false;
                detail = "mismatch on (" + ideal_text(suite3[i]) + ")";
                break;
            }
        }
        h.check("2a  three variables: spread equals the halfspace bound on 200 random ideals",
                ok, detail);
    }
    {
        Ring r4({"x", "y", "z", "w"});
        bool ok = true;
        std::string detail;
        for (int i = 0; i < 100; ++i) {
            MonomialIdeal ideal = random_ideal(rng, r4, 8, 8);
            SpreadReport report = analytic_spread(ideal);
            if (report.bound.certificate && report.spread > report.bound.bound) {
                ok = false;
                detail = "violated on (" + ideal_text(ideal) + ")";
                break;
            }
        }
        h.check("2b  four variables: spread stays within the bound on 100 random ideals "
                "whenever a certificate exists",
                ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i < 50 && ok; ++i) {
            Ring base(i % 2 == 0 ? std::vector<std::string>{"x", "y"}
                                 : std::vector<std::string>{"x", "y", "z"});
            MonomialIdeal ideal = random_ideal(rng, base, 6, 6);
            const int before = analytic_spread(ideal).spread;
            std::vector<std::string> fresh = i % 3 == 0 ? std::vector<std::string>{"s"}
                                                        : std::vector<std::string>{"s", "t"};
            const int after = analytic_spread(embed(ideal, fresh)).spread;
            if (before != after) {
                ok = false;
                detail = "embedding changed the spread of (" + ideal_text(ideal) + ")";
            }
        }
        h.check("2c  embedding into larger rings preserves the spread (50 random ideals)", ok,
                detail);
    }
    {
        bool ok = true;
        std::string detail;
        std::uniform_int_distribution<int> nvars(2, 6), parts(1, 3);
        for (int i = 0; i < 50 && ok; ++i) {
            const int n = nvars(rng);
            std::vector<std::string> names;
            for (int v = 0; v < n; ++v) {
                names.push_back("x" + std::to_string(v + 1));
            }
            Ring ring(names);
            const int r = std::min(parts(rng), n);
            // contiguous partition of the variables into r nonempty blocks
            std::vector<std::vector<std::size_t>> blocks(static_cast<std::size_t>(r));
            for (int v = 0; v < n; ++v) {
                const int block = std::min(r - 1, v * r / n);
                blocks[static_cast<std::size_t>(block)].push_back(static_cast<std::size_t>(v));
            }
            std::vector<PrimaryComponent> components;
            for (const auto& block : blocks) {
                std::vector<std::string> prime;
                for (std::size_t c : block) {
                    prime.push_back(names[c]);
                }
                components.push_back({prime, random_primary(rng, ring, block)});
            }
            const int value = spread_disjoint_primary(components, true);
            if (value != n - r + 1) {
                ok = false;
                detail = "family value " + std::to_string(value) + " != " +
                         std::to_string(n - r + 1);
            }
        }
        h.check("2d  disjointly generated primary families: spread = n - r + 1 on 50 random "
                "families, fast path and direct computation agreeing",
                ok, detail);
    }
    {
        // Frobenius-power families: value independent of generator exponents
        // and of the powers applied to each component
        bool ok = true;
        Ring ring({"x1", "x2", "y1", "y2"});
        std::uniform_int_distribution<int> e(1, 6), m(1, 3);
        for (int i = 0; i < 10 && ok; ++i) {
            MonomialIdeal q1(ring, {QVector{Rational(e(rng)), 0, 0, 0},
                                    QVector{0, Rational(e(rng)), 0, 0}});
            MonomialIdeal q2(ring, {QVector{0, 0, Rational(e(rng)), 0},
                                    QVector{0, 0, 0, Rational(e(rng))}});
            std::vector<PrimaryComponent> components;
            components.push_back({{"x1", "x2"}, power(q1, m(rng))});
            components.push_back({{"y1", "y2"}, power(q2, m(rng))});
            ok = spread_disjoint_primary(components, true) == 3; // n + 1 - r
        }
        h.check("2e  pure-power families: spread is independent of exponents and powers", ok);
    }
    {
        bool ok = true;
        std::string detail;
        for (int s = 1; s <= 2 && ok; ++s) {
            for (int t = 0; t <= 2 && ok; ++t) {
                for (int r = 1; r <= 2 && ok; ++r) {
                    std::vector<std::string> xs, ys, zs;
                    for (int i = 0; i < s; ++i) {
                        xs.push_back("x" + std::to_string(i + 1));
                    }
                    for (int i = 0; i < t; ++i) {
                        ys.push_back("y" + std::to_string(i + 1));
                    }
                    for (int i = 0; i < r; ++i) {
                        zs.push_back("z" + std::to_string(i + 1));
                    }
                    for (int a = 1; a <= 3 && ok; ++a) {
                        for (int b = 1; b <= 3 && ok; ++b) {
                            const int n = s + t + r;
                            if (spread_two_prime_powers(xs, ys, zs, a, b, true) != n - 1) {
                                ok = false;
                                detail = "failed at s=" + std::to_string(s) +
                                         " t=" + std::to_string(t) + " r=" + std::to_string(r) +
                                         " a=" + std::to_string(a) + " b=" + std::to_string(b);
                            }
                        }
                    }
                }
            }
        }
        h.check("2f  powers of two overlapping primes: spread = n - 1 over the whole "
                "(s,t,r,a,b) grid, verified directly",
                ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        std::uniform_int_distribution<int> m_dist(3, 5);
        for (int i = 0; i < 50 && ok; ++i) {
            const int m = m_dist(rng);
            std::vector<std::string> names;
            for (int v = 0; v < m; ++v) {
                names.push_back("x" + std::to_string(v + 1));
            }
            Ring ring(names);
            // two supports that overlap or not, together covering all m vars
            std::uniform_int_distribution<int> cut1(0, m - 2), cut2(1, m - 1);
            const int hi = cut1(rng), lo = std::min(cut2(rng), hi + 1);
            std::vector<std::size_t> s1, s2;
            for (int v = 0; v <= hi; ++v) {
                s1.push_back(static_cast<std::size_t>(v));
            }
            for (int v = lo; v < m; ++v) {
                s2.push_back(static_cast<std::size_t>(v));
            }
            MonomialIdeal q1 = random_primary(rng, ring, s1);
            MonomialIdeal q2 = random_primary(rng, ring, s2);
            const int spread = analytic_spread(intersect(q1, q2)).spread;
            if (spread < m - 1 || spread > m) {
                ok = false;
                detail = "spread " + std::to_string(spread) + " outside [" +
                         std::to_string(m - 1) + ", " + std::to_string(m) + "]";
            }
        }
        h.check("2g  intersections of two monomial-primary ideals on m variables: "
                "m - 1 <= spread <= m on 50 random pairs",
                ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < suite3.size() && ok; ++i) {
            BasicReport report = is_basic(suite3[i]); // throws on classifier disagreement
            if (report.basic != (report.mu == report.spread)) {
                ok = false;
            }
            if (suite3[i].mu() <= 2 && !report.basic) {
                ok = false;
                detail = "two-generator ideal not basic: (" + ideal_text(suite3[i]) + ")";
            }
        }
        Ring r4({"x", "y", "z", "w"});
        for (int i = 0; i < 40 && ok; ++i) {
            MonomialIdeal ideal = random_ideal(rng, r4, i % 2 == 0 ? 2 : 8, 6);
            BasicReport report = is_basic(ideal);
            if (ideal.mu() <= 2 && !report.basic) {
                ok = false;
                detail = "two-generator ideal not basic: (" + ideal_text(ideal) + ")";
            }
        }
        h.check("2h  basic classifiers agree everywhere; every mu <= 2 ideal is basic", ok,
                detail);
    }

    // ---- 3. oracle equivalence ----
    {
        bool ok = true;
        std::string detail;
        std::vector<MonomialIdeal> bodies = {
            triangle, leaning,
            parse_ideal(r3, "x^20, x^8y^2, x^14yz^10, x^2y^10, x^5y^6z^10, y^30, xy^20z^10"),
            parse_ideal(r3, "x^2y^2, x^4z^4, y^4z^4, xy^3z^2, x^3yz^2")};
        int compared = 0;
        for (std::size_t i = 0; i < suite3.size(); ++i) {
            bodies.push_back(suite3[i]);
        }
        for (std::size_t i = 0; i < bodies.size() && ok; ++i) {
            NewtonBody npoly = newton_polyhedron(bodies[i]);
            auto brute = oracle::compact_face_bruteforce(npoly.hrep, npoly.vrep);
            if (!brute) {
                continue; // excluded by the subset budget
            }
            ++compared;
            const int fast = max_compact_face_dim(npoly.hrep, npoly.vrep);
            if (*brute != fast || *brute + 1 != analytic_spread(bodies[i]).spread) {
                ok = false;
                detail = "disagreement on (" + ideal_text(bodies[i]) + ")";
            }
        }
        ok = ok && compared >= 200;
        h.check("3a  brute-force compact-face dimension matches the incidence computation on "
                "the worked ideals plus the three-variable suite",
                ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        std::uniform_int_distribution<int> e(0, 8);
        for (std::size_t i = 0; i < suite3.size() && ok; ++i) {
            for (int probe = 0; probe < 3; ++probe) {
                QVector b = qv({e(rng), e(rng), e(rng)});
                const bool fast = closure_contains(suite3[i], b);
                const bool slow = oracle::closure_membership_by_powers(suite3[i], b, 10);
                if (slow && !fast) {
                    ok = false;
                    detail = "power membership without polyhedral membership on (" +
                             ideal_text(suite3[i]) + ")";
                }
                if (!fast && slow) {
                    ok = false;
                }
            }
        }
        h.check("3b  closure membership by powers is consistent with the polyhedral test "
                "across the three-variable suite",
                ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < suite3.size() && ok; ++i) {
            MonomialIdeal red = minimal_monomial_reduction(suite3[i]);
            ReductionReport report = check_reduction(red, suite3[i], 5);
            if (!report.is_reduction) {
                ok = false;
                detail = "vertex ideal rejected for (" + ideal_text(suite3[i]) + ")";
                break;
            }
            auto witness = oracle::reduction_by_definition(red, suite3[i], 5);
            if (witness && report.witness_power != witness) {
                ok = false;
            }
            // a non-reduction must have no definitional witness: drop one
            // vertex if possible
            if (red.mu() > 1) {
                std::vector<QVector> rest(red.generators().begin(),
                                          red.generators().end() - 1);
                MonomialIdeal smaller(r3, rest);
                ReductionReport none = check_reduction(smaller, suite3[i], 3);
                if (none.is_reduction ||
                    oracle::reduction_by_definition(smaller, suite3[i], 3)) {
                    ok = false;
                    detail = "proper vertex subset accepted for (" + ideal_text(suite3[i]) + ")";
                }
            }
        }
        h.check("3c  reduction decisions are consistent with definitional witnesses across "
                "the three-variable suite",
                ok, detail);
    }

    // ---- 4. minimal monomial reductions ----
    {
        MonomialIdeal red = minimal_monomial_reduction(leaning);
        h.check("4a  (xy, y^4z^4, x^4z^4) is its own minimal monomial reduction",
                red == leaning);
    }
    {
        MonomialIdeal five = parse_ideal(r3, "x^2y^2, x^4z^4, y^4z^4, xy^3z^2, x^3yz^2");
        MonomialIdeal red = minimal_monomial_reduction(five);
        ReductionReport report = check_reduction(red, five);
        auto witness = oracle::reduction_by_definition(red, five, 6);
        const bool ok = red.mu() == 3 && report.is_reduction &&
                        (!witness || report.witness_power == witness);
        h.check("4b  the five-generator ideal reduces to its three Newton-polyhedron vertices",
                ok);
    }

    std::cout << "\n" << h.passed << " criteria passed, " << h.failed << " failed\n";
    return h.failed == 0 ? 0 : 1;
}
