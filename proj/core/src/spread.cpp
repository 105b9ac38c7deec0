#include "npspread/spread.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "npspread/oracle.hpp"

namespace npspread {

namespace {

// Feasibility of: alphas free, beta >= 1 on the chosen inequalities, and
// sum(alpha_i w_i) + sum(beta_j h_j) <= -1 componentwise.
std::optional<BoundCertificate> support_certificate(const HRep& np,
                                                    const std::vector<std::size_t>& support) {
    const std::size_t n = np.dim;
    const std::size_t s = np.equalities.size();
    const std::size_t k = support.size();
    const std::size_t unknowns = s + k;

    std::vector<LinearConstraint> ineqs;
    for (std::size_t c = 0; c < n; ++c) {
        QVector row(unknowns);
        for (std::size_t i = 0; i < s; ++i) {
            row[i] = np.equalities[i].normal[c];
        }
        for (std::size_t j = 0; j < k; ++j) {
            row[s + j] = np.inequalities[support[j]].normal[c];
        }
        ineqs.push_back({std::move(row), Rational(-1)});
    }
    for (std::size_t j = 0; j < k; ++j) {
        QVector row(unknowns, Rational(0));
        row[s + j] = -1;
        ineqs.push_back({std::move(row), Rational(-1)});
    }
    auto point = lp_feasible({}, ineqs, unknowns);
    if (!point) {
        return std::nullopt;
    }
    BoundCertificate cert;
    cert.alphas.assign(point->begin(), point->begin() + static_cast<long>(s));
    cert.beta_support = support;
    cert.betas.assign(point->begin() + static_cast<long>(s), point->end());
    cert.combination.assign(n, Rational(0));
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < s; ++i) {
            cert.combination[c] += cert.alphas[i] * np.equalities[i].normal[c];
        }
        for (std::size_t j = 0; j < k; ++j) {
            cert.combination[c] += cert.betas[j] * np.inequalities[support[j]].normal[c];
        }
        if (cert.combination[c] > -1) {
            throw internal_error("bound certificate is not componentwise negative");
        }
    }
    return cert;
}

// Any combination with beta >= 0 over all inequalities; scaling turns a
// solution into one supported on its nonzero betas, so this decides whether
// any support size works at all.
bool any_certificate_exists(const HRep& np) {
    const std::size_t n = np.dim;
    const std::size_t s = np.equalities.size();
    const std::size_t t = np.inequalities.size();
    const std::size_t unknowns = s + t;

    std::vector<LinearConstraint> ineqs;
    for (std::size_t c = 0; c < n; ++c) {
        QVector row(unknowns);
        for (std::size_t i = 0; i < s; ++i) {
            row[i] = np.equalities[i].normal[c];
        }
        for (std::size_t j = 0; j < t; ++j) {
            row[s + j] = np.inequalities[j].normal[c];
        }
        ineqs.push_back({std::move(row), Rational(-1)});
    }
    for (std::size_t j = 0; j < t; ++j) {
        QVector row(unknowns, Rational(0));
        row[s + j] = -1;
        ineqs.push_back({std::move(row), Rational(0)});
    }
    return lp_feasible({}, ineqs, unknowns).has_value();
}

// Advances to the next k-subset of {0..t-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& subset, std::size_t t) {
    const std::size_t k = subset.size();
    for (std::size_t i = k; i-- > 0;) {
        if (subset[i] + (k - i) < t) {
            ++subset[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

SpreadBound bound_from_polytope(const HRep& np, std::size_t n) {
    SpreadBound out;
    out.s = np.equalities.size();

    if (!any_certificate_exists(np)) {
        out.bound = static_cast<int>(n) + 1; // vacuous; flagged by the absent certificate
        out.k = 0;
        return out;
    }

    const std::size_t t = np.inequalities.size();
    for (std::size_t k = 0; k <= t; ++k) {
        std::vector<std::size_t> subset(k);
        for (std::size_t i = 0; i < k; ++i) {
            subset[i] = i;
        }
        do {
            auto cert = support_certificate(np, subset);
            if (cert) {
                out.k = k;
                out.bound = static_cast<int>(n) + 1 - static_cast<int>(out.s + k);
                out.certificate = std::move(cert);
                return out;
            }
        } while (next_combination(subset, t));
    }
    throw internal_error("combination exists over all inequalities but no support was found");
}

} // namespace

SpreadBound spread_bound(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) {
        throw user_error("the zero ideal has no analytic spread");
    }
    NewtonBody np = newton_polytope(ideal);
    return bound_from_polytope(np.hrep, ideal.ring().dim());
}

SpreadReport analytic_spread(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) {
        throw user_error("the zero ideal has no analytic spread");
    }
    const std::size_t n = ideal.ring().dim();

    SpreadReport report;
    report.polytope = newton_polytope(ideal);
    report.bound = bound_from_polytope(report.polytope.hrep, n);

    // A face of np(I) is a compact face of NP(I) exactly when its normal cone
    // meets the open negative orthant; the spread is one more than the top
    // certified dimension. Faces arrive sorted by dimension, so scan from the
    // high end and stop at the first certified face.
    std::vector<Face> faces = enumerate_faces(report.polytope.hrep, report.polytope.vrep);
    bool found = false;
    std::size_t end = faces.size();
    while (end > 0 && !found) {
        const int d = faces[end - 1].dim;
        std::size_t begin = end;
        while (begin > 0 && faces[begin - 1].dim == d) {
            --begin;
        }
        // faces within one dimension are already in canonical order; the
        // first certified one is the deterministic witness
        for (std::size_t i = begin; i < end; ++i) {
            if (cone_meets_open_negative_orthant(normal_cone(report.polytope.hrep, faces[i]))) {
                report.spread = d + 1;
                report.witness_face = faces[i];
                found = true;
                break;
            }
        }
        end = begin;
    }
    if (!found) {
        throw internal_error("no face of the Newton polytope is certified compact");
    }
    if (report.spread < 1 || report.spread > static_cast<int>(n)) {
        throw internal_error("analytic spread out of range");
    }
    if (report.bound.certificate && report.spread > report.bound.bound) {
        throw internal_error("analytic spread exceeds the halfspace bound");
    }
    return report;
}

BasicReport is_basic(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) {
        throw user_error("the zero ideal is not classified");
    }
    const std::size_t n = ideal.ring().dim();
    SpreadReport spread = analytic_spread(ideal);

    BasicReport report;
    report.mu = static_cast<int>(ideal.mu());
    report.spread = spread.spread;

    const auto& equalities = spread.polytope.hrep.equalities;
    const std::size_t s = equalities.size();
    if (s > 0) {
        QMatrix normals;
        for (const Hyperplane& e : equalities) {
            normals.rows.push_back(e.normal);
        }
        report.rref_normals = rref(normals).matrix;
    }

    report.conditions.mu_le_n = report.mu <= static_cast<int>(n);
    report.conditions.expected_hyperplane_count =
        static_cast<int>(s) == static_cast<int>(n) - report.mu + 1;
    bool columns_ok = s > 0;
    for (std::size_t c = 0; columns_ok && c < n; ++c) {
        bool positive = false;
        for (const QVector& row : report.rref_normals.rows) {
            if (row[c] > 0) {
                positive = true;
                break;
            }
        }
        columns_ok = positive;
    }
    report.conditions.every_column_positive = columns_ok;

    // Exact sign test: does some combination of the hyperplane normals have
    // all entries negative? Equivalently, does the lineality span of the
    // normal fan meet the open negative orthant? This is what the column
    // test approximates; see (x^8yz^4w^4, x^7y^2z^4w^5, xy^8zw^5) for an
    // ideal where the two differ.
    if (s > 0) {
        NormalCone span_only;
        span_only.dim = n;
        for (const Hyperplane& e : equalities) {
            span_only.span_generators.push_back(e.normal);
        }
        report.conditions.negative_combination =
            cone_meets_open_negative_orthant(span_only).has_value();
    }

    const bool by_spread = report.mu == report.spread;
    const bool by_conditions = report.conditions.mu_le_n &&
                               report.conditions.expected_hyperplane_count &&
                               report.conditions.negative_combination;
    if (by_spread != by_conditions) {
        std::ostringstream msg;
        msg << "basic-ideal classifiers disagree on (" << format_ideal(ideal)
            << "): mu = " << report.mu << ", spread = " << report.spread
            << ", s = " << s;
        throw internal_error(msg.str());
    }
    report.basic = by_spread;
    return report;
}

ReductionReport check_reduction(const MonomialIdeal& candidate,
                                const MonomialIdeal& ideal,
                                int max_power) {
    if (candidate.ring() != ideal.ring()) {
        throw user_error("ideals live in different rings");
    }
    if (!ideal.contains(candidate)) {
        throw user_error("candidate is not contained in the ideal");
    }

    ReductionReport report;
    if (candidate.is_zero() || ideal.is_zero()) {
        // the only subideal pair involving zero with J I^n = I^(n+1) is 0 in 0
        report.is_reduction = candidate.is_zero() && ideal.is_zero();
    } else {
        report.is_reduction =
            newton_polyhedron(candidate).hrep == newton_polyhedron(ideal).hrep;
    }
    if (report.is_reduction) {
        report.witness_power = oracle::reduction_by_definition(candidate, ideal, max_power);
        if (report.witness_power) {
            report.method = ReductionMethod::power_witness;
        }
    }
    return report;
}

MonomialIdeal minimal_monomial_reduction(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) {
        throw user_error("the zero ideal has no reductions");
    }
    NewtonBody np = newton_polyhedron(ideal);
    return MonomialIdeal(ideal.ring(), np.vrep.vertices);
}

int spread_disjoint_primary(const std::vector<PrimaryComponent>& components, bool cross_check) {
    if (components.empty()) {
        throw user_error("no primary components given");
    }
    const Ring& ring = components.front().ideal.ring();
    for (const PrimaryComponent& c : components) {
        if (c.ideal.ring() != ring) {
            throw user_error("primary components live in different rings");
        }
        validate_primary_component(c);
    }
    std::set<std::string> used;
    for (const PrimaryComponent& c : components) {
        for (const std::string& name : c.prime_vars) {
            if (!used.insert(name).second) {
                throw user_error("components are not disjointly generated: variable '" + name +
                                 "' appears twice");
            }
        }
    }
    for (const std::string& name : ring.variables) {
        if (used.find(name) == used.end()) {
            throw user_error("variable '" + name + "' is not covered by any component");
        }
    }

    const int n = static_cast<int>(ring.dim());
    const int r = static_cast<int>(components.size());
    const int value = n - r + 1;

    if (cross_check) {
        MonomialIdeal intersection = components.front().ideal;
        for (std::size_t i = 1; i < components.size(); ++i) {
            intersection = intersect(intersection, components[i].ideal);
        }
        const int direct = analytic_spread(intersection).spread;
        if (direct != value) {
            std::ostringstream msg;
            msg << "disjoint-primary formula " << value
                << " disagrees with direct computation " << direct;
            throw internal_error(msg.str());
        }
    }
    return value;
}

int spread_two_prime_powers(const std::vector<std::string>& x_vars,
                            const std::vector<std::string>& y_vars,
                            const std::vector<std::string>& z_vars,
                            const Integer& a,
                            const Integer& b,
                            bool cross_check) {
    if (x_vars.empty() || z_vars.empty()) {
        throw user_error("the x and z variable groups must be nonempty");
    }
    if (a < 1 || b < 1) {
        throw user_error("powers must be at least 1");
    }
    std::vector<std::string> vars = x_vars;
    vars.insert(vars.end(), y_vars.begin(), y_vars.end());
    vars.insert(vars.end(), z_vars.begin(), z_vars.end());
    Ring ring(vars); // also rejects duplicates across groups

    auto prime_on = [&ring](const std::vector<std::string>& names) {
        std::vector<QVector> gens;
        for (const std::string& name : names) {
            auto it = std::find(ring.variables.begin(), ring.variables.end(), name);
            QVector e(ring.dim(), Rational(0));
            e[static_cast<std::size_t>(it - ring.variables.begin())] = 1;
            gens.push_back(std::move(e));
        }
        return MonomialIdeal(ring, std::move(gens));
    };

    std::vector<std::string> p_vars = x_vars;
    p_vars.insert(p_vars.end(), y_vars.begin(), y_vars.end());
    std::vector<std::string> q_vars = y_vars;
    q_vars.insert(q_vars.end(), z_vars.begin(), z_vars.end());

    const int n = static_cast<int>(ring.dim());
    const int value = n - 1;

    if (cross_check) {
        MonomialIdeal intersection =
            intersect(power(prime_on(p_vars), a), power(prime_on(q_vars), b));
        const int direct = analytic_spread(intersection).spread;
        if (direct != value) {
            std::ostringstream msg;
            msg << "two-prime-power formula " << value
                << " disagrees with direct computation " << direct;
            throw internal_error(msg.str());
        }
    }
    return value;
}

} // namespace npspread
