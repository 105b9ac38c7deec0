#include "npspread/oracle.hpp"

#include <algorithm>

namespace npspread::oracle {

namespace {

struct SubsetSearch {
    const HRep& h;
    std::size_t n;
    std::size_t budget = subset_budget;
    bool exhausted = false;
    int best = -1;

    // region(S): equalities, the inequalities in S tightened to equalities,
    // every inequality kept as <=.
    void region_constraints(const std::vector<std::size_t>& tight,
                            std::vector<LinearConstraint>& eqs,
                            std::vector<LinearConstraint>& les) const {
        eqs.clear();
        les.clear();
        for (const Hyperplane& e : h.equalities) {
            eqs.push_back({e.normal, e.rhs});
        }
        for (std::size_t j : tight) {
            eqs.push_back({h.inequalities[j].normal, h.inequalities[j].rhs});
        }
        for (const Halfspace& f : h.inequalities) {
            les.push_back({f.normal, f.rhs});
        }
    }

    // Bodies live in the nonnegative orthant, so a face is bounded exactly
    // when the coordinate sum is bounded above on it.
    LpSolution coordinate_sum_max(const std::vector<std::size_t>& tight) const {
        std::vector<LinearConstraint> eqs, les;
        region_constraints(tight, eqs, les);
        return lp_solve(QVector(n, Rational(-1)), eqs, les, n);
    }

    Rational minimum_of(const QVector& objective, const std::vector<std::size_t>& tight) const {
        std::vector<LinearConstraint> eqs, les;
        region_constraints(tight, eqs, les);
        LpSolution sol = lp_solve(objective, eqs, les, n);
        if (sol.status != LpStatus::optimal) {
            throw internal_error("face minimization did not reach an optimum");
        }
        return sol.objective;
    }

    // Honest dimension of a bounded face: close the tight set under implied
    // equalities, then count rank.
    int bounded_dimension(const std::vector<std::size_t>& tight, const QVector& point) {
        std::vector<bool> in_tight(h.inequalities.size(), false);
        for (std::size_t j : tight) {
            in_tight[j] = true;
        }
        QMatrix normals;
        for (const Hyperplane& e : h.equalities) {
            normals.rows.push_back(e.normal);
        }
        for (std::size_t j : tight) {
            normals.rows.push_back(h.inequalities[j].normal);
        }
        for (std::size_t j = 0; j < h.inequalities.size(); ++j) {
            if (in_tight[j]) {
                continue;
            }
            const Halfspace& f = h.inequalities[j];
            // implied equalities are tight at every point, so the feasible
            // point prefilters the candidates
            if (dot(f.normal, point) != f.rhs) {
                continue;
            }
            if (minimum_of(f.normal, tight) == f.rhs) {
                normals.rows.push_back(f.normal);
            }
        }
        return static_cast<int>(n) - static_cast<int>(rank(normals));
    }

    // Depth-first over tight subsets in index order. Feasibility and
    // unboundedness certificates are inherited where valid; bounded regions
    // close the search branch, since subsets only shrink the face.
    void visit(std::vector<std::size_t>& tight, std::size_t from, const QVector& point) {
        if (exhausted) {
            return;
        }
        if (budget == 0) {
            exhausted = true;
            return;
        }
        --budget;

        LpSolution top = coordinate_sum_max(tight);
        if (top.status == LpStatus::infeasible) {
            throw internal_error("subset search visited an infeasible region");
        }
        if (top.status == LpStatus::optimal) {
            best = std::max(best, bounded_dimension(tight, point));
            return;
        }

        for (std::size_t j = from; j < h.inequalities.size(); ++j) {
            const Halfspace& f = h.inequalities[j];
            QVector child_point;
            if (dot(f.normal, point) == f.rhs) {
                child_point = point;
            } else {
                std::vector<LinearConstraint> eqs, les;
                tight.push_back(j);
                region_constraints(tight, eqs, les);
                tight.pop_back();
                auto feasible = lp_feasible(eqs, les, n);
                if (!feasible) {
                    continue;
                }
                child_point = std::move(*feasible);
            }
            tight.push_back(j);
            visit(tight, j + 1, child_point);
            tight.pop_back();
            if (exhausted) {
                return;
            }
        }
    }
};

} // namespace

std::optional<int> compact_face_bruteforce(const HRep& h, const VRep& v) {
    if (h.dim != v.dim) {
        throw user_error("H-rep and V-rep dimension mismatch");
    }
    for (const QVector& p : v.vertices) {
        for (const Rational& x : p) {
            if (x < 0) {
                throw user_error("compact_face_bruteforce expects a body in the nonnegative orthant");
            }
        }
    }
    for (const QVector& r : v.rays) {
        for (const Rational& x : r) {
            if (x < 0) {
                throw user_error("compact_face_bruteforce expects a body in the nonnegative orthant");
            }
        }
    }

    SubsetSearch search{h, h.dim};
    std::vector<LinearConstraint> eqs, les;
    search.region_constraints({}, eqs, les);
    auto start = lp_feasible(eqs, les, h.dim);
    if (!start) {
        return -1; // empty polyhedron, no faces
    }
    std::vector<std::size_t> tight;
    search.visit(tight, 0, *start);
    if (search.exhausted) {
        return std::nullopt;
    }
    return search.best;
}

std::optional<int> reduction_by_definition(const MonomialIdeal& candidate,
                                           const MonomialIdeal& ideal,
                                           int max_power) {
    if (!ideal.contains(candidate)) {
        throw user_error("candidate is not contained in the ideal");
    }
    MonomialIdeal ideal_power = ideal; // I^n
    for (int n = 1; n <= max_power; ++n) {
        MonomialIdeal lhs = product(candidate, ideal_power);
        MonomialIdeal rhs = product(ideal_power, ideal);
        if (lhs == rhs) {
            return n;
        }
        ideal_power = std::move(rhs);
    }
    return std::nullopt;
}

bool closure_membership_by_powers(const MonomialIdeal& ideal,
                                  const QVector& exponent,
                                  int max_power) {
    if (ideal.is_zero()) {
        return false;
    }
    MonomialIdeal ideal_power = ideal;
    for (int k = 1; k <= max_power; ++k) {
        QVector scaled = exponent;
        for (Rational& x : scaled) {
            x *= k;
        }
        if (ideal_power.contains(scaled)) {
            return true;
        }
        if (k < max_power) {
            ideal_power = product(ideal_power, ideal);
        }
    }
    return false;
}

} // namespace npspread::oracle
