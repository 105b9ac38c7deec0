#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "npspread/qlinalg.hpp"
#include "support.hpp"

using namespace npspread;
using namespace npspread::testing;

namespace {

// Test-local elimination oracle: forward elimination then back substitution,
// written independently of rref().
QMatrix eliminate(QMatrix m) {
    auto& rows = m.rows;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.col_count() && lead < rows.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[lead], rows[pivot]);
        Rational p = rows[lead][col];
        for (auto& x : rows[lead]) {
            x /= p;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][col] == 0) {
                continue;
            }
            Rational f = rows[r][col];
            for (std::size_t c = 0; c < m.col_count(); ++c) {
                rows[r][c] -= f * rows[lead][c];
            }
        }
        ++lead;
    }
    return m;
}

QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> entry(-4, 4);
    QMatrix m;
    for (std::size_t r = 0; r < rows; ++r) {
        QVector row(cols);
        for (std::size_t c = 0; c < cols; ++c) {
            row[c] = entry(rng);
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

} // namespace

TEST_CASE("rref of the identity is the identity") {
    QMatrix id{{qv({1, 0}), qv({0, 1})}};
    auto rr = rref(id);
    CHECK(rr.matrix == id);
    CHECK(rr.pivot_columns == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref of a rank-one matrix") {
    QMatrix m{{qv({2, 4}), qv({1, 2})}};
    auto rr = rref(m);
    CHECK(rr.matrix == QMatrix{{qv({1, 2}), qv({0, 0})}});
    CHECK(rr.pivot_columns == std::vector<std::size_t>{0});
}

TEST_CASE("rref of two overlapping sum hyperplane normals") {
    QMatrix m{{qv({1, 1, 1, 0, 0}), qv({0, 0, 1, 1, 1})}};
    auto rr = rref(m);
    QMatrix expected{{qv({1, 1, 0, -1, -1}), qv({0, 0, 1, 1, 1})}};
    CHECK(rr.matrix == expected);
    CHECK(rr.pivot_columns == std::vector<std::size_t>{0, 2});
    CHECK(rr.matrix == eliminate(m));
}

TEST_CASE("rank") {
    CHECK(rank(QMatrix{{qv({0, 0}), qv({0, 0})}}) == 0);
    QMatrix id3{{qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})}};
    CHECK(rank(id3) == 3);
    CHECK(rank(QMatrix{{qv({1, 1, 1, 0, 0}), qv({0, 0, 1, 1, 1})}}) == 2);
    CHECK(rank(QMatrix{}) == 0);
}

TEST_CASE("lp_feasible detects contradiction") {
    // x <= -1 and -x <= -1
    std::vector<LinearConstraint> ineqs{{qv({1}), Rational(-1)}, {qv({-1}), Rational(-1)}};
    CHECK_FALSE(lp_feasible({}, ineqs, 1).has_value());
}

TEST_CASE("lp_feasible returns an exact point") {
    std::vector<LinearConstraint> ineqs{{qv({1}), Rational(5)}};
    auto p = lp_feasible({}, ineqs, 1);
    REQUIRE(p.has_value());
    CHECK((*p)[0] <= 5);
}

TEST_CASE("all-negative combination of the leaning-triangle cone is feasible") {
    // alpha, beta >= 1 with alpha*(-2,-2,1) + beta*(1,-1,-1) <= (-1,-1,-1)
    std::vector<LinearConstraint> ineqs;
    ineqs.push_back({qv({-2, 1}), Rational(-1)});
    ineqs.push_back({qv({-2, -1}), Rational(-1)});
    ineqs.push_back({qv({1, -1}), Rational(-1)});
    ineqs.push_back({qv({-1, 0}), Rational(-1)});
    ineqs.push_back({qv({0, -1}), Rational(-1)});
    auto p = lp_feasible({}, ineqs, 2);
    REQUIRE(p.has_value());
    const Rational alpha = (*p)[0], beta = (*p)[1];
    CHECK(alpha >= 1);
    CHECK(beta >= 1);
    CHECK(-2 * alpha + beta <= -1);
    CHECK(-2 * alpha - beta <= -1);
    CHECK(alpha - beta <= -1);
}

TEST_CASE("lp_solve optimizes and detects unboundedness") {
    // minimize x subject to 2 <= x <= 5
    std::vector<LinearConstraint> box{{qv({-1}), Rational(-2)}, {qv({1}), Rational(5)}};
    auto sol = lp_solve(qv({1}), {}, box, 1);
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.point[0] == 2);
    CHECK(sol.objective == 2);

    // minimize -x subject to x >= 2 is unbounded with improving direction +1
    std::vector<LinearConstraint> lower{{qv({-1}), Rational(-2)}};
    auto unb = lp_solve(qv({-1}), {}, lower, 1);
    REQUIRE(unb.status == LpStatus::unbounded);
    CHECK(unb.ray[0] > 0);
    CHECK(unb.point[0] >= 2);
}

TEST_CASE("lp_solve on equality-constrained systems") {
    // x + y = 3, x - y = 1 has the unique solution (2, 1)
    std::vector<LinearConstraint> eqs{{qv({1, 1}), Rational(3)}, {qv({1, -1}), Rational(1)}};
    auto sol = lp_solve(qv({0, 0}), eqs, {}, 2);
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.point == qv({2, 1}));
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(lp_feasible({}, {{qv({1, 2}), Rational(0)}}, 1), user_error);
}

TEST_CASE("rref is idempotent and rank is transpose-invariant on random matrices") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        QMatrix m = random_matrix(rng, dim(rng), dim(rng));
        auto once = rref(m);
        CHECK(rref(once.matrix).matrix == once.matrix);
        CHECK(rank(m) == rank(transpose(m)));
    }
}

TEST_CASE("feasible points satisfy every constraint exactly") {
    std::mt19937_64 rng(7041776);
    std::uniform_int_distribution<int> entry(-5, 5);
    std::uniform_int_distribution<std::size_t> count(1, 5);
    int feasible_seen = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = count(rng);
        std::vector<LinearConstraint> eqs, ineqs;
        const std::size_t ne = count(rng) % 3, ni = count(rng);
        for (std::size_t i = 0; i < ne; ++i) {
            QVector row(n);
            for (auto& x : row) {
                x = entry(rng);
            }
            eqs.push_back({std::move(row), Rational(entry(rng))});
        }
        for (std::size_t i = 0; i < ni; ++i) {
            QVector row(n);
            for (auto& x : row) {
                x = entry(rng);
            }
            ineqs.push_back({std::move(row), Rational(entry(rng))});
        }
        auto p = lp_feasible(eqs, ineqs, n);
        if (!p) {
            continue;
        }
        ++feasible_seen;
        for (const auto& c : eqs) {
            CHECK(dot(c.normal, *p) == c.rhs);
        }
        for (const auto& c : ineqs) {
            CHECK(dot(c.normal, *p) <= c.rhs);
        }
    }
    CHECK(feasible_seen > 10);
}

TEST_CASE("feasibility is invariant under positive scaling of inequalities") {
    std::mt19937_64 rng(5550123);
    std::uniform_int_distribution<int> entry(-4, 4);
    std::uniform_int_distribution<int> num(1, 7), den(1, 7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 3;
        std::vector<LinearConstraint> ineqs;
        for (int i = 0; i < 5; ++i) {
            QVector row(n);
            for (auto& x : row) {
                x = entry(rng);
            }
            ineqs.push_back({std::move(row), Rational(entry(rng))});
        }
        std::vector<LinearConstraint> scaled = ineqs;
        for (auto& c : scaled) {
            const Rational factor = make_rational(num(rng), den(rng));
            for (auto& x : c.normal) {
                x *= factor;
            }
            c.rhs *= factor;
        }
        CHECK(lp_feasible({}, ineqs, n).has_value() == lp_feasible({}, scaled, n).has_value());
    }
}
