#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "npspread/oracle.hpp"
#include "npspread/spread.hpp"
#include "support.hpp"

using namespace npspread;
using namespace npspread::testing;

TEST_CASE("brute-force compact dimension on the worked Newton polyhedra") {
    Ring r = ring3();
    {
        NewtonBody npoly = newton_polyhedron(ideal_of(r, "xy, xz, yz"));
        CHECK(oracle::compact_face_bruteforce(npoly.hrep, npoly.vrep) == 2);
    }
    {
        NewtonBody npoly = newton_polyhedron(ideal_of(r, "xy, y^4z^4, x^4z^4"));
        CHECK(oracle::compact_face_bruteforce(npoly.hrep, npoly.vrep) == 1);
    }
    {
        MonomialIdeal ideal =
            ideal_of(r, "x^20, x^8y^2, x^14yz^10, x^2y^10, x^5y^6z^10, y^30, xy^20z^10");
        NewtonBody npoly = newton_polyhedron(ideal);
        CHECK(oracle::compact_face_bruteforce(npoly.hrep, npoly.vrep) == 1);
        CHECK(analytic_spread(ideal).spread == 2);
    }
}

TEST_CASE("brute-force compact dimension agrees with the incidence computation") {
    std::mt19937_64 rng(8675309);
    Ring r = ring3();
    for (int trial = 0; trial < 25; ++trial) {
        MonomialIdeal ideal = random_ideal(rng, r, 6, 6);
        NewtonBody npoly = newton_polyhedron(ideal);
        auto brute = oracle::compact_face_bruteforce(npoly.hrep, npoly.vrep);
        REQUIRE(brute.has_value());
        CHECK(*brute == max_compact_face_dim(npoly.hrep, npoly.vrep));
        CHECK(*brute + 1 == analytic_spread(ideal).spread);
    }
}

TEST_CASE("definitional reduction witnesses") {
    Ring r2({"x", "y"});
    MonomialIdeal big = power(MonomialIdeal(r2, {qv({1, 0}), qv({0, 1})}), 2);
    MonomialIdeal small(r2, {qv({2, 0}), qv({0, 2})});
    CHECK(oracle::reduction_by_definition(small, big, 6) == 1);
    CHECK(oracle::reduction_by_definition(big, big, 6) == 1);

    MonomialIdeal xsq(r2, {qv({2, 0})});
    MonomialIdeal maximal(r2, {qv({1, 0}), qv({0, 1})});
    CHECK_FALSE(oracle::reduction_by_definition(xsq, maximal, 6).has_value());
    CHECK_THROWS_AS(oracle::reduction_by_definition(maximal, xsq, 6), user_error);
}

TEST_CASE("reduction decisions agree with the definitional search") {
    std::mt19937_64 rng(5813);
    Ring r = ring3();
    for (int trial = 0; trial < 20; ++trial) {
        MonomialIdeal ideal = random_ideal(rng, r, 6, 5);
        MonomialIdeal red = minimal_monomial_reduction(ideal);
        ReductionReport report = check_reduction(red, ideal, 6);
        CHECK(report.is_reduction);
        auto witness = oracle::reduction_by_definition(red, ideal, 6);
        if (witness) {
            CHECK(report.witness_power == witness);
        }
        // a definitional witness implies the polyhedral decision
        if (witness) {
            CHECK(report.is_reduction);
        }
    }
}

TEST_CASE("closure membership by powers") {
    Ring r = ring3();
    MonomialIdeal triangle = ideal_of(r, "xy, xz, yz");
    for (const QVector& g : triangle.generators()) {
        CHECK(oracle::closure_membership_by_powers(triangle, g, 1));
    }
    CHECK(oracle::closure_membership_by_powers(triangle, qv({2, 2, 0}), 4));
    CHECK_FALSE(oracle::closure_membership_by_powers(triangle, qv({0, 0, 0}), 6));
    CHECK_FALSE(oracle::closure_membership_by_powers(MonomialIdeal::zero(r), qv({1, 1, 1}), 4));
}

TEST_CASE("power membership is consistent with polyhedral closure membership") {
    std::mt19937_64 rng(777111);
    Ring r = ring3();
    std::uniform_int_distribution<int> e(0, 7);
    for (int trial = 0; trial < 20; ++trial) {
        MonomialIdeal ideal = random_ideal(rng, r, 5, 5);
        for (int probe = 0; probe < 6; ++probe) {
            QVector b = qv({e(rng), e(rng), e(rng)});
            const bool fast = closure_contains(ideal, b);
            const bool slow = oracle::closure_membership_by_powers(ideal, b, 12);
            if (slow) {
                CHECK(fast);
            }
            if (!fast) {
                CHECK_FALSE(slow);
            }
        }
    }
}
