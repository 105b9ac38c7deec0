#include <benchmark/benchmark.h>

#include "npspread/spread.hpp"

using namespace npspread;

namespace {

const Ring& ring3() {
    static const Ring r({"x", "y", "z"});
    return r;
}

} // namespace

static void BM_AnalyticSpreadTriangle(benchmark::State& state) {
    MonomialIdeal ideal = parse_ideal(ring3(), "xy, xz, yz");
    for (auto _ : state) {
        benchmark::DoNotOptimize(analytic_spread(ideal).spread);
    }
}
BENCHMARK(BM_AnalyticSpreadTriangle);

static void BM_AnalyticSpreadDegenerate(benchmark::State& state) {
    MonomialIdeal ideal = parse_ideal(
        ring3(), "x^20, x^8y^2, x^14yz^10, x^2y^10, x^5y^6z^10, y^30, xy^20z^10");
    for (auto _ : state) {
        benchmark::DoNotOptimize(analytic_spread(ideal).spread);
    }
}
BENCHMARK(BM_AnalyticSpreadDegenerate);

static void BM_TwoPrimePowers(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            spread_two_prime_powers({"x1", "x2"}, {"y1"}, {"z1", "z2"}, 2, 2, true));
    }
}
BENCHMARK(BM_TwoPrimePowers);

static void BM_MinimalMonomialReduction(benchmark::State& state) {
    MonomialIdeal ideal = parse_ideal(ring3(), "x^2y^2, x^4z^4, y^4z^4, xy^3z^2, x^3yz^2");
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimal_monomial_reduction(ideal));
    }
}
BENCHMARK(BM_MinimalMonomialReduction);

BENCHMARK_MAIN();
