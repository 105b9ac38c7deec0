#include <benchmark/benchmark.h>

#include <random>

#include "npspread/monomial.hpp"
#include "npspread/polyhedral.hpp"

using namespace npspread;

namespace {

MonomialIdeal random_ideal(std::mt19937_64& rng, const Ring& ring, int gens, int max_exp) {
    std::uniform_int_distribution<int> e(0, max_exp);
    std::vector<QVector> exponents;
    while (static_cast<int>(exponents.size()) < gens) {
        QVector g(ring.dim());
        bool zero = true;
        for (auto& x : g) {
            const int value = e(rng);
            x = value;
            zero = zero && value == 0;
        }
        if (!zero) {
            exponents.push_back(std::move(g));
        }
    }
    return MonomialIdeal(ring, std::move(exponents));
}

const MonomialIdeal& degenerate_ideal() {
    static const MonomialIdeal ideal = parse_ideal(
        Ring({"x", "y", "z"}),
        "x^20, x^8y^2, x^14yz^10, x^2y^10, x^5y^6z^10, y^30, xy^20z^10");
    return ideal;
}

} // namespace

static void BM_VrepToHrep(benchmark::State& state) {
    std::mt19937_64 rng(42);
    std::vector<std::string> names;
    for (long i = 0; i < state.range(0); ++i) {
        names.push_back("x" + std::to_string(i + 1));
    }
    Ring ring(names);
    MonomialIdeal ideal = random_ideal(rng, ring, 10, 8);
    NewtonBody np = newton_polytope(ideal);
    VRep sum = add_orthant(np.vrep);
    for (auto _ : state) {
        HRep h = vrep_to_hrep(sum);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_VrepToHrep)->Arg(3)->Arg(4)->Arg(5);

static void BM_HrepToVrep(benchmark::State& state) {
    NewtonBody npoly = newton_polyhedron(degenerate_ideal());
    for (auto _ : state) {
        VRep v = hrep_to_vrep(npoly.hrep);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_HrepToVrep);

static void BM_FaceEnumeration(benchmark::State& state) {
    NewtonBody npoly = newton_polyhedron(degenerate_ideal());
    for (auto _ : state) {
        auto faces = enumerate_faces(npoly.hrep, npoly.vrep);
        benchmark::DoNotOptimize(faces);
    }
}
BENCHMARK(BM_FaceEnumeration);
