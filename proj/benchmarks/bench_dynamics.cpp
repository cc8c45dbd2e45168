#include <benchmark/benchmark.h>

#include "pmech/dynamics.hpp"
#include "pmech/mechanise.hpp"
#include "pmech/verify.hpp"

using namespace pmech;

static void BM_EvolveUniversal(benchmark::State& state) {
    Symbol h = mechanise(rotation_hamiltonian());
    Symbol f = mechanise(Symbol::variable(1, {1, Kind::p, 1}));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            evolve_taylor(Sector::universal, h, f, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_EvolveUniversal)->Arg(4)->Arg(8);

static void BM_EvolveQcJet(benchmark::State& state) {
    Symbol h = mechanise(rotation_hamiltonian());
    Symbol f = mechanise(Symbol::variable(1, {1, Kind::p, 1}));
    for (auto _ : state) benchmark::DoNotOptimize(evolve_qc_jet(h, f, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_EvolveQcJet)->Arg(4)->Arg(8);
