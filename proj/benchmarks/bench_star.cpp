#include <benchmark/benchmark.h>

#include "pmech/expr.hpp"
#include "pmech/mechanise.hpp"
#include "pmech/oracle.hpp"
#include "pmech/star.hpp"
#include "pmech/verify.hpp"

using namespace pmech;

static void BM_StarRandom(benchmark::State& state) {
    std::mt19937_64 rng(default_seed);
    RandomSymbolSpec spec{2, static_cast<unsigned>(state.range(0)), 3, true};
    Symbol a = random_symbol(rng, spec), b = random_symbol(rng, spec);
    for (auto _ : state) benchmark::DoNotOptimize(star(a, b));
}
BENCHMARK(BM_StarRandom)->Arg(2)->Arg(4)->Arg(6);

static void BM_UniversalBracket(benchmark::State& state) {
    std::mt19937_64 rng(default_seed + 1);
    RandomSymbolSpec spec{2, static_cast<unsigned>(state.range(0)), 3, true};
    Symbol a = random_symbol(rng, spec), b = random_symbol(rng, spec);
    for (auto _ : state) benchmark::DoNotOptimize(universal_bracket(a, b));
}
BENCHMARK(BM_UniversalBracket)->Arg(2)->Arg(4);

static void BM_QcBracketMechanised(benchmark::State& state) {
    Symbol h = mechanise(rotation_hamiltonian());
    Symbol f = mechanise(parse_symbol("q1^2*p2 + p1*q2", 1));
    for (auto _ : state) benchmark::DoNotOptimize(qc_bracket(h, f));
}
BENCHMARK(BM_QcBracketMechanised);

// degree 6 monomial pair, checked against the word algebra
static void BM_OracleStarCheck(benchmark::State& state) {
    Monomial a = parse_symbol("q1^2*p1*q2", 2).terms().begin()->first;
    Monomial b = parse_symbol("p1^2*q1*p2^2", 2).terms().begin()->first;
    for (auto _ : state) benchmark::DoNotOptimize(oracle_star_check(a, b));
}
BENCHMARK(BM_OracleStarCheck);
