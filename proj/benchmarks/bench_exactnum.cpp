#include <benchmark/benchmark.h>

#include "pmech/exactnum.hpp"
#include "pmech/expr.hpp"

using namespace pmech;

static void BM_RationalFunctionSum(benchmark::State& state) {
    RationalFunction a = parse_coefficient("h1/(h1+h2)");
    RationalFunction b = parse_coefficient("(h1-h2)/(h1*h2+3)");
    for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_RationalFunctionSum);

static void BM_PolynomialGcd(benchmark::State& state) {
    HPolynomial x = HPolynomial::variable(Hbar::h1), y = HPolynomial::variable(Hbar::h2);
    HPolynomial common = x * x + y * GaussianRational(3) + x * y;
    HPolynomial f = common, g = common;
    for (int k = 0; k < state.range(0); ++k) {
        f = f * (x + y * GaussianRational(k + 2));
        g = g * (x * y - GaussianRational(k + 1));
    }
    for (auto _ : state) benchmark::DoNotOptimize(gcd(f, g));
}
BENCHMARK(BM_PolynomialGcd)->Arg(1)->Arg(3)->Arg(5);
