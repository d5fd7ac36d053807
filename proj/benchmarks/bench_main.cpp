#include "algspec/analysis.hpp"
#include "algspec/fourier.hpp"
#include "algspec/instfreq.hpp"
#include "algspec/opcalc.hpp"
#include "algspec/roots.hpp"
#include "algspec/weylode.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

using namespace algspec;

namespace {

// Integer polynomial of the given degree with roots that are generally
// irrational, so the numeric root finder runs.
CPoly integer_poly(int degree, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> coef(-9, 9);
    std::vector<ExactComplex> c;
    for (int k = 0; k < degree; ++k) c.push_back(ExactComplex(Rational(coef(rng))));
    c.push_back(ExactComplex(1));
    return CPoly(std::move(c));
}

void BM_Poles(benchmark::State& state)
{
    const RatFunc r(CPoly(1), integer_poly(static_cast<int>(state.range(0)), 7));
    for (auto _ : state) benchmark::DoNotOptimize(poles(r));
}
BENCHMARK(BM_Poles)->Arg(4)->Arg(8)->Arg(16);

void BM_PartialFractionsExact(benchmark::State& state)
{
    CPoly den(1);
    for (int k = 1; k <= state.range(0); ++k) den *= CPoly::linear(ExactComplex(Rational(k), Rational(-k, 2)));
    const RatFunc r(CPoly(1), den);
    for (auto _ : state) benchmark::DoNotOptimize(partial_fractions(r));
}
BENCHMARK(BM_PartialFractionsExact)->Arg(4)->Arg(8);

void BM_MulOps(benchmark::State& state)
{
    const RatFunc s = RatFunc::s();
    std::vector<RatFunc> c;
    for (int k = 0; k <= state.range(0); ++k) c.push_back((s + RatFunc(k + 1)) / (s * s + RatFunc(k + 2)));
    const WeylOp a(c);
    for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_MulOps)->Arg(1)->Arg(2)->Arg(3);

void BM_SpectrumSinc(benchmark::State& state)
{
    const SignalExpr e = parse("sinc(3)");
    for (auto _ : state) benchmark::DoNotOptimize(analyze(e));
}
BENCHMARK(BM_SpectrumSinc);

void BM_PhiFitted(benchmark::State& state)
{
    SampledSignal sig;
    for (int k = 0; k < state.range(0); ++k) {
        sig.times.push_back(k / 200.0);
        sig.values.push_back(std::sin(2.0 * k / 200.0));
    }
    for (auto _ : state) benchmark::DoNotOptimize(phi_fitted(sig, 11, 3));
}
BENCHMARK(BM_PhiFitted)->Arg(601)->Arg(4001);

void BM_Dft(benchmark::State& state)
{
    cvec x(static_cast<std::size_t>(state.range(0)));
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = std::sin(0.3 * static_cast<double>(k));
    for (auto _ : state) benchmark::DoNotOptimize(dft_auto(x));
}
BENCHMARK(BM_Dft)->Arg(1024)->Arg(1000)->Arg(65536);

} // namespace

BENCHMARK_MAIN();
