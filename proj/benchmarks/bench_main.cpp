#include <benchmark/benchmark.h>

#include "altrun/egf.hpp"
#include "altrun/enumerate.hpp"
#include "altrun/families.hpp"
#include "altrun/gamma.hpp"
#include "altrun/grammar.hpp"

using namespace altrun;

static void BM_TriangleR(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(triangle(Family::R, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_TriangleR)->Arg(20)->Arg(60);

static void BM_GrammarG1(benchmark::State& state) {
  const Grammar g = grammars::q_runs();
  for (auto _ : state) benchmark::DoNotOptimize(g.iterate(g.letter("a"), static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_GrammarG1)->Arg(8)->Arg(12);

static void BM_DistributionAltrun(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(distribution(ObjectClass::perm, static_cast<unsigned>(state.range(0)), {{Statistic::altrun, "x"}}));
}
BENCHMARK(BM_DistributionAltrun)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_EgfT(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(egf_T(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_EgfT)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_GammaExpandF(benchmark::State& state) {
  const long n = state.range(0);
  const Poly f = polyseq(Sequence::Fpoly, static_cast<unsigned>(n)).at(n);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_expand(f, 1, 2 * n - 1));
}
BENCHMARK(BM_GammaExpandF)->Arg(12)->Arg(30);
BENCHMARK_MAIN();
