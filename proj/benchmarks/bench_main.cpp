#include <benchmark/benchmark.h>

#include "rncdr/doa.hpp"
#include "rncdr/injectivity.hpp"
#include "rncdr/lp.hpp"
#include "rncdr/models.hpp"
#include "rncdr/network.hpp"

namespace {

using rncdr::Rational;

void BM_SignPatternLp(benchmark::State& state) {
  auto sys = rncdr::build_model("beccs");
  auto perp = rncdr::left_kernel(sys.net.stoichiometric_matrix());
  for (auto _ : state) benchmark::DoNotOptimize(rncdr::realizable_sign_patterns(perp, sys.net.m()));
}
BENCHMARK(BM_SignPatternLp)->Unit(benchmark::kMillisecond);

void BM_Concordance(benchmark::State& state) {
  auto sys = rncdr::build_model(state.range(0) == 0 ? "beccs" : "ar");
  for (auto _ : state) benchmark::DoNotOptimize(rncdr::concordance(sys.net));
}
BENCHMARK(BM_Concordance)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Determinant(benchmark::State& state) {
  auto sys = rncdr::build_model(state.range(0) == 0 ? "beccs" : "ar");
  auto m = rncdr::build_m_star(sys);
  for (auto _ : state) benchmark::DoNotOptimize(rncdr::determinant(m.matrix));
}
BENCHMARK(BM_Determinant)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DoaSearchWitness(benchmark::State& state) {
  auto sys = rncdr::build_model("beccs", {{"p1", 4}, {"p2", 2}, {"q1", 3}, {"q2", 2}});
  for (auto _ : state) benchmark::DoNotOptimize(rncdr::doa_search(sys));
}
BENCHMARK(BM_DoaSearchWitness)->Unit(benchmark::kMillisecond);

void BM_DoaSearchExhaustive(benchmark::State& state) {
  auto sys = rncdr::build_model("beccs", {{"p1", -1}, {"p2", 1}, {"q1", 1}, {"q2", -1}});
  for (auto _ : state) benchmark::DoNotOptimize(rncdr::doa_search(sys));
}
BENCHMARK(BM_DoaSearchExhaustive)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
