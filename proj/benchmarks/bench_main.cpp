#include <benchmark/benchmark.h>

#include "dbarkit/dbarkit.hpp"

using namespace dbarkit;

namespace {

Field datum(int n) {
  return sample([](cplx z) { return -z * std::exp(-std::norm(z)); }, build_grid(6.0, n));
}

void BM_CauchyDense(benchmark::State& state) {
  const Field f = datum(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_transform(f, CauchyRule::punctured_dense));
}
BENCHMARK(BM_CauchyDense)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_CauchyPuncturedFft(benchmark::State& state) {
  const Field f = datum(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_transform(f, CauchyRule::punctured_fft));
}
BENCHMARK(BM_CauchyPuncturedFft)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_CauchySpectral(benchmark::State& state) {
  const Field f = datum(static_cast<int>(state.range(0)));
  cauchy_transform(f, CauchyRule::spectral);
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_transform(f, CauchyRule::spectral));
}
BENCHMARK(BM_CauchySpectral)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_Dbar(benchmark::State& state) {
  const Field f = datum(256);
  const auto scheme = state.range(0) == 0 ? Scheme::spectral : Scheme::fd4;
  for (auto _ : state) benchmark::DoNotOptimize(dbar(f, scheme));
}
BENCHMARK(BM_Dbar)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifyIdentity(benchmark::State& state) {
  const Field v = sample(make_suite(42, 1, Window::bump).front().fn.value, build_grid(6.0, 256));
  const Weight w = fock_weight(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_norm_identity(v, w, Scheme::spectral));
}
BENCHMARK(BM_VerifyIdentity)->Unit(benchmark::kMillisecond);

void BM_ProjectorBuild(benchmark::State& state) {
  const Grid g = build_grid(6.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(FockBergmanProjector(g, 1.0));
}
BENCHMARK(BM_ProjectorBuild)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_DiagonalRestriction(benchmark::State& state) {
  const Field f = datum(256);
  const auto xi = default_diagonal_samples();
  for (auto _ : state) benchmark::DoNotOptimize(diagonal_restriction(f, xi, 10));
}
BENCHMARK(BM_DiagonalRestriction)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
