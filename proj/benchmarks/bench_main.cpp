#include <benchmark/benchmark.h>

#include <random>

#include "hsetkit/cheb.hpp"
#include "hsetkit/divdiff.hpp"
#include "hsetkit/experiment.hpp"
#include "hsetkit/hset.hpp"

using namespace hsetkit;

namespace {

const Kernel kGauss(KernelFamily::Gaussian, 1.0);

PointSet centers(std::size_t n, std::uint64_t seed = 1) {
  return sample_centers(n, Box::cube(2, -1.0, 1.0), seed);
}

double peaks_at(std::span<const double> p) { return peaks(p[0], p[1]); }

void BM_BuildSystem(benchmark::State& state) {
  const auto x = centers(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_system(kGauss, x));
}
BENCHMARK(BM_BuildSystem)->Arg(10)->Arg(25)->Arg(50);

void BM_Minimax(benchmark::State& state) {
  const auto x = centers(static_cast<std::size_t>(state.range(0)));
  const PointSet t = RegularGrid::square(-1.0, 1.0, 11).points();
  const auto b = kernel_matrix(kGauss, t, x);
  std::vector<double> f(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) f[k] = peaks_at(t[k]);
  for (auto _ : state) benchmark::DoNotOptimize(solve_minimax(b, f));
}
BENCHMARK(BM_Minimax)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_CertifyThresholdSet(benchmark::State& state) {
  ExperimentConfig config;
  const auto approx = cmd_approx(config);
  const double mu = 0.1 * approx.eta_star_on_grid;
  for (auto _ : state) benchmark::DoNotOptimize(select_by_threshold(approx, config.kernel, mu));
}
BENCHMARK(BM_CertifyThresholdSet)->Unit(benchmark::kMillisecond);

void BM_DividedDifference(benchmark::State& state) {
  const auto sys = build_system(kGauss, centers(static_cast<std::size_t>(state.range(0))));
  const std::vector<double> xi{0.123, -0.456};
  for (auto _ : state) benchmark::DoNotOptimize(divided_difference(sys, peaks_at, xi));
}
BENCHMARK(BM_DividedDifference)->Arg(10)->Arg(25)->Arg(50);

void BM_DivdiffMap(benchmark::State& state) {
  const auto sys = build_system(kGauss, centers(25));
  const auto grid = RegularGrid::square(-1.0, 1.0, 41);
  for (auto _ : state) benchmark::DoNotOptimize(divdiff_map(sys, peaks_at, grid));
}
BENCHMARK(BM_DivdiffMap)->Unit(benchmark::kMillisecond);

void BM_Repro(benchmark::State& state) {
  ExperimentConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(cmd_repro(config));
}
BENCHMARK(BM_Repro)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
