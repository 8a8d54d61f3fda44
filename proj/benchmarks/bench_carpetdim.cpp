#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "carpetdim/conditions.hpp"
#include "carpetdim/report.hpp"
#include "carpetdim/roots.hpp"
#include "carpetdim/symbolic.hpp"
#include "carpetdim/variational.hpp"

namespace {

carpetdim::CarpetSpec three_column() {
  carpetdim::CarpetSpec spec;
  spec.widths = {0.0765, 0.2298, 0.499};
  spec.heights = {0.2904, 0.2904, 0.2904};
  spec.cells = {{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 2}};
  spec.allow_gaps = true;
  return spec;
}

void BM_PartitionExponent(benchmark::State& state) {
  const std::vector<double> ratios{0.0765, 0.2298, 0.499};
  for (auto _ : state) benchmark::DoNotOptimize(carpetdim::partition_exponent(ratios));
}
BENCHMARK(BM_PartitionExponent);

void BM_ExponentProfile(benchmark::State& state) {
  const auto spec = three_column();
  for (auto _ : state) benchmark::DoNotOptimize(carpetdim::assouad_lower_profile(spec));
}
BENCHMARK(BM_ExponentProfile);

void BM_MaximizeG1(benchmark::State& state) {
  const auto spec = three_column();
  for (auto _ : state)
    benchmark::DoNotOptimize(carpetdim::maximize(spec, carpetdim::Objective::G1));
}
BENCHMARK(BM_MaximizeG1);

void BM_GridOracle(benchmark::State& state) {
  const auto spec = three_column();
  const auto profile = carpetdim::assouad_lower_profile(spec);
  for (auto _ : state)
    benchmark::DoNotOptimize(carpetdim::simplex_grid_max(
        spec, carpetdim::Objective::F, static_cast<int>(state.range(0)), &profile));
}
BENCHMARK(BM_GridOracle)->Arg(20)->Arg(40)->Arg(60);

void BM_SquareMass(benchmark::State& state) {
  const auto spec = three_column();
  const auto q = carpetdim::SimplexPoint::uniform(6);
  const carpetdim::Word word(40, 4);
  const auto sq = carpetdim::approximate_square(spec, word, 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(carpetdim::square_mass(spec, q, sq));
}
BENCHMARK(BM_SquareMass);

void BM_StoppingWalk(benchmark::State& state) {
  const auto spec = three_column();
  const double delta = std::ldexp(1.0, -static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::size_t n = 0;
    carpetdim::for_each_stopping_rect(
        spec, delta, [&n](const carpetdim::Word&, const carpetdim::WordGeometry&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_StoppingWalk)->Arg(6)->Arg(9);

void BM_BoxCount(benchmark::State& state) {
  const auto spec = three_column();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        carpetdim::box_count_estimate(spec, 4, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BoxCount)->Arg(8)->Arg(10);

void BM_FullAnalysis(benchmark::State& state) {
  const auto spec = three_column();
  for (auto _ : state) benchmark::DoNotOptimize(carpetdim::analyze(spec));
}
BENCHMARK(BM_FullAnalysis);

}  // namespace

BENCHMARK_MAIN();
