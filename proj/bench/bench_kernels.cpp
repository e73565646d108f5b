// Serial reference vs OpenMP kernels: exhaustive counting and orbit
// permutation building.

#include <benchmark/benchmark.h>

#include "pasmkit/enumeration.hpp"
#include "pasmkit/orbits.hpp"

namespace {

using namespace pasmkit;

Execution mode(const benchmark::State& state) {
  return state.range(2) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_CountBySum(benchmark::State& state) {
  const Dims dims{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  std::uint64_t total = 0;
  for (auto _ : state) {
    total = 0;
    for (auto c : count_by_sum(dims, mode(state))) total += c;
    benchmark::DoNotOptimize(total);
  }
  state.counters["objects"] = static_cast<double>(total);
  state.SetLabel(mode(state) == Execution::kSerial ? "serial" : "parallel");
}
BENCHMARK(BM_CountBySum)
    ->ArgsProduct({{5}, {5, 6}, {0, 1}})
    ->Args({6, 6, 0})
    ->Args({6, 6, 1})
    ->Unit(benchmark::kMillisecond);

void BM_RowmotionOrbits(benchmark::State& state) {
  const Dims dims{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(orbit_report(dims, OrbitAction::kRowmotion, mode(state)));
  state.SetLabel(mode(state) == Execution::kSerial ? "serial" : "parallel");
}
BENCHMARK(BM_RowmotionOrbits)->ArgsProduct({{4}, {4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_GyrationOrbits(benchmark::State& state) {
  const Dims dims{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(orbit_report(dims, OrbitAction::kGyration, mode(state)));
  state.SetLabel(mode(state) == Execution::kSerial ? "serial" : "parallel");
}
BENCHMARK(BM_GyrationOrbits)->ArgsProduct({{4}, {4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
