// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "fores/verify.hpp"

using namespace fores;

namespace {

SweepSpec sweep_spec(benchmark::State& state) {
  SweepSpec spec;
  spec.dim = 3;
  spec.r_max = state.range(0);
  return spec;
}

void BM_SweepParallel(benchmark::State& state) {
  const SweepSpec spec = sweep_spec(state);
  for (auto _ : state) benchmark::DoNotOptimize(sweep(spec));
}

void BM_SweepSerial(benchmark::State& state) {
  const SweepSpec spec = sweep_spec(state);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(spec));
}

Fan sample_fan() { return build_resolution(GroupType(ProperFraction({1, 5, 23}, 37))); }

void BM_ValidateParallel(benchmark::State& state) {
  const Fan fan = sample_fan();
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(validate_fan(fan, samples, kDefaultSeed));
  state.counters["cones"] = static_cast<double>(fan.max_cones.size());
}

void BM_ValidateSerial(benchmark::State& state) {
  const Fan fan = sample_fan();
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(validate_fan_serial(fan, samples, kDefaultSeed));
  state.counters["cones"] = static_cast<double>(fan.max_cones.size());
}

}  // namespace

BENCHMARK(BM_SweepParallel)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepSerial)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ValidateParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ValidateSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
