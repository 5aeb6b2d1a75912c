#include <benchmark/benchmark.h>

#include <vector>

#include "casimir/lifshitz.hpp"
#include "casimir/sign_atlas.hpp"

using namespace casimir;

namespace {

const std::vector<double> kM2{0.4, 0.8, 1.1, 1.6};

void BM_SweepSerial(benchmark::State& state) {
  const auto m3 = atlas::log_grid(0.05, 10.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(atlas::sweep_serial(1.5, kM2, m3));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(kM2.size() * m3.size()));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto m3 = atlas::log_grid(0.05, 10.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(atlas::sweep(1.5, kM2, m3));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(kM2.size() * m3.size()));
}

void BM_Force(benchmark::State& state, Execution exec) {
  const auto system = MaterialSystem::constant(3.0, 2.2, 2.0, 4.0);
  for (auto _ : state) benchmark::DoNotOptimize(lifshitz::casimir_force(system, 1e-6, {}, exec));
}

void BM_ForceDispersive(benchmark::State& state, Execution exec) {
  const MaterialSystem system{PermittivityModel::oscillator({{2.0, 8e15}}), PermittivityModel::oscillator({{1.2, 1.5e16}}),
                              PermittivityModel::oscillator({{0.8, 2e16}}), PermittivityModel::oscillator({{1.5, 1e16}})};
  for (auto _ : state) benchmark::DoNotOptimize(lifshitz::casimir_force(system, 1e-7, {}, exec));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(60)->Arg(240)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(60)->Arg(240)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Force, serial, Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Force, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ForceDispersive, serial, Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ForceDispersive, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
