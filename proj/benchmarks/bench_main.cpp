// Serial reference vs OpenMP kernels: the exhaustive oracle enumeration and
// the Monte Carlo trial loop. Both pairs must produce identical results; the
// parallel variants exist purely for throughput.

#include <benchmark/benchmark.h>

#include "linebcast/assign.hpp"
#include "linebcast/experiments.hpp"
#include "linebcast/oracle.hpp"
#include "linebcast/topogen.hpp"

namespace {

using namespace linebcast;

LinearNetwork oracle_net() {
  GenSpec spec;
  spec.mode = GenMode::Uniform;
  spec.n = 7;
  spec.length = 1000.0;
  spec.seed = 7;
  return uniform_network(spec);
}

void BM_OracleSerial(benchmark::State& state) {
  const LinearNetwork net = oracle_net();
  OracleConfig cfg;
  cfg.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_optimal(net, cfg).cost);
  }
}
BENCHMARK(BM_OracleSerial)->Unit(benchmark::kMillisecond);

void BM_OracleParallel(benchmark::State& state) {
  const LinearNetwork net = oracle_net();
  OracleConfig cfg;
  cfg.workers = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_optimal(net, cfg).cost);
  }
}
BENCHMARK(BM_OracleParallel)->Unit(benchmark::kMillisecond);

ExperimentConfig sweep_cfg(int workers) {
  ExperimentConfig cfg;
  cfg.lambdas = {0.03};
  cfg.trials = 200;
  cfg.seed = 7;
  cfg.workers = workers;
  return cfg;
}

void BM_TrialsSerial(benchmark::State& state) {
  const ExperimentConfig cfg = sweep_cfg(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_trials(cfg, 0).size());
  }
}
BENCHMARK(BM_TrialsSerial)->Unit(benchmark::kMillisecond);

void BM_TrialsParallel(benchmark::State& state) {
  const ExperimentConfig cfg = sweep_cfg(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_trials(cfg, 0).size());
  }
}
BENCHMARK(BM_TrialsParallel)->Unit(benchmark::kMillisecond);

void BM_OptimalAssign(benchmark::State& state) {
  GenSpec spec;
  spec.mode = GenMode::Uniform;
  spec.n = static_cast<std::size_t>(state.range(0));
  spec.length = 5000.0;
  spec.seed = 11;
  const LinearNetwork net = uniform_network(spec);
  const PathLoss alpha(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_assign(net, alpha).cost);
  }
}
BENCHMARK(BM_OptimalAssign)->Arg(50)->Arg(150)->Arg(500)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
