#include <benchmark/benchmark.h>

#include <omp.h>

#include "conetorsion/zeta_lattice.hpp"

namespace {

ct::ZetaNHContext context(int digits, ct::Execution mode) {
  ct::ZetaNHContext ctx;
  ctx.prec = ct::Precision{digits};
  ctx.execution = mode;
  return ctx;
}

void run_pair_sum(benchmark::State& state, ct::Execution mode, long nu_num, long nu_den) {
  const auto ctx = context(static_cast<int>(state.range(0)), mode);
  const ct::Enclosure nu = ct::Enclosure::from_ratio(nu_num, nu_den, ctx.prec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ct::bessel_pair_sum(nu, ctx));
  }
  state.counters["threads"] = mode == ct::Execution::parallel ? omp_get_max_threads() : 1;
}

void BM_PairSumSerial(benchmark::State& state) { run_pair_sum(state, ct::Execution::serial, 0, 1); }
void BM_PairSumParallel(benchmark::State& state) { run_pair_sum(state, ct::Execution::parallel, 0, 1); }
void BM_PairSumHalfSerial(benchmark::State& state) { run_pair_sum(state, ct::Execution::serial, -1, 4); }
void BM_PairSumHalfParallel(benchmark::State& state) { run_pair_sum(state, ct::Execution::parallel, -1, 4); }

void BM_BesselLatticeSerial(benchmark::State& state) {
  const auto ctx = context(static_cast<int>(state.range(0)), ct::Execution::serial);
  for (auto _ : state) benchmark::DoNotOptimize(ct::bessel_lattice_sum(ctx));
}
void BM_BesselLatticeParallel(benchmark::State& state) {
  const auto ctx = context(static_cast<int>(state.range(0)), ct::Execution::parallel);
  for (auto _ : state) benchmark::DoNotOptimize(ct::bessel_lattice_sum(ctx));
}

}  // namespace

BENCHMARK(BM_PairSumSerial)->Arg(40)->Arg(60)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairSumParallel)->Arg(40)->Arg(60)->Arg(100)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PairSumHalfSerial)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairSumHalfParallel)->Arg(60)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BesselLatticeSerial)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BesselLatticeParallel)->Arg(60)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
