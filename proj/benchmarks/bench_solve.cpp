#include <benchmark/benchmark.h>

#include "scarf/generators.hpp"
#include "scarf/kernels.hpp"
#include "scarf/matchings.hpp"
#include "scarf/oracle.hpp"
#include "scarf/solver.hpp"

namespace {

void BM_SolveRandom(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  std::uint64_t seed = 1;
  std::uint64_t pivots = 0;
  for (auto _ : state) {
    state.PauseTiming();
    auto inst = scarf::gen::random_scarf(m, n, seed++);
    state.ResumeTiming();
    auto r = scarf::solve(inst);
    pivots += r.pivots;
    benchmark::DoNotOptimize(r);
  }
  state.counters["pivots"] = benchmark::Counter(static_cast<double>(pivots), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_SolveRandom)->Args({3, 6})->Args({5, 10})->Args({8, 16})->Args({12, 24})->Unit(benchmark::kMillisecond);

void BM_BruteSolve(benchmark::State& state) {
  auto inst = scarf::gen::random_scarf(5, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(scarf::oracle::brute_solve(inst));
}
BENCHMARK(BM_BruteSolve)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_KernelCycle(benchmark::State& state) {
  auto d = scarf::gen::directed_cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scarf::kernels::solve_strong_kernel(d));
}
BENCHMARK(BM_KernelCycle)->Arg(5)->Arg(11)->Arg(21)->Arg(41)->Unit(benchmark::kMillisecond);

void BM_KernelRandom(benchmark::State& state) {
  auto d = scarf::gen::clique_acyclic_digraph(static_cast<std::size_t>(state.range(0)), 0.3, 0.3, 9);
  for (auto _ : state) benchmark::DoNotOptimize(scarf::kernels::solve_strong_kernel(d));
}
BENCHMARK(BM_KernelRandom)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
