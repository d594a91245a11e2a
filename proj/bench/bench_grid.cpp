#include <benchmark/benchmark.h>

#include "xop/theorem_lab.hpp"

namespace {

// Wider than the default grid so the fan-out has something to chew on.
std::vector<std::pair<double, double>> wide_grid() {
  std::vector<std::pair<double, double>> grid;
  for (double a : {0.25, 0.5, 1.0, 2.0, 3.0, 5.0})
    for (double b : {a + 0.5, a + 1.0, a + 2.0, a + 5.0, a + 10.0, 4.0 * a}) grid.emplace_back(a, b);
  return grid;
}

void BM_Thm1Jacobi(benchmark::State& state, xop::Execution exec) {
  const auto grid = wide_grid();
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(xop::lab::check_thm1_jacobi(grid, n_max, exec));
}

void BM_Thm2(benchmark::State& state, xop::Execution exec) {
  const std::vector<double> alphas{0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 8.0};
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(xop::lab::check_thm2(alphas, n_max, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Thm1Jacobi, serial, xop::Execution::serial)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Thm1Jacobi, parallel, xop::Execution::parallel)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Thm2, serial, xop::Execution::serial)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Thm2, parallel, xop::Execution::parallel)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
