// Serial reference vs OpenMP kernels. Run with --benchmark_filter to pick one.

#include <benchmark/benchmark.h>

#include <cmath>

#include "sobolev/approximator.hpp"
#include "sobolev/kernels.hpp"

using namespace sobolev;

namespace {

const ScalarField kGridField = [](std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return std::exp(s) * std::sin(3 * s);
};

const HpScalarField kLatticeField = [](std::span<const HpReal> x) {
  HpReal s(0);
  for (const auto& v : x) s += v;
  return HpReal(exp(s));
};

template <bool Parallel>
void BM_SampleGrid(benchmark::State& state) {
  const GridSpec grid{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  for (auto _ : state) {
    auto v = Parallel ? kernels::omp::sample_grid(grid, kGridField) : kernels::serial::sample_grid(grid, kGridField);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.node_count()));
}

template <bool Parallel>
void BM_SampleLattice(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const int degree = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto v = Parallel ? kernels::omp::sample_lattice(dim, degree, kLatticeField)
                      : kernels::serial::sample_lattice(dim, degree, kLatticeField);
    benchmark::DoNotOptimize(v.data());
  }
}

template <bool Parallel>
void BM_BernsteinToMonomial(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const int degree = static_cast<int>(state.range(1));
  const auto values = kernels::serial::sample_lattice(dim, degree, kLatticeField);
  for (auto _ : state) {
    auto v = Parallel ? kernels::omp::bernstein_to_monomial(values, dim, degree)
                      : kernels::serial::bernstein_to_monomial(values, dim, degree);
    benchmark::DoNotOptimize(v.data());
  }
}

template <Execution Exec>
void BM_Approximate(benchmark::State& state) {
  const auto u = make_builtin_oracle("exp-sum", 2);
  ApproxConfig cfg;
  cfg.order = 1;
  cfg.dimension = 2;
  cfg.bernstein_degree = static_cast<int>(state.range(0));
  cfg.grid = GridSpec::default_for(2);
  cfg.exec = Exec;
  for (auto _ : state) {
    auto a = approximate(*u, cfg);
    benchmark::DoNotOptimize(a.report.max_error());
  }
}

}  // namespace

BENCHMARK(BM_SampleGrid<false>)->Args({2, 101})->Args({3, 41})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SampleGrid<true>)->Args({2, 101})->Args({3, 41})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SampleLattice<false>)->Args({1, 64})->Args({2, 32})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SampleLattice<true>)->Args({1, 64})->Args({2, 32})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BernsteinToMonomial<false>)->Args({1, 64})->Args({2, 32})->Args({3, 12})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BernsteinToMonomial<true>)->Args({1, 64})->Args({2, 32})->Args({3, 12})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Approximate<Execution::serial>)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Approximate<Execution::parallel>)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
