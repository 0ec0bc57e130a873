#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sobolev/kernels.hpp"

using namespace sobolev;

TEST_CASE("grid node layout") {
  const GridSpec g{2, 3};
  CHECK(g.node_count() == 9);
  std::vector<double> x(2);
  g.node(5, x);  // indices (1, 2)
  CHECK(x[0] == 0.5);
  CHECK(x[1] == 1.0);
  CHECK(GridSpec::default_for(2).nodes_per_axis == 101);
  CHECK(GridSpec::default_for(3).nodes_per_axis == 21);
}

TEST_CASE("sample_grid: OpenMP matches the serial reference bit for bit") {
  const GridSpec g{2, 57};
  const ScalarField f = [](std::span<const double> x) { return std::sin(3 * x[0]) * std::exp(x[1]) - x[0] * x[1]; };
  const auto a = kernels::serial::sample_grid(g, f);
  const auto b = kernels::omp::sample_grid(g, f);
  CHECK(a == b);
  CHECK(kernels::sample_grid(g, f, Execution::parallel) == a);
  CHECK(kernels::max_abs(a) == kernels::max_abs(b));
}

TEST_CASE("sample_lattice: exact nodes, identical in both variants") {
  const HpScalarField f = [](std::span<const HpReal> x) { return exp(x[0] - x[1] * 3); };
  const auto a = kernels::serial::sample_lattice(2, 9, f);
  const auto b = kernels::omp::sample_lattice(2, 9, f);
  REQUIRE(a.size() == 100);
  CHECK(a == b);

  const HpScalarField id = [](std::span<const HpReal> x) { return x[0]; };
  const auto nodes = kernels::sample_lattice(1, 3, id, Execution::serial);
  CHECK(nodes[1] * 3 == HpReal(1));  // 1/3 formed in high precision
}

TEST_CASE("bernstein_to_monomial: variants agree and reproduce x in 1D") {
  // Bernstein coefficients k/n represent f(x) = x exactly.
  const int n = 12;
  std::vector<HpReal> coefs(n + 1);
  for (int k = 0; k <= n; ++k) coefs[k] = HpReal(k) / n;
  const auto mono = kernels::serial::bernstein_to_monomial(coefs, 1, n);
  CHECK(abs(mono[1] - 1) < HpReal("1e-90"));
  for (int i = 0; i <= n; ++i) {
    if (i != 1) CHECK(abs(mono[i]) < HpReal("1e-90"));
  }

  std::vector<HpReal> grid2(49);
  for (std::size_t i = 0; i < grid2.size(); ++i) grid2[i] = HpReal(static_cast<long>(i * i % 17)) / 7;
  CHECK(kernels::serial::bernstein_to_monomial(grid2, 2, 6) == kernels::omp::bernstein_to_monomial(grid2, 2, 6));
}

TEST_CASE("exceptions inside the parallel region reach the caller") {
  const GridSpec g{1, 50};
  const ScalarField bad = [](std::span<const double> x) -> double {
    if (x[0] > 0.5) throw std::runtime_error("boom");
    return 0.0;
  };
  CHECK_THROWS_AS(kernels::sample_grid(g, bad, Execution::parallel), std::runtime_error);
  CHECK_THROWS_AS(kernels::sample_grid(g, bad, Execution::serial), std::runtime_error);
}
