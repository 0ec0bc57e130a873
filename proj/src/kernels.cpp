#include "sobolev/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "sobolev/errors.hpp"

namespace sobolev::kernels {

namespace detail {

std::size_t lattice_size(int dimension, int degree) {
  std::size_t n = 1;
  for (int j = 0; j < dimension; ++j) n *= static_cast<std::size_t>(degree) + 1;
  return n;
}

void lattice_node(std::size_t flat, int dimension, int degree, std::span<HpReal> out) {
  const auto side = static_cast<std::size_t>(degree) + 1;
  for (int j = dimension - 1; j >= 0; --j) {
    out[j] = HpReal(static_cast<long>(flat % side)) / degree;
    flat /= side;
  }
}

std::vector<HpReal> bernstein_change_of_basis(int degree) {
  const auto side = static_cast<std::size_t>(degree) + 1;
  // Pascal's triangle in HpReal; all entries are exact integers.
  std::vector<std::vector<HpReal>> binom(side, std::vector<HpReal>(side, HpReal(0)));
  for (std::size_t a = 0; a < side; ++a) {
    binom[a][0] = 1;
    for (std::size_t b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + (b < a ? binom[a - 1][b] : HpReal(0));
  }
  std::vector<HpReal> m(side * side, HpReal(0));
  for (std::size_t k = 0; k < side; ++k) {
    for (std::size_t i = k; i < side; ++i) {
      HpReal v = binom[degree][i] * binom[i][k];
      m[k * side + i] = ((i - k) % 2) ? HpReal(-v) : v;
    }
  }
  return m;
}

HpReal contract_entry(std::span<const HpReal> in, std::span<const HpReal> basis, std::size_t flat, int axis,
                      int dimension, int degree) {
  const auto side = static_cast<std::size_t>(degree) + 1;
  std::size_t stride = 1;
  for (int j = dimension - 1; j > axis; --j) stride *= side;
  const std::size_t i = (flat / stride) % side;
  const std::size_t base = flat - i * stride;
  HpReal sum(0);
  for (std::size_t k = 0; k <= i; ++k) sum += basis[k * side + i] * in[base + k * stride];
  return sum;
}

}  // namespace detail

std::vector<double> sample_grid(const GridSpec& grid, const ScalarField& f, Execution exec) {
  grid.validate();
  return exec == Execution::parallel ? omp::sample_grid(grid, f) : serial::sample_grid(grid, f);
}

std::vector<HpReal> sample_lattice(int dimension, int degree, const HpScalarField& f, Execution exec) {
  if (dimension < 1 || degree < 1) throw ConfigError("lattice needs positive dimension and degree");
  return exec == Execution::parallel ? omp::sample_lattice(dimension, degree, f)
                                     : serial::sample_lattice(dimension, degree, f);
}

std::vector<HpReal> bernstein_to_monomial(std::span<const HpReal> values, int dimension, int degree,
                                          Execution exec) {
  if (dimension < 1 || degree < 1) throw ConfigError("lattice needs positive dimension and degree");
  if (values.size() != detail::lattice_size(dimension, degree)) throw InputError("lattice sample count mismatch");
  return exec == Execution::parallel ? omp::bernstein_to_monomial(values, dimension, degree)
                                     : serial::bernstein_to_monomial(values, dimension, degree);
}

double max_abs(std::span<const double> values) {
  double out = 0.0;
  for (double v : values) out = std::max(out, std::abs(v));
  return out;
}

}  // namespace sobolev::kernels
