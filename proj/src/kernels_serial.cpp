#include <vector>

#include "sobolev/kernels.hpp"

namespace sobolev::kernels::serial {

std::vector<double> sample_grid(const GridSpec& grid, const ScalarField& f) {
  const std::size_t count = grid.node_count();
  std::vector<double> out(count);
  std::vector<double> x(static_cast<std::size_t>(grid.dimension));
  for (std::size_t i = 0; i < count; ++i) {
    grid.node(i, x);
    out[i] = f(x);
  }
  return out;
}

std::vector<HpReal> sample_lattice(int dimension, int degree, const HpScalarField& f) {
  const std::size_t count = detail::lattice_size(dimension, degree);
  std::vector<HpReal> out(count);
  std::vector<HpReal> x(static_cast<std::size_t>(dimension));
  for (std::size_t i = 0; i < count; ++i) {
    detail::lattice_node(i, dimension, degree, x);
    out[i] = f(x);
  }
  return out;
}

std::vector<HpReal> bernstein_to_monomial(std::span<const HpReal> values, int dimension, int degree) {
  const auto basis = detail::bernstein_change_of_basis(degree);
  std::vector<HpReal> cur(values.begin(), values.end());
  std::vector<HpReal> next(cur.size());
  for (int axis = 0; axis < dimension; ++axis) {
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i] = detail::contract_entry(cur, basis, i, axis, dimension, degree);
    }
    cur.swap(next);
  }
  return cur;
}

}  // namespace sobolev::kernels::serial
