#include "sobolev/grid.hpp"

#include "sobolev/errors.hpp"

namespace sobolev {

GridSpec GridSpec::default_for(int dimension) {
  return GridSpec{dimension, dimension <= 2 ? 101 : 21};
}

void GridSpec::validate() const {
  if (dimension < 1) throw ConfigError("grid dimension must be positive");
  if (nodes_per_axis < 2) throw ConfigError("grid needs at least 2 nodes per axis");
}

std::size_t GridSpec::node_count() const {
  std::size_t n = 1;
  for (int j = 0; j < dimension; ++j) n *= static_cast<std::size_t>(nodes_per_axis);
  return n;
}

void GridSpec::node(std::size_t flat, std::span<double> out) const {
  for (int j = dimension - 1; j >= 0; --j) {
    out[j] = coordinate(static_cast<int>(flat % nodes_per_axis));
    flat /= nodes_per_axis;
  }
}

std::vector<int> GridSpec::indices(std::size_t flat) const {
  std::vector<int> out(static_cast<std::size_t>(dimension));
  for (int j = dimension - 1; j >= 0; --j) {
    out[j] = static_cast<int>(flat % nodes_per_axis);
    flat /= nodes_per_axis;
  }
  return out;
}

}  // namespace sobolev
