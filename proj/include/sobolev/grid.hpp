#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sobolev {

/// Uniform tensor grid on [0,1]^N including both endpoints on every axis.
/// Nodes are numbered row-major with the last axis fastest.
struct GridSpec {
  int dimension = 1;
  int nodes_per_axis = 101;

  /// 101 nodes per axis for N <= 2, 21 for N = 3.
  static GridSpec default_for(int dimension);

  void validate() const;
  std::size_t node_count() const;
  double coordinate(int index) const { return static_cast<double>(index) / (nodes_per_axis - 1); }
  /// Writes the coordinates of node `flat` into `out` (size = dimension).
  void node(std::size_t flat, std::span<double> out) const;
  /// Per-axis indices of node `flat`.
  std::vector<int> indices(std::size_t flat) const;
};

}  // namespace sobolev
