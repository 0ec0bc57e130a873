#pragma once

#include <vector>

namespace sobolev {

struct QuadratureRule {
  std::vector<double> nodes;  // flattened, `dimension` coordinates per node
  std::vector<double> weights;
  int dimension = 1;

  std::size_t size() const noexcept { return weights.size(); }
};

/// n-point Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

/// Tensor Gauss-Legendre rule on the closed unit ball of R^N (N <= 3):
/// the interval for N=1, polar coordinates for N=2, spherical (r, cos theta,
/// phi) for N=3. `n` nodes per coordinate.
QuadratureRule unit_ball_rule(int dimension, int n);

}  // namespace sobolev
