#pragma once

#include <span>

#include "sobolev/grid.hpp"
#include "sobolev/kernels.hpp"
#include "sobolev/oracle.hpp"
#include "sobolev/polynomial.hpp"

namespace sobolev {

/// Psi(z) = c_s (1 - |z|^2)^s on the unit ball of R^N, zero outside.
/// Psi is C^(s-1) across the sphere and integrates to one.
class BumpKernel {
 public:
  BumpKernel(int smoothness, int dimension);

  int smoothness() const noexcept { return smoothness_; }
  int dimension() const noexcept { return dimension_; }
  double normalization() const noexcept { return normalization_; }

  /// Radial profile Psi(r).
  double profile(double r) const;
  /// D^gamma Psi at z; zero outside the open unit ball.
  double derivative(const MultiIndex& gamma, std::span<const double> z) const;
  /// c_s (1 - sum z_j^2)^s as a polynomial (valid inside the ball).
  const Polynomial& polynomial() const noexcept { return poly_; }

 private:
  int smoothness_;
  int dimension_;
  double normalization_;
  Polynomial poly_;
};

struct MollifierConfig {
  int step = 4;              // n: dilation factor 1 - 1/(n+1)
  double scale = 10.0;       // lambda_n
  int quadrature_nodes = 24;  // Gauss-Legendre nodes per ball coordinate
  int function_order = 1;    // m: derivative orders u provides
  int kernel_smoothness = 1;  // s
  /// Most derivative orders evaluated on u; the rest go on the kernel.
  /// Negative means function_order.
  int function_split = -1;

  /// lambda_n = 2(n+1) and s = mN - m + 1.
  static MollifierConfig defaults(int step, int order, int dimension);
  void validate() const;
};

/// u~(x) = u(c + t(x - c)) with t = 1 - 1/(n+1), and
/// D^gamma u~(x) = t^|gamma| D^gamma u(c + t(x - c)). The centre c defaults
/// to the origin.
OraclePtr dilate(OraclePtr u, int step);
OraclePtr dilate(OraclePtr u, int step, std::span<const double> centre);

/// v = Psi_n * u_n, with u_n the dilation of u about the cube centre and
/// Psi_n(y) = lambda^N Psi(lambda y). Derivatives of v up to total order
/// `target_order` come from tensor quadrature over the kernel support, with
/// at most `function_split` orders taken from u and the rest put on the
/// kernel. Values are cached.
OraclePtr smooth(OraclePtr u, const MollifierConfig& cfg, int target_order);

/// sum over |alpha| <= m of grid sup |D^alpha a - D^alpha b|.
double sobolev_distance(const DerivativeOracle& a, const DerivativeOracle& b, int order, const GridSpec& grid,
                        Execution exec = Execution::parallel);

}  // namespace sobolev
