#pragma once

#include <span>

#include "sobolev/grid.hpp"
#include "sobolev/kernels.hpp"
#include "sobolev/polynomial.hpp"

namespace sobolev {

/// Largest isotropic Bernstein degree accepted for a dimension: 64 for
/// N <= 2, 40 for N = 3. Throws ConfigError outside 1 <= N <= 3.
int max_bernstein_degree(int dimension);

/// B_n[f] = sum_k f(k/n) prod_j C(n,k_j) x_j^k_j (1-x_j)^(n-k_j), expanded to
/// monomial form. Sampling and expansion run in HpReal; only the final
/// coefficients are rounded to double.
Polynomial bernstein_approximate(const HpScalarField& f, int degree, int dimension,
                                 Execution exec = Execution::parallel);

/// Same operator for a double-valued f. The samples carry double rounding,
/// which the monomial expansion amplifies by roughly 3^(nN); use the
/// high-precision overload beyond n*N of about 16.
Polynomial bernstein_approximate(const ScalarField& f, int degree, int dimension,
                                 Execution exec = Execution::parallel);

/// B_n applied to precomputed lattice samples (row-major over {0..n}^N).
Polynomial bernstein_from_samples(std::span<const HpReal> samples, int degree, int dimension,
                                  Execution exec = Execution::parallel);

/// max over grid nodes of |f(x) - p(x)|; a lower bound for the sup norm.
double sup_error(const ScalarField& f, const Polynomial& p, const GridSpec& grid,
                 Execution exec = Execution::parallel);

}  // namespace sobolev
