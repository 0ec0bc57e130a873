#pragma once

#include "sobolev/multi_index.hpp"
#include "sobolev/polynomial.hpp"
#include "sobolev/sigma_partition.hpp"

namespace sobolev {

/// beta = (m, ..., m); D^beta = prod_j D_j^m.
MultiIndex beta_index(int order, int dimension);

/// D^beta [w_t * p], by multiplication followed by exact differentiation.
Polynomial apply_dbeta_w(const SigmaTerm& term, const Polynomial& p);

/// Coefficient of x^gamma in D^beta[w_t x^gamma]:
/// prod_j (-1)^(m-k_j) (m+gamma_j)! / gamma_j!. Rejects |gamma|_inf > 60.
double leading_constant(const SigmaTerm& term, const MultiIndex& gamma);

/// Relative residual accepted by solve().
inline constexpr double kSolveTolerance = 1e-8;

/// P with D^beta[w_t P] = Q. Residual monomials are eliminated top-down in
/// graded-lex order; each elimination only introduces strictly lower terms.
/// Throws NumericalFailure if the verified residual exceeds kSolveTolerance
/// relative to Q.
Polynomial solve(const SigmaTerm& term, const Polynomial& q);

}  // namespace sobolev
