#pragma once

#include <vector>

#include "sobolev/grid.hpp"
#include "sobolev/kernels.hpp"
#include "sobolev/oracle.hpp"
#include "sobolev/polynomial.hpp"
#include "sobolev/sigma_partition.hpp"

namespace sobolev {

struct ApproxConfig {
  int order = 1;      // m
  int dimension = 1;  // N
  int bernstein_degree = 16;
  GridSpec grid;
  Execution exec = Execution::parallel;

  void validate() const;
};

struct AlphaError {
  MultiIndex alpha;
  double sup_error = 0.0;
};

struct SigmaDiagnostic {
  SigmaTerm term;
  /// ||g_sigma - Q_sigma|| on the report grid.
  double bernstein_error = 0.0;
};

/// Grid sup errors of D^alpha(u - P) for every |alpha| <= m, plus per-sigma
/// Bernstein errors. Grid values are lower bounds of the true sup norms.
struct ErrorReport {
  std::vector<AlphaError> errors;
  std::vector<SigmaDiagnostic> sigma;

  double max_error() const;
  double max_bernstein_error() const;
};

struct Approximation {
  Polynomial polynomial;
  ErrorReport report;
  std::vector<SigmaTerm> terms;
  std::vector<Polynomial> targets;      // Q_sigma
  std::vector<Polynomial> corrections;  // P_sigma
};

/// x -> D^beta[w_t u](x) by the Leibniz rule. The returned function keeps a
/// reference to `u`.
ScalarField g_sigma(const SigmaTerm& term, const DerivativeOracle& u);
HpScalarField g_sigma_hp(const SigmaTerm& term, const DerivativeOracle& u);

/// D^beta[w_t u] for a polynomial u, exactly.
Polynomial g_sigma_exact(const SigmaTerm& term, const Polynomial& u);

/// sum_t multiplicity(t) w_t solve(t, targets[t]). Writes the P_sigma into
/// `corrections` when given.
Polynomial assemble(const std::vector<SigmaTerm>& terms, const std::vector<Polynomial>& targets,
                    std::vector<Polynomial>* corrections = nullptr);

/// The full pipeline: Q_sigma = B_n[g_sigma], P_sigma = solve(t, Q_sigma),
/// P = sum_sigma multiplicity w_sigma P_sigma, with an error report.
Approximation approximate(const DerivativeOracle& u, const ApproxConfig& cfg);

/// max over grid of |D^alpha u - D^alpha P| for each |alpha| <= m.
ErrorReport error_report(const DerivativeOracle& u, const Polynomial& p, int order, const GridSpec& grid,
                         Execution exec = Execution::parallel);

}  // namespace sobolev
