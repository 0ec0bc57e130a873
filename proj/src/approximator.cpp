#include "sobolev/approximator.hpp"

#include <algorithm>
#include <string>

#include "sobolev/bernstein.hpp"
#include "sobolev/dbeta_solver.hpp"
#include "sobolev/errors.hpp"

namespace sobolev {

namespace {

void require_beta_support(const SigmaTerm& term, const DerivativeOracle& u) {
  if (u.dimension() != term.dimension()) throw InputError("oracle and sigma term dimension mismatch");
  for (const auto& g : all_below(beta_index(term.order, term.dimension()))) u.require(g);
}

}  // namespace

void ApproxConfig::validate() const {
  if (order < 1) throw ConfigError("approximation order m must be >= 1");
  if (dimension < 1) throw ConfigError("dimension N must be >= 1");
  if (bernstein_degree < 1) throw ConfigError("Bernstein degree must be >= 1");
  if (grid.dimension != dimension) throw ConfigError("report grid dimension differs from N");
  grid.validate();
  if (bernstein_degree > max_bernstein_degree(dimension)) {
    throw ConfigError("Bernstein degree " + std::to_string(bernstein_degree) + " exceeds the cap " +
                      std::to_string(max_bernstein_degree(dimension)));
  }
}

double ErrorReport::max_error() const {
  double out = 0.0;
  for (const auto& e : errors) out = std::max(out, e.sup_error);
  return out;
}

double ErrorReport::max_bernstein_error() const {
  double out = 0.0;
  for (const auto& s : sigma) out = std::max(out, s.bernstein_error);
  return out;
}

ScalarField g_sigma(const SigmaTerm& term, const DerivativeOracle& u) {
  require_beta_support(term, u);
  auto weighted = std::make_shared<WeightedOracle>(weight_polynomial(term), OraclePtr(&u, [](const auto*) {}));
  const auto beta = beta_index(term.order, term.dimension());
  return [weighted, beta](std::span<const double> x) { return weighted->eval(beta, x); };
}

HpScalarField g_sigma_hp(const SigmaTerm& term, const DerivativeOracle& u) {
  require_beta_support(term, u);
  auto weighted = std::make_shared<WeightedOracle>(weight_polynomial(term), OraclePtr(&u, [](const auto*) {}));
  const auto beta = beta_index(term.order, term.dimension());
  return [weighted, beta](std::span<const HpReal> x) { return weighted->eval_hp(beta, x); };
}

Polynomial g_sigma_exact(const SigmaTerm& term, const Polynomial& u) {
  if (u.dimension() != term.dimension()) throw InputError("polynomial and sigma term dimension mismatch");
  return differentiate(mul(weight_polynomial(term), u), beta_index(term.order, term.dimension()));
}

Polynomial assemble(const std::vector<SigmaTerm>& terms, const std::vector<Polynomial>& targets,
                    std::vector<Polynomial>* corrections) {
  if (terms.size() != targets.size()) throw InputError("one target per sigma term required");
  if (terms.empty()) throw InputError("no sigma terms to assemble");
  Polynomial out(terms.front().dimension());
  if (corrections) corrections->clear();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto p_sigma = solve(terms[i], targets[i]);
    out = add(out, scale(mul(weight_polynomial(terms[i]), p_sigma), static_cast<double>(terms[i].multiplicity)));
    if (corrections) corrections->push_back(std::move(p_sigma));
  }
  return out;
}

Approximation approximate(const DerivativeOracle& u, const ApproxConfig& cfg) {
  cfg.validate();
  if (u.dimension() != cfg.dimension) throw InputError("oracle dimension differs from N");
  const int dim = cfg.dimension;
  const int n = cfg.bernstein_degree;
  const auto beta = beta_index(cfg.order, dim);
  const auto gammas = all_below(beta);
  for (const auto& g : gammas) u.require(g);

  Approximation result{Polynomial(dim), {}, enumerate_sigma(cfg.order, dim), {}, {}};

  // D^(beta-gamma) u on the Bernstein lattice, shared by every sigma term.
  std::vector<std::vector<HpReal>> u_samples;
  u_samples.reserve(gammas.size());
  for (const auto& g : gammas) {
    const auto order = beta - g;
    u_samples.push_back(kernels::sample_lattice(
        dim, n, [&u, order](std::span<const HpReal> x) { return u.eval_hp(order, x); }, cfg.exec));
  }

  for (const auto& term : result.terms) {
    const auto w = weight_polynomial(term);
    std::vector<HpReal> g_samples(u_samples.front().size(), HpReal(0));
    for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
      const auto dw = differentiate(w, gammas[gi]);
      if (dw.is_zero()) continue;
      const HpReal binom(multi_binomial(beta, gammas[gi]));
      const auto dw_samples = kernels::sample_lattice(
          dim, n, [&dw](std::span<const HpReal> x) { return dw.evaluate(x); }, cfg.exec);
      const auto& us = u_samples[gi];
      for (std::size_t k = 0; k < g_samples.size(); ++k) g_samples[k] += binom * dw_samples[k] * us[k];
    }

    try {
      auto q = bernstein_from_samples(g_samples, n, dim, cfg.exec);
      auto p_sigma = solve(term, q);
      result.polynomial =
          add(result.polynomial, scale(mul(w, p_sigma), static_cast<double>(term.multiplicity)));
      result.targets.push_back(std::move(q));
      result.corrections.push_back(std::move(p_sigma));
    } catch (const NumericalFailure& e) {
      throw NumericalFailure("sigma retention (" + term.retention.to_string() + "): " + e.what(), e.residual());
    } catch (const InputError& e) {
      throw InputError("sigma retention (" + term.retention.to_string() + "): " + e.what());
    }
  }

  result.report = error_report(u, result.polynomial, cfg.order, cfg.grid, cfg.exec);
  for (std::size_t i = 0; i < result.terms.size(); ++i) {
    const auto g = g_sigma(result.terms[i], u);
    result.report.sigma.push_back({result.terms[i], sup_error(g, result.targets[i], cfg.grid, cfg.exec)});
  }
  return result;
}

ErrorReport error_report(const DerivativeOracle& u, const Polynomial& p, int order, const GridSpec& grid,
                         Execution exec) {
  if (u.dimension() != p.dimension() || grid.dimension != p.dimension()) {
    throw InputError("error report dimension mismatch");
  }
  if (order < 0) throw InputError("error report order must be >= 0");
  grid.validate();
  ErrorReport report;
  for (const auto& alpha : all_up_to_order(p.dimension(), order)) {
    u.require(alpha);
    const auto dp = differentiate(p, alpha);
    const auto diffs = kernels::sample_grid(
        grid, [&](std::span<const double> x) { return u.eval(alpha, x) - dp.evaluate(x); }, exec);
    report.errors.push_back({alpha, kernels::max_abs(diffs)});
  }
  return report;
}

}  // namespace sobolev
