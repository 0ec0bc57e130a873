#include "sobolev/dbeta_solver.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "sobolev/errors.hpp"

namespace sobolev {

namespace {

constexpr int kMaxGammaEntry = 60;

void check_term(const SigmaTerm& term, int dimension) {
  if (term.dimension() != dimension) throw InputError("sigma term and polynomial dimension mismatch");
}

double falling_factorial(int n, int count) {
  double out = 1.0;
  for (int i = 0; i < count; ++i) out *= n - i;
  return out;
}

// Univariate D^m[x^kept (1-x)^(m-kept) x^g] as (exponent, coefficient) pairs,
// top exponent (= g) first.
std::vector<std::pair<int, double>> axis_image(int order, int kept, int g) {
  std::vector<std::pair<int, double>> out;
  const int flipped = order - kept;
  double binom = 1.0;
  std::vector<std::pair<int, double>> rising;
  for (int r = 0; r <= flipped; ++r) {
    if (r > 0) binom = binom * (flipped - r + 1) / r;
    const int power = g + kept + r;
    if (power < order) continue;
    const double sign = (r % 2) ? -1.0 : 1.0;
    rising.emplace_back(power - order, sign * binom * falling_factorial(power, order));
  }
  out.assign(rising.rbegin(), rising.rend());
  return out;
}

// D^beta[w_t x^gamma] as the tensor product of the per-axis images.
std::vector<std::pair<MultiIndex, double>> monomial_image(const SigmaTerm& term, const MultiIndex& gamma) {
  const int dim = term.dimension();
  std::vector<std::pair<MultiIndex, double>> out{{MultiIndex::zeros(dim), 1.0}};
  for (int j = 0; j < dim; ++j) {
    const auto axis = axis_image(term.order, term.retention[j], gamma[j]);
    std::vector<std::pair<MultiIndex, double>> next;
    next.reserve(out.size() * axis.size());
    for (const auto& [e, c] : out) {
      for (const auto& [power, a] : axis) next.emplace_back(e.with(j, power), c * a);
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

MultiIndex beta_index(int order, int dimension) {
  if (order < 1 || dimension < 1) throw ConfigError("beta needs m >= 1 and N >= 1");
  return MultiIndex::filled(dimension, order);
}

Polynomial apply_dbeta_w(const SigmaTerm& term, const Polynomial& p) {
  check_term(term, p.dimension());
  return differentiate(mul(weight_polynomial(term), p), beta_index(term.order, term.dimension()));
}

double leading_constant(const SigmaTerm& term, const MultiIndex& gamma) {
  check_term(term, gamma.dimension());
  if (gamma.max_entry() > kMaxGammaEntry) {
    throw InputError("leading constant requested for |gamma|_inf > " + std::to_string(kMaxGammaEntry));
  }
  double out = 1.0;
  for (int j = 0; j < gamma.dimension(); ++j) {
    const int flipped = term.order - term.retention[j];
    out *= ((flipped % 2) ? -1.0 : 1.0) * falling_factorial(gamma[j] + term.order, term.order);
  }
  return out;
}

Polynomial solve(const SigmaTerm& term, const Polynomial& q) {
  check_term(term, q.dimension());
  Polynomial::Terms residual = q.terms();
  Polynomial::Terms solution;

  while (!residual.empty()) {
    const auto top = residual.begin();
    const MultiIndex gamma = top->first;
    const double coef = top->second / leading_constant(term, gamma);
    residual.erase(top);
    solution[gamma] += coef;
    for (const auto& [e, c] : monomial_image(term, gamma)) {
      if (e == gamma) continue;  // eliminated exactly above
      auto [it, inserted] = residual.try_emplace(e, 0.0);
      it->second -= coef * c;
      if (it->second == 0.0) residual.erase(it);
    }
  }

  Polynomial p(q.dimension(), std::move(solution));
  const double scale_q = q.coefficient_norm();
  const double r = subtract(apply_dbeta_w(term, p), q).coefficient_norm();
  if (r > kSolveTolerance * scale_q) {
    throw NumericalFailure("D^beta solve residual " + std::to_string(r) + " exceeds tolerance for retention (" +
                               term.retention.to_string() + ")",
                           r);
  }
  return p;
}

}  // namespace sobolev
