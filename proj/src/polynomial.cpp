#include "sobolev/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sobolev/errors.hpp"

namespace sobolev {

namespace {

void check_dimensions(const Polynomial& p, const Polynomial& q) {
  if (p.dimension() != q.dimension()) throw InputError("polynomial dimension mismatch");
}

template <class T>
T evaluate_terms(const Polynomial::Terms& terms, int dimension, std::span<const T> x) {
  if (static_cast<int>(x.size()) != dimension) throw InputError("evaluation point dimension mismatch");
  if (terms.empty()) return T(0);

  // powers[j][e] = x_j^e up to the largest exponent used on axis j
  std::vector<int> top(static_cast<std::size_t>(dimension), 0);
  for (const auto& [e, c] : terms) {
    for (int j = 0; j < dimension; ++j) top[j] = std::max(top[j], e[j]);
  }
  std::vector<std::vector<T>> powers(static_cast<std::size_t>(dimension));
  for (int j = 0; j < dimension; ++j) {
    auto& row = powers[j];
    row.resize(static_cast<std::size_t>(top[j]) + 1);
    row[0] = T(1);
    for (int e = 1; e <= top[j]; ++e) row[e] = row[e - 1] * x[j];
  }

  T sum(0);
  for (const auto& [e, c] : terms) {
    T term(c);
    for (int j = 0; j < dimension; ++j) {
      if (e[j]) term *= powers[j][e[j]];
    }
    sum += term;
  }
  return sum;
}

}  // namespace

Polynomial::Polynomial(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw InputError("polynomial dimension must be positive");
}

Polynomial::Polynomial(int dimension, Terms terms) : Polynomial(dimension) {
  for (const auto& [e, c] : terms) {
    if (e.dimension() != dimension) throw InputError("term dimension does not match polynomial");
    if (!std::isfinite(c)) throw InputError("non-finite polynomial coefficient");
  }
  terms_ = std::move(terms);
  canonicalize();
}

Polynomial Polynomial::constant(int dimension, double value) {
  Terms t;
  t.emplace(MultiIndex::zeros(dimension), value);
  return Polynomial(dimension, std::move(t));
}

Polynomial Polynomial::monomial(const MultiIndex& exponent, double coefficient) {
  Terms t;
  t.emplace(exponent, coefficient);
  return Polynomial(exponent.dimension(), std::move(t));
}

Polynomial Polynomial::coordinate(int dimension, int axis) {
  return monomial(MultiIndex::unit(dimension, axis));
}

void Polynomial::canonicalize() {
  double largest = 0.0;
  for (const auto& [e, c] : terms_) largest = std::max(largest, std::abs(c));
  const double floor = kPruneRelative * largest;
  std::erase_if(terms_, [floor](const auto& kv) { return kv.second == 0.0 || std::abs(kv.second) < floor; });
}

double Polynomial::coefficient(const MultiIndex& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0.0 : it->second;
}

int Polynomial::total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.total(); }

MultiIndex Polynomial::degree_per_axis() const {
  std::vector<int> top(static_cast<std::size_t>(dimension_), 0);
  for (const auto& [e, c] : terms_) {
    for (int j = 0; j < dimension_; ++j) top[j] = std::max(top[j], e[j]);
  }
  return MultiIndex(std::move(top));
}

double Polynomial::coefficient_norm() const {
  double out = 0.0;
  for (const auto& [e, c] : terms_) out = std::max(out, std::abs(c));
  return out;
}

double Polynomial::evaluate(std::span<const double> x) const { return evaluate_terms(terms_, dimension_, x); }

HpReal Polynomial::evaluate(std::span<const HpReal> x) const { return evaluate_terms(terms_, dimension_, x); }

Polynomial add(const Polynomial& p, const Polynomial& q) {
  check_dimensions(p, q);
  Polynomial::Terms out = p.terms();
  for (const auto& [e, c] : q.terms()) out[e] += c;
  return Polynomial(p.dimension(), std::move(out));
}

Polynomial subtract(const Polynomial& p, const Polynomial& q) { return add(p, scale(q, -1.0)); }

Polynomial scale(const Polynomial& p, double factor) {
  Polynomial::Terms out;
  if (factor != 0.0) {
    for (const auto& [e, c] : p.terms()) out.emplace(e, c * factor);
  }
  return Polynomial(p.dimension(), std::move(out));
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
  check_dimensions(p, q);
  Polynomial::Terms out;
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) out[ep + eq] += cp * cq;
  }
  return Polynomial(p.dimension(), std::move(out));
}

Polynomial differentiate(const Polynomial& p, const MultiIndex& gamma) {
  if (gamma.dimension() != p.dimension()) throw InputError("derivative order dimension mismatch");
  Polynomial::Terms out;
  for (const auto& [e, c] : p.terms()) {
    if (!componentwise_le(gamma, e)) continue;
    double factor = c;
    for (int j = 0; j < p.dimension(); ++j) {
      for (int r = 0; r < gamma[j]; ++r) factor *= e[j] - r;
    }
    out.emplace(e - gamma, factor);
  }
  return Polynomial(p.dimension(), std::move(out));
}

double evaluate(const Polynomial& p, std::span<const double> x) { return p.evaluate(x); }

Polynomial affine_substitute(const Polynomial& p, int axis, double a, double b) {
  if (axis < 0 || axis >= p.dimension()) throw InputError("substitution axis out of range");
  Polynomial::Terms out;
  for (const auto& [e, c] : p.terms()) {
    const int power = e[axis];
    // (a x + b)^power = sum_r C(power, r) a^r b^(power-r) x^r
    double binom = 1.0;
    for (int r = 0; r <= power; ++r) {
      if (r > 0) binom = binom * (power - r + 1) / r;
      const double coef = c * binom * std::pow(a, r) * std::pow(b, power - r);
      if (coef != 0.0) out[e.with(axis, r)] += coef;
    }
  }
  return Polynomial(p.dimension(), std::move(out));
}

}  // namespace sobolev
