#include "sobolev/sigma_partition.hpp"

#include <string>

#include "sobolev/errors.hpp"

namespace sobolev {

namespace {

std::uint64_t binomial(int n, int k) {
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

// x^k (1-x)^(m-k) in the variable `axis`.
Polynomial axis_factor(int dimension, int axis, int kept, int order) {
  const auto x = Polynomial::coordinate(dimension, axis);
  const auto one_minus_x = affine_substitute(x, axis, -1.0, 1.0);
  auto out = Polynomial::constant(dimension, 1.0);
  for (int i = 0; i < kept; ++i) out = mul(out, x);
  for (int i = kept; i < order; ++i) out = mul(out, one_minus_x);
  return out;
}

}  // namespace

std::vector<SigmaTerm> enumerate_sigma(int order, int dimension) {
  if (order < 1) throw ConfigError("sigma enumeration needs m >= 1");
  if (dimension < 1) throw ConfigError("sigma enumeration needs N >= 1");
  std::size_t count = 1;
  for (int j = 0; j < dimension; ++j) {
    count *= static_cast<std::size_t>(order) + 1;
    if (count > kMaxSigmaTerms) {
      throw ConfigError("(m+1)^N exceeds the sigma term limit of " + std::to_string(kMaxSigmaTerms));
    }
  }

  std::vector<SigmaTerm> out;
  out.reserve(count);
  for (auto& k : all_below(MultiIndex::filled(dimension, order))) {
    std::uint64_t mult = 1;
    for (int j = 0; j < dimension; ++j) mult *= binomial(order, k[j]);
    out.push_back(SigmaTerm{order, std::move(k), mult});
  }
  return out;
}

Polynomial weight_polynomial(const SigmaTerm& term) {
  const int dim = term.dimension();
  auto out = Polynomial::constant(dim, 1.0);
  for (int j = 0; j < dim; ++j) out = mul(out, axis_factor(dim, j, term.retention[j], term.order));
  return out;
}

double verify_identity(int order, int dimension) {
  auto sum = Polynomial(dimension);
  for (const auto& t : enumerate_sigma(order, dimension)) {
    sum = add(sum, scale(weight_polynomial(t), static_cast<double>(t.multiplicity)));
  }
  return subtract(sum, Polynomial::constant(dimension, 1.0)).coefficient_norm();
}

}  // namespace sobolev
