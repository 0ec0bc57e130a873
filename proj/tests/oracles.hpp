#pragma once

// Independent reference computations used by the unit and acceptance suites.
// None of these go through the code paths they check.

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sobolev/polynomial.hpp"

namespace sobolev::testing {

inline double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

/// B_n[f](x) in one dimension by direct summation in the Bernstein basis.
inline double bernstein_direct_1d(const std::function<double(double)>& f, int n, double x) {
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    sum += f(static_cast<double>(k) / n) * binomial(n, k) * std::pow(x, k) * std::pow(1.0 - x, n - k);
  }
  return sum;
}

/// Sum over all 2^(Nm) raw substitutions of prod over the Nm factors of
/// (x_j or 1 - x_j), each product expanded separately.
inline Polynomial raw_sigma_sum(int order, int dimension) {
  const int factors = order * dimension;
  Polynomial total(dimension);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << factors); ++mask) {
    Polynomial prod = Polynomial::constant(dimension, 1.0);
    for (int f = 0; f < factors; ++f) {
      const int axis = f / order;
      Polynomial::Terms t;
      if (mask >> f & 1U) {
        t.emplace(MultiIndex::unit(dimension, axis), 1.0);
      } else {
        t.emplace(MultiIndex::zeros(dimension), 1.0);
        t.emplace(MultiIndex::unit(dimension, axis), -1.0);
      }
      prod = mul(prod, Polynomial(dimension, std::move(t)));
    }
    total = add(total, prod);
  }
  return total;
}

/// Central-difference approximation of D^gamma f at x with step h (one
/// second-order central difference per unit order).
inline double central_difference(const std::function<double(std::span<const double>)>& f, const MultiIndex& gamma,
                                 std::vector<double> x, double h) {
  for (int j = 0; j < gamma.dimension(); ++j) {
    if (gamma[j] > 0) {
      const auto lower = gamma.with(j, gamma[j] - 1);
      auto xp = x;
      auto xm = x;
      xp[j] += h;
      xm[j] -= h;
      return (central_difference(f, lower, xp, h) - central_difference(f, lower, xm, h)) / (2 * h);
    }
  }
  return f(x);
}

/// Max-abs coefficient distance.
inline double coefficient_distance(const Polynomial& a, const Polynomial& b) {
  return subtract(a, b).coefficient_norm();
}

}  // namespace sobolev::testing
