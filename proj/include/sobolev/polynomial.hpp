#pragma once

#include <map>
#include <span>

#include "sobolev/multi_index.hpp"
#include "sobolev/precision.hpp"

namespace sobolev {

/// Sparse multivariate polynomial in the monomial basis with double
/// coefficients. Terms are kept in graded-lex descending order and in
/// canonical form: no stored coefficient is zero, and coefficients below
/// 1e-14 times the largest magnitude are dropped.
class Polynomial {
 public:
  using Terms = std::map<MultiIndex, double, GradedLexGreater>;

  static constexpr double kPruneRelative = 1e-14;

  explicit Polynomial(int dimension);
  Polynomial(int dimension, Terms terms);

  static Polynomial constant(int dimension, double value);
  static Polynomial monomial(const MultiIndex& exponent, double coefficient = 1.0);
  /// x_axis (0-based axis).
  static Polynomial coordinate(int dimension, int axis);

  int dimension() const noexcept { return dimension_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  double coefficient(const MultiIndex& exponent) const;
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// Largest exponent per axis.
  MultiIndex degree_per_axis() const;
  /// Max-abs coefficient norm.
  double coefficient_norm() const;

  double evaluate(std::span<const double> x) const;
  HpReal evaluate(std::span<const HpReal> x) const;

  bool operator==(const Polynomial& other) const = default;

 private:
  void canonicalize();

  int dimension_;
  Terms terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial subtract(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, double factor);
Polynomial mul(const Polynomial& p, const Polynomial& q);
/// Exact partial derivative D^gamma p.
Polynomial differentiate(const Polynomial& p, const MultiIndex& gamma);
double evaluate(const Polynomial& p, std::span<const double> x);
/// p with x_axis replaced by a * x_axis + b (0-based axis).
Polynomial affine_substitute(const Polynomial& p, int axis, double a, double b);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return subtract(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }
inline Polynomial operator*(double c, const Polynomial& p) { return scale(p, c); }

}  // namespace sobolev
