#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sobolev/multi_index.hpp"
#include "sobolev/polynomial.hpp"
#include "sobolev/precision.hpp"

namespace sobolev {

/// A function u on (a neighbourhood of) [0,1]^N that evaluates D^gamma u for
/// every supported gamma. Implementations must be safe to call concurrently.
class DerivativeOracle {
 public:
  virtual ~DerivativeOracle() = default;

  virtual int dimension() const = 0;
  virtual bool supports(const MultiIndex& gamma) const = 0;
  virtual double eval(const MultiIndex& gamma, std::span<const double> x) const = 0;

  /// High-precision evaluation used for Bernstein lattice sampling. The
  /// default rounds x to double and promotes eval(); closed-form oracles
  /// override it with a genuine 100-digit evaluation.
  virtual HpReal eval_hp(const MultiIndex& gamma, std::span<const HpReal> x) const;

  /// Throws InputError unless supports(gamma).
  void require(const MultiIndex& gamma) const;
};

using OraclePtr = std::shared_ptr<const DerivativeOracle>;

/// Exact oracle for a polynomial. Derivative polynomials are cached.
class PolynomialOracle final : public DerivativeOracle {
 public:
  explicit PolynomialOracle(Polynomial p);

  int dimension() const override { return poly_.dimension(); }
  bool supports(const MultiIndex&) const override { return true; }
  double eval(const MultiIndex& gamma, std::span<const double> x) const override;
  HpReal eval_hp(const MultiIndex& gamma, std::span<const HpReal> x) const override;

  const Polynomial& polynomial() const noexcept { return poly_; }

 private:
  const Polynomial& derivative(const MultiIndex& gamma) const;

  Polynomial poly_;
  mutable std::mutex mutex_;
  mutable std::map<MultiIndex, Polynomial, GradedLexGreater> derivatives_;
};

/// exp(rate * sum_j x_j).
class ExpSumOracle final : public DerivativeOracle {
 public:
  ExpSumOracle(int dimension, double rate = 1.0);

  int dimension() const override { return dimension_; }
  bool supports(const MultiIndex&) const override { return true; }
  double eval(const MultiIndex& gamma, std::span<const double> x) const override;
  HpReal eval_hp(const MultiIndex& gamma, std::span<const HpReal> x) const override;

 private:
  int dimension_;
  double rate_;
};

/// sin(pi/2 * sum_j x_j).
class SinSumOracle final : public DerivativeOracle {
 public:
  explicit SinSumOracle(int dimension);

  int dimension() const override { return dimension_; }
  bool supports(const MultiIndex&) const override { return true; }
  double eval(const MultiIndex& gamma, std::span<const double> x) const override;
  HpReal eval_hp(const MultiIndex& gamma, std::span<const HpReal> x) const override;

 private:
  int dimension_;
};

/// One-variable factor of a separable oracle.
class UnivariateProfile {
 public:
  virtual ~UnivariateProfile() = default;
  /// Highest derivative order that exists as a continuous function.
  virtual int max_order() const = 0;
  virtual double value(int order, double t) const = 0;
  virtual HpReal value(int order, const HpReal& t) const = 0;
};

/// f(t) = 1.
std::shared_ptr<const UnivariateProfile> constant_profile();
/// f(t) = sin(pi t / 2).
std::shared_ptr<const UnivariateProfile> sine_profile();
/// f(t) = exp(t).
std::shared_ptr<const UnivariateProfile> exp_profile();
/// f(t) = |t - centre|^power; C^floor(power) when power is not an integer.
std::shared_ptr<const UnivariateProfile> abs_power_profile(double centre, double power);

/// prod_j f_j(x_j).
class SeparableOracle final : public DerivativeOracle {
 public:
  explicit SeparableOracle(std::vector<std::shared_ptr<const UnivariateProfile>> factors);

  int dimension() const override { return static_cast<int>(factors_.size()); }
  bool supports(const MultiIndex& gamma) const override;
  double eval(const MultiIndex& gamma, std::span<const double> x) const override;
  HpReal eval_hp(const MultiIndex& gamma, std::span<const HpReal> x) const override;

 private:
  std::vector<std::shared_ptr<const UnivariateProfile>> factors_;
};

/// w * u with derivatives by the Leibniz rule; the factors of w are exact.
class WeightedOracle final : public DerivativeOracle {
 public:
  WeightedOracle(Polynomial weight, OraclePtr base);

  int dimension() const override { return base_->dimension(); }
  bool supports(const MultiIndex& gamma) const override;
  double eval(const MultiIndex& gamma, std::span<const double> x) const override;
  HpReal eval_hp(const MultiIndex& gamma, std::span<const HpReal> x) const override;

 private:
  template <class T>
  T leibniz(const MultiIndex& gamma, std::span<const T> x) const;

  Polynomial weight_;
  OraclePtr base_;
  PolynomialOracle weight_oracle_;
};

/// u - P.
class DifferenceOracle final : public DerivativeOracle {
 public:
  DifferenceOracle(OraclePtr base, Polynomial subtrahend);

  int dimension() const override { return base_->dimension(); }
  bool supports(const MultiIndex& gamma) const override { return base_->supports(gamma); }
  double eval(const MultiIndex& gamma, std::span<const double> x) const override;
  HpReal eval_hp(const MultiIndex& gamma, std::span<const HpReal> x) const override;

 private:
  OraclePtr base_;
  PolynomialOracle subtrahend_;
};

/// Names accepted by make_builtin_oracle.
std::vector<std::string> builtin_oracle_names();

/// zero, one, x1, x1-squared, x1x2, exp-sum, sin-sum, sin-x1, sin-product,
/// kink (prod |x_j-0.4|^2.5), kink-c1 (prod |x_j-0.4|^1.5).
/// Throws InputError for unknown names or unsupported dimensions.
OraclePtr make_builtin_oracle(std::string_view name, int dimension);

}  // namespace sobolev
