#include "sobolev/oracle.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>

#include "sobolev/errors.hpp"

namespace sobolev {

namespace {

void check_point(int dimension, const MultiIndex& gamma, std::size_t points) {
  if (gamma.dimension() != dimension || static_cast<int>(points) != dimension) {
    throw InputError("oracle evaluation dimension mismatch");
  }
}

template <class T>
T pi_value() {
  return boost::math::constants::pi<T>();
}

// d^k/ds^k sin(s) = sin(s + k pi/2), taken without adding a phase.
template <class T>
T sin_derivative(int k, const T& s) {
  using std::cos;
  using std::sin;
  switch (k % 4) {
    case 0:
      return sin(s);
    case 1:
      return cos(s);
    case 2:
      return -sin(s);
    default:
      return -cos(s);
  }
}

template <class T>
T power_of(T base, int k) {
  T out(1);
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}

class ConstantProfile final : public UnivariateProfile {
 public:
  int max_order() const override { return 1 << 20; }
  double value(int order, double) const override { return order == 0 ? 1.0 : 0.0; }
  HpReal value(int order, const HpReal&) const override { return HpReal(order == 0 ? 1 : 0); }
};

class SineProfile final : public UnivariateProfile {
 public:
  int max_order() const override { return 1 << 20; }
  double value(int order, double t) const override { return eval<double>(order, t); }
  HpReal value(int order, const HpReal& t) const override { return eval<HpReal>(order, t); }

 private:
  template <class T>
  T eval(int order, const T& t) const {
    const T w = pi_value<T>() / 2;
    return power_of(w, order) * sin_derivative(order, T(w * t));
  }
};

class ExpProfile final : public UnivariateProfile {
 public:
  int max_order() const override { return 1 << 20; }
  double value(int, double t) const override { return std::exp(t); }
  HpReal value(int, const HpReal& t) const override { return exp(t); }
};

class AbsPowerProfile final : public UnivariateProfile {
 public:
  AbsPowerProfile(double centre, double power) : centre_(centre), power_(power) {
    if (!(power > 0.0)) throw InputError("abs-power profile needs a positive exponent");
  }

  int max_order() const override {
    const double f = std::floor(power_);
    return f == power_ ? 1 << 20 : static_cast<int>(f);
  }
  double value(int order, double t) const override { return eval<double>(order, t); }
  HpReal value(int order, const HpReal& t) const override { return eval<HpReal>(order, t); }

 private:
  // d^r/dt^r |s|^p = p(p-1)...(p-r+1) |s|^(p-r) sign(s)^r
  template <class T>
  T eval(int order, const T& t) const {
    using std::abs;
    using std::pow;
    const T s = t - T(centre_);
    T coef(1);
    for (int i = 0; i < order; ++i) coef *= T(power_) - i;
    if (coef == 0) return T(0);
    const T a = abs(s);
    const T exponent = T(power_) - order;
    T mag = (a == 0) ? T(exponent == 0 ? 1 : 0) : T(pow(a, exponent));
    if (order % 2 == 1 && s < 0) mag = -mag;
    return coef * mag;
  }

  double centre_;
  double power_;
};

}  // namespace

HpReal DerivativeOracle::eval_hp(const MultiIndex& gamma, std::span<const HpReal> x) const {
  std::vector<double> xd(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) xd[i] = static_cast<double>(x[i]);
  return HpReal(eval(gamma, xd));
}

void DerivativeOracle::require(const MultiIndex& gamma) const {
  if (gamma.dimension() != dimension()) throw InputError("derivative order dimension mismatch");
  if (!supports(gamma)) {
    throw InputError("oracle does not provide the derivative of order (" + gamma.to_string() + ")");
  }
}

// PolynomialOracle ---------------------------------------------------------

PolynomialOracle::PolynomialOracle(Polynomial p) : poly_(std::move(p)) {}

const Polynomial& PolynomialOracle::derivative(const MultiIndex& gamma) const {
  std::lock_guard lock(mutex_);
  auto it = derivatives_.find(gamma);
  if (it == derivatives_.end()) it = derivatives_.emplace(gamma, differentiate(poly_, gamma)).first;
  return it->second;
}

double PolynomialOracle::eval(const MultiIndex& gamma, std::span<const double> x) const {
  check_point(dimension(), gamma, x.size());
  return derivative(gamma).evaluate(x);
}

HpReal PolynomialOracle::eval_hp(const MultiIndex& gamma, std::span<const HpReal> x) const {
  check_point(dimension(), gamma, x.size());
  return derivative(gamma).evaluate(x);
}

// ExpSumOracle -------------------------------------------------------------

ExpSumOracle::ExpSumOracle(int dimension, double rate) : dimension_(dimension), rate_(rate) {
  if (dimension < 1) throw InputError("oracle dimension must be positive");
}

double ExpSumOracle::eval(const MultiIndex& gamma, std::span<const double> x) const {
  check_point(dimension_, gamma, x.size());
  double s = 0.0;
  for (double v : x) s += v;
  return std::pow(rate_, gamma.total()) * std::exp(rate_ * s);
}

HpReal ExpSumOracle::eval_hp(const MultiIndex& gamma, std::span<const HpReal> x) const {
  check_point(dimension_, gamma, x.size());
  HpReal s(0);
  for (const auto& v : x) s += v;
  const HpReal rate(rate_);
  return power_of(rate, gamma.total()) * exp(rate * s);
}

// SinSumOracle -------------------------------------------------------------

SinSumOracle::SinSumOracle(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw InputError("oracle dimension must be positive");
}

double SinSumOracle::eval(const MultiIndex& gamma, std::span<const double> x) const {
  check_point(dimension_, gamma, x.size());
  const double w = pi_value<double>() / 2;
  double s = 0.0;
  for (double v : x) s += v;
  return std::pow(w, gamma.total()) * sin_derivative(gamma.total(), w * s);
}

HpReal SinSumOracle::eval_hp(const MultiIndex& gamma, std::span<const HpReal> x) const {
  check_point(dimension_, gamma, x.size());
  const HpReal w = pi_value<HpReal>() / 2;
  HpReal s(0);
  for (const auto& v : x) s += v;
  return power_of(w, gamma.total()) * sin_derivative(gamma.total(), HpReal(w * s));
}

// Profiles / SeparableOracle -------------------------------------------------

std::shared_ptr<const UnivariateProfile> constant_profile() { return std::make_shared<ConstantProfile>(); }
std::shared_ptr<const UnivariateProfile> sine_profile() { return std::make_shared<SineProfile>(); }
std::shared_ptr<const UnivariateProfile> exp_profile() { return std::make_shared<ExpProfile>(); }
std::shared_ptr<const UnivariateProfile> abs_power_profile(double centre, double power) {
  return std::make_shared<AbsPowerProfile>(centre, power);
}

SeparableOracle::SeparableOracle(std::vector<std::shared_ptr<const UnivariateProfile>> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw InputError("separable oracle needs at least one factor");
}

bool SeparableOracle::supports(const MultiIndex& gamma) const {
  if (gamma.dimension() != dimension()) return false;
  for (int j = 0; j < dimension(); ++j) {
    if (gamma[j] > factors_[j]->max_order()) return false;
  }
  return true;
}

double SeparableOracle::eval(const MultiIndex& gamma, std::span<const double> x) const {
  check_point(dimension(), gamma, x.size());
  double out = 1.0;
  for (int j = 0; j < dimension(); ++j) out *= factors_[j]->value(gamma[j], x[j]);
  return out;
}

HpReal SeparableOracle::eval_hp(const MultiIndex& gamma, std::span<const HpReal> x) const {
  check_point(dimension(), gamma, x.size());
  HpReal out(1);
  for (int j = 0; j < dimension(); ++j) out *= factors_[j]->value(gamma[j], x[j]);
  return out;
}

// WeightedOracle -----------------------------------------------------------

WeightedOracle::WeightedOracle(Polynomial weight, OraclePtr base)
    : weight_(std::move(weight)), base_(std::move(base)), weight_oracle_(weight_) {
  if (!base_) throw InputError("weighted oracle needs a base oracle");
  if (weight_.dimension() != base_->dimension()) throw InputError("weight and oracle dimension mismatch");
}

bool WeightedOracle::supports(const MultiIndex& gamma) const {
  for (const auto& delta : all_below(gamma)) {
    if (!base_->supports(gamma - delta)) return false;
  }
  return true;
}

template <class T>
T WeightedOracle::leibniz(const MultiIndex& gamma, std::span<const T> x) const {
  check_point(dimension(), gamma, x.size());
  require(gamma);
  const int top = weight_.degree_per_axis().max_entry();
  T sum(0);
  for (const auto& delta : all_below(gamma)) {
    if (delta.max_entry() > top) continue;
    const T w = T(multi_binomial(gamma, delta)) * [&] {
      if constexpr (std::is_same_v<T, double>) {
        return weight_oracle_.eval(delta, x);
      } else {
        return weight_oracle_.eval_hp(delta, x);
      }
    }();
    if (w == 0) continue;
    if constexpr (std::is_same_v<T, double>) {
      sum += w * base_->eval(gamma - delta, x);
    } else {
      sum += w * base_->eval_hp(gamma - delta, x);
    }
  }
  return sum;
}

double WeightedOracle::eval(const MultiIndex& gamma, std::span<const double> x) const {
  return leibniz<double>(gamma, x);
}

HpReal WeightedOracle::eval_hp(const MultiIndex& gamma, std::span<const HpReal> x) const {
  return leibniz<HpReal>(gamma, x);
}

// DifferenceOracle ---------------------------------------------------------

DifferenceOracle::DifferenceOracle(OraclePtr base, Polynomial subtrahend)
    : base_(std::move(base)), subtrahend_(std::move(subtrahend)) {
  if (!base_) throw InputError("difference oracle needs a base oracle");
  if (subtrahend_.dimension() != base_->dimension()) throw InputError("polynomial and oracle dimension mismatch");
}

double DifferenceOracle::eval(const MultiIndex& gamma, std::span<const double> x) const {
  return base_->eval(gamma, x) - subtrahend_.eval(gamma, x);
}

HpReal DifferenceOracle::eval_hp(const MultiIndex& gamma, std::span<const HpReal> x) const {
  return base_->eval_hp(gamma, x) - subtrahend_.eval_hp(gamma, x);
}

// Built-in suite -----------------------------------------------------------

std::vector<std::string> builtin_oracle_names() {
  return {"zero", "one", "x1", "x1-squared", "x1x2", "exp-sum", "sin-sum", "sin-x1", "sin-product", "kink", "kink-c1"};
}

OraclePtr make_builtin_oracle(std::string_view name, int dimension) {
  if (dimension < 1) throw InputError("oracle dimension must be positive");
  const auto x = [dimension](int axis) { return Polynomial::coordinate(dimension, axis); };
  const auto separable = [dimension](auto first, auto rest) {
    std::vector<std::shared_ptr<const UnivariateProfile>> f(static_cast<std::size_t>(dimension), rest);
    f[0] = first;
    return std::make_shared<SeparableOracle>(std::move(f));
  };

  if (name == "zero") return std::make_shared<PolynomialOracle>(Polynomial(dimension));
  if (name == "one") return std::make_shared<PolynomialOracle>(Polynomial::constant(dimension, 1.0));
  if (name == "x1") return std::make_shared<PolynomialOracle>(x(0));
  if (name == "x1-squared") return std::make_shared<PolynomialOracle>(mul(x(0), x(0)));
  if (name == "x1x2") {
    if (dimension < 2) throw InputError("x1x2 needs dimension >= 2");
    return std::make_shared<PolynomialOracle>(mul(x(0), x(1)));
  }
  if (name == "exp-sum") return std::make_shared<ExpSumOracle>(dimension);
  if (name == "sin-sum") return std::make_shared<SinSumOracle>(dimension);
  if (name == "sin-x1") return separable(sine_profile(), constant_profile());
  if (name == "sin-product") return separable(sine_profile(), sine_profile());
  if (name == "kink") return separable(abs_power_profile(0.4, 2.5), abs_power_profile(0.4, 2.5));
  if (name == "kink-c1") return separable(abs_power_profile(0.4, 1.5), abs_power_profile(0.4, 1.5));
  throw InputError("unknown function '" + std::string(name) + "'");
}

}  // namespace sobolev
