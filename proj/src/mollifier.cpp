#include "sobolev/mollifier.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "sobolev/errors.hpp"
#include "sobolev/quadrature.hpp"

namespace sobolev {

namespace {

class DilatedOracle final : public DerivativeOracle {
 public:
  DilatedOracle(OraclePtr base, int step, std::vector<double> centre)
      : base_(std::move(base)), step_(step), factor_(1.0 - 1.0 / (step + 1.0)), centre_(std::move(centre)) {}

  int dimension() const override { return base_->dimension(); }
  bool supports(const MultiIndex& gamma) const override { return base_->supports(gamma); }

  double eval(const MultiIndex& gamma, std::span<const double> x) const override {
    std::vector<double> y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) y[j] = centre_[j] + factor_ * (x[j] - centre_[j]);
    return std::pow(factor_, gamma.total()) * base_->eval(gamma, y);
  }

  HpReal eval_hp(const MultiIndex& gamma, std::span<const HpReal> x) const override {
    const HpReal f = HpReal(step_) / HpReal(step_ + 1);
    std::vector<HpReal> y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) y[j] = HpReal(centre_[j]) + f * (x[j] - HpReal(centre_[j]));
    HpReal scale(1);
    for (int i = 0; i < gamma.total(); ++i) scale *= f;
    return scale * base_->eval_hp(gamma, y);
  }

 private:
  OraclePtr base_;
  int step_;
  double factor_;
  std::vector<double> centre_;
};

class SmoothedOracle final : public DerivativeOracle {
 public:
  SmoothedOracle(OraclePtr u, const MollifierConfig& cfg, int target_order)
      : kernel_(cfg.kernel_smoothness, u->dimension()),
        cfg_(cfg),
        target_order_(target_order),
        split_(cfg.function_split < 0 ? cfg.function_order : cfg.function_split),
        rule_(unit_ball_rule(u->dimension(), cfg.quadrature_nodes)) {
    const int dim = u->dimension();
    dilated_ = dilate(std::move(u), cfg.step, std::vector<double>(static_cast<std::size_t>(dim), 0.5));
    for (const auto& g : all_up_to_order(dim, target_order_)) {
      if (g.total() > kernel_.smoothness()) continue;
      std::vector<double> values(rule_.size());
      for (std::size_t q = 0; q < rule_.size(); ++q) {
        values[q] = kernel_.derivative(g, std::span<const double>(rule_.nodes).subspan(q * dim, dim));
      }
      kernel_values_.emplace(g, std::move(values));
    }
  }

  int dimension() const override { return dilated_->dimension(); }
  bool supports(const MultiIndex& gamma) const override {
    return gamma.dimension() == dimension() && gamma.total() <= target_order_;
  }

  double eval(const MultiIndex& gamma, std::span<const double> x) const override {
    require(gamma);
    if (static_cast<int>(x.size()) != dimension()) throw InputError("evaluation point dimension mismatch");
    CacheKey key{gamma.orders(), std::vector<double>(x.begin(), x.end())};
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    const double value = convolve(gamma, x);
    std::lock_guard lock(mutex_);
    cache_.emplace(std::move(key), value);
    return value;
  }

 private:
  using CacheKey = std::pair<std::vector<int>, std::vector<double>>;

  double convolve(const MultiIndex& gamma, std::span<const double> x) const {
    const int dim = dimension();
    // gamma'' takes orders greedily from axis 0 until |gamma''| = min(|gamma|, split)
    std::vector<int> on_u(static_cast<std::size_t>(dim), 0);
    int budget = std::min(gamma.total(), split_);
    for (int j = 0; j < dim && budget > 0; ++j) {
      on_u[j] = std::min(gamma[j], budget);
      budget -= on_u[j];
    }
    const MultiIndex gamma_u(on_u);
    const MultiIndex gamma_k = gamma - gamma_u;
    const auto it = kernel_values_.find(gamma_k);
    if (it == kernel_values_.end()) {
      throw InputError("kernel derivative of order " + std::to_string(gamma_k.total()) +
                       " exceeds kernel smoothness " + std::to_string(kernel_.smoothness()));
    }
    const auto& kvals = it->second;
    const double lambda = cfg_.scale;
    const double kernel_scale = std::pow(lambda, gamma_k.total());

    std::vector<double> y(static_cast<std::size_t>(dim));
    double sum = 0.0;
    for (std::size_t q = 0; q < rule_.size(); ++q) {
      if (kvals[q] == 0.0) continue;
      for (int j = 0; j < dim; ++j) y[j] = x[j] - rule_.nodes[q * dim + j] / lambda;
      sum += rule_.weights[q] * kvals[q] * dilated_->eval(gamma_u, y);
    }
    return kernel_scale * sum;
  }

  BumpKernel kernel_;
  MollifierConfig cfg_;
  int target_order_;
  int split_;
  QuadratureRule rule_;
  OraclePtr dilated_;
  std::map<MultiIndex, std::vector<double>, GradedLexGreater> kernel_values_;

  mutable std::mutex mutex_;
  mutable std::map<CacheKey, double> cache_;
};

}  // namespace

BumpKernel::BumpKernel(int smoothness, int dimension)
    : smoothness_(smoothness), dimension_(dimension), normalization_(0.0), poly_(dimension < 1 ? 1 : dimension) {
  if (smoothness < 1) throw ConfigError("kernel smoothness must be >= 1");
  if (dimension < 1 || dimension > 3) throw ConfigError("kernel dimension must be in [1, 3]");
  // 1 / int_{|z|<1} (1-|z|^2)^s dz = Gamma(s+1+N/2) / (pi^(N/2) Gamma(s+1))
  const double half = 0.5 * dimension;
  normalization_ =
      std::tgamma(smoothness + 1.0 + half) / (std::pow(std::numbers::pi, half) * std::tgamma(smoothness + 1.0));

  auto base = Polynomial::constant(dimension, 1.0);
  for (int j = 0; j < dimension; ++j) {
    const auto x = Polynomial::coordinate(dimension, j);
    base = subtract(base, mul(x, x));
  }
  auto p = Polynomial::constant(dimension, normalization_);
  for (int i = 0; i < smoothness; ++i) p = mul(p, base);
  poly_ = std::move(p);
}

double BumpKernel::profile(double r) const {
  if (r >= 1.0) return 0.0;
  return normalization_ * std::pow(1.0 - r * r, smoothness_);
}

double BumpKernel::derivative(const MultiIndex& gamma, std::span<const double> z) const {
  if (static_cast<int>(z.size()) != dimension_) throw InputError("kernel evaluation dimension mismatch");
  double r2 = 0.0;
  for (double v : z) r2 += v * v;
  if (r2 >= 1.0) return 0.0;
  return differentiate(poly_, gamma).evaluate(z);
}

MollifierConfig MollifierConfig::defaults(int step, int order, int dimension) {
  MollifierConfig cfg;
  cfg.step = step;
  cfg.scale = 2.0 * (step + 1);
  cfg.function_order = order;
  cfg.kernel_smoothness = order * dimension - order + 1;
  return cfg;
}

void MollifierConfig::validate() const {
  if (step < 1) throw ConfigError("dilation step n must be >= 1");
  if (!(scale >= 2.0 * (step + 1))) {
    throw ConfigError("mollifier scale must be >= 2(n+1) so the kernel support stays inside the dilation margin");
  }
  if (quadrature_nodes < 1) throw ConfigError("quadrature needs at least one node per axis");
  if (function_order < 0) throw ConfigError("function order must be >= 0");
  if (kernel_smoothness < 1) throw ConfigError("kernel smoothness must be >= 1");
}

OraclePtr dilate(OraclePtr u, int step) {
  if (!u) throw InputError("dilate needs an oracle");
  return dilate(u, step, std::vector<double>(static_cast<std::size_t>(u->dimension()), 0.0));
}

OraclePtr dilate(OraclePtr u, int step, std::span<const double> centre) {
  if (!u) throw InputError("dilate needs an oracle");
  if (step < 1) throw InputError("dilation step n must be >= 1");
  if (static_cast<int>(centre.size()) != u->dimension()) throw InputError("dilation centre dimension mismatch");
  return std::make_shared<DilatedOracle>(std::move(u), step, std::vector<double>(centre.begin(), centre.end()));
}

OraclePtr smooth(OraclePtr u, const MollifierConfig& cfg, int target_order) {
  if (!u) throw InputError("smooth needs an oracle");
  cfg.validate();
  const int capacity = cfg.function_order + cfg.kernel_smoothness - 1;
  if (target_order < 0 || target_order > capacity) {
    throw ConfigError("target order " + std::to_string(target_order) + " exceeds m + s - 1 = " +
                      std::to_string(capacity));
  }
  const int split = cfg.function_split < 0 ? cfg.function_order : cfg.function_split;
  for (const auto& g : all_up_to_order(u->dimension(), std::min(split, target_order))) u->require(g);
  return std::make_shared<SmoothedOracle>(std::move(u), cfg, target_order);
}

double sobolev_distance(const DerivativeOracle& a, const DerivativeOracle& b, int order, const GridSpec& grid,
                        Execution exec) {
  if (a.dimension() != b.dimension() || grid.dimension != a.dimension()) {
    throw InputError("sobolev distance dimension mismatch");
  }
  double total = 0.0;
  for (const auto& alpha : all_up_to_order(a.dimension(), order)) {
    a.require(alpha);
    b.require(alpha);
    const auto diffs = kernels::sample_grid(
        grid, [&](std::span<const double> x) { return a.eval(alpha, x) - b.eval(alpha, x); }, exec);
    total += kernels::max_abs(diffs);
  }
  return total;
}

}  // namespace sobolev
