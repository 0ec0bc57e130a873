#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sobolev/errors.hpp"
#include "sobolev/mollifier.hpp"
#include "sobolev/quadrature.hpp"

using namespace sobolev;

namespace {

double value(const DerivativeOracle& u, const MultiIndex& g, std::vector<double> x) { return u.eval(g, x); }

OraclePtr poly(Polynomial p) { return std::make_shared<PolynomialOracle>(std::move(p)); }

// Ball volume normalisation computed from the Beta integral, independent of the library's Gamma form.
double expected_normalization(int s, int dim) {
  // integral over the unit ball of (1-r^2)^s = |S^{N-1}| * B(N/2, s+1) / 2
  const double sphere = 2 * std::pow(std::numbers::pi, dim / 2.0) / std::tgamma(dim / 2.0);
  const double beta = std::tgamma(dim / 2.0) * std::tgamma(s + 1.0) / std::tgamma(dim / 2.0 + s + 1.0);
  return 1.0 / (sphere * beta / 2);
}

}  // namespace

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  const auto rule = gauss_legendre(6);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], 10);
  CHECK(s == doctest::Approx(2.0 / 11).epsilon(1e-14));
}

TEST_CASE("kernel integrates to one") {
  for (int dim = 1; dim <= 3; ++dim) {
    for (int s = 1; s <= 5; ++s) {
      const BumpKernel k(s, dim);
      CHECK(k.normalization() == doctest::Approx(expected_normalization(s, dim)).epsilon(1e-12));
      const auto rule = unit_ball_rule(dim, 24);
      double total = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) {
        double r2 = 0.0;
        for (int j = 0; j < dim; ++j) r2 += rule.nodes[i * dim + j] * rule.nodes[i * dim + j];
        total += rule.weights[i] * k.profile(std::sqrt(r2));
      }
      CHECK(std::abs(total - 1.0) <= 1e-6);
    }
  }
  // Midpoint rule, nothing shared with the Gauss path.
  const BumpKernel k(3, 1);
  double mid = 0.0;
  const int cells = 200000;
  for (int i = 0; i < cells; ++i) mid += k.profile(std::abs(-1.0 + (i + 0.5) * 2.0 / cells)) * 2.0 / cells;
  CHECK(std::abs(mid - 1.0) <= 1e-6);
}

TEST_CASE("kernel derivatives below s vanish at the sphere and outside") {
  for (int s = 1; s <= 4; ++s) {
    const BumpKernel k(s, 2);
    const std::vector<double> outside{0.8, 0.7};
    const std::vector<double> edge{1.0 - 1e-10, 0.0};
    for (const auto& g : all_up_to_order(2, s - 1)) {
      CHECK(k.derivative(g, outside) == 0.0);
      CHECK(std::abs(k.derivative(g, edge)) <= 1e-6);
    }
  }
}

TEST_CASE("dilate examples") {
  const auto x = poly(Polynomial::coordinate(1, 0));
  const auto xsq = poly(Polynomial::monomial(MultiIndex{2}));
  const auto sine = make_builtin_oracle("sin-x1", 1);
  CHECK(value(*dilate(sine, 5), MultiIndex{0}, {0.0}) == value(*sine, MultiIndex{0}, {0.0}));
  for (int n : {1, 3, 9}) {
    CHECK(value(*dilate(x, n), MultiIndex{1}, {0.37}) == doctest::Approx(1.0 - 1.0 / (n + 1)));
  }
  const auto d = dilate(xsq, 1);
  for (double t : {0.2, 0.9}) {
    CHECK(value(*d, MultiIndex{0}, {t}) == doctest::Approx(t * t / 4));
    CHECK(value(*d, MultiIndex{1}, {t}) == doctest::Approx(t / 2));
  }
  const std::vector<double> mid{0.5};
  CHECK(value(*dilate(x, 3, mid), MultiIndex{0}, {0.5}) == 0.5);
}

TEST_CASE("constants are preserved") {
  for (int dim = 1; dim <= 2; ++dim) {
    const auto c = poly(Polynomial::constant(dim, 2.5));
    const auto cfg = MollifierConfig::defaults(4, 1, dim);
    const auto v = smooth(c, cfg, 1);
    for (double t : {0.0, 0.45, 1.0}) {
      const std::vector<double> x(dim, t);
      CHECK(std::abs(v->eval(MultiIndex::zeros(dim), x) - 2.5) <= 1e-6);
      CHECK(std::abs(v->eval(MultiIndex::unit(dim, 0), x)) <= 1e-6);
    }
  }
}

TEST_CASE("linear functions are reproduced up to the dilation") {
  const auto u = poly(add(Polynomial::coordinate(2, 0), scale(Polynomial::coordinate(2, 1), -3.0)));
  const std::vector<double> centre{0.5, 0.5};
  const auto cfg = MollifierConfig::defaults(6, 1, 2);
  const auto v = smooth(u, cfg, 1);
  const auto d = dilate(u, 6, centre);
  for (const auto& x : {std::vector<double>{0.1, 0.8}, std::vector<double>{1.0, 0.0}}) {
    CHECK(v->eval(MultiIndex::zeros(2), x) == doctest::Approx(d->eval(MultiIndex::zeros(2), x)).epsilon(1e-10));
  }
}

TEST_CASE("property: convolution commutes with differentiation") {
  const auto p = add(Polynomial::monomial(MultiIndex{3, 0}),
                     add(scale(Polynomial::monomial(MultiIndex{1, 2}), -2.0), Polynomial::monomial(MultiIndex{0, 1})));
  const auto u = poly(p);
  const int step = 3;
  const double t = 1.0 - 1.0 / (step + 1);
  auto on_function = MollifierConfig::defaults(step, 2, 2);
  auto on_kernel = on_function;
  on_kernel.function_split = 0;
  const auto v = smooth(u, on_function, 2);
  const auto w = smooth(u, on_kernel, 2);
  const std::vector<double> x{0.3, 0.6};
  for (const auto& g : all_up_to_order(2, 2)) {
    const double direct = v->eval(g, x);
    const auto vg = smooth(poly(differentiate(p, g)), on_function, 0);
    CAPTURE(g.to_string(','));
    CHECK(std::abs(direct - std::pow(t, g.total()) * vg->eval(MultiIndex::zeros(2), x)) <= 1e-5);
    CHECK(std::abs(direct - w->eval(g, x)) <= 1e-5);
  }
}

TEST_CASE("smoothed derivatives agree with finite differences of the smoothed value") {
  const auto u = make_builtin_oracle("kink-c1", 1);
  const auto v = smooth(u, MollifierConfig::defaults(4, 1, 1), 1);
  const auto f = [&](std::span<const double> x) { return v->eval(MultiIndex{0}, x); };
  const std::vector<double> x{0.37};
  CHECK(v->eval(MultiIndex{1}, x) ==
        doctest::Approx(sobolev::testing::central_difference(f, MultiIndex{1}, x, 1e-4)).epsilon(1e-5));
}

TEST_CASE("kink |x-0.4|^2.5 converges in W^{1,inf}") {
  const auto u = make_builtin_oracle("kink", 1);
  const GridSpec g = GridSpec::default_for(1);
  double previous = 1e300;
  for (int n : {4, 8, 16}) {
    const auto v = smooth(u, MollifierConfig::defaults(n, 1, 1), 1);
    const double e = sobolev_distance(*v, *u, 1, g);
    CHECK(e < previous);
    previous = e;
  }
}

TEST_CASE("property: C^1 test function converges within 10% slack") {
  for (int dim = 1; dim <= 2; ++dim) {
    const auto u = make_builtin_oracle("kink-c1", dim);
    const GridSpec g{dim, dim == 1 ? 101 : 21};
    double previous = 1e300;
    for (int n : {2, 4, 8}) {
      const auto v = smooth(u, MollifierConfig::defaults(n, 1, dim), 1);
      const double e = sobolev_distance(*v, *u, 1, g);
      CHECK(e <= 1.1 * previous);
      previous = e;
    }
  }
}

TEST_CASE("configuration errors") {
  const auto u = make_builtin_oracle("kink-c1", 1);
  auto cfg = MollifierConfig::defaults(4, 1, 1);
  CHECK(cfg.scale == 10.0);
  CHECK(cfg.kernel_smoothness == 1);
  CHECK(MollifierConfig::defaults(4, 2, 3).kernel_smoothness == 5);
  cfg.scale = 9.0;
  CHECK_THROWS_AS(smooth(u, cfg, 1), ConfigError);
  CHECK_THROWS_AS(smooth(u, MollifierConfig::defaults(4, 1, 1), 2), ConfigError);
  CHECK_THROWS_AS(BumpKernel(0, 1), ConfigError);
  CHECK_THROWS_AS(dilate(u, 0), InputError);
}
