#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <algorithm>

#include "sobolev/approximator.hpp"
#include "sobolev/dbeta_solver.hpp"
#include "sobolev/errors.hpp"
#include "sobolev/poincare.hpp"

using namespace sobolev;

namespace {

OraclePtr poly(Polynomial p) { return std::make_shared<PolynomialOracle>(std::move(p)); }

Polynomial bubble(int dim, int power) {
  Polynomial b = Polynomial::constant(dim, 1.0);
  for (int j = 0; j < dim; ++j) {
    const auto x = Polynomial::coordinate(dim, j);
    const auto f = subtract(x, mul(x, x));
    for (int r = 0; r < power; ++r) b = mul(b, f);
  }
  return b;
}

}  // namespace

TEST_CASE("lp_norm examples") {
  const GridSpec g{1, 1001};
  const ScalarField one = [](std::span<const double>) { return 1.0; };
  const ScalarField x = [](std::span<const double> p) { return p[0]; };
  for (auto p : {NormKind::l1, NormKind::l2, NormKind::linf}) CHECK(lp_norm(one, p, g) == doctest::Approx(1.0));
  CHECK(lp_norm(x, NormKind::linf, g) == 1.0);
  CHECK(std::abs(lp_norm(x, NormKind::l2, g) - 1.0 / std::sqrt(3.0)) <= 1e-3);
  CHECK(std::abs(lp_norm(x, NormKind::l1, g) - 0.5) <= 1e-12);
  CHECK(parse_norm("inf") == NormKind::linf);
  CHECK(norm_name(NormKind::l2) == "2");
  CHECK_THROWS_AS(parse_norm("3"), InputError);
}

TEST_CASE("check_order_one examples") {
  const GridSpec g = GridSpec::default_for(1);
  const auto r1 = check_order_one(*poly(Polynomial::coordinate(1, 0)), NormKind::linf, g);
  CHECK(r1.lhs == 1.0);
  CHECK(r1.rhs == 1.0);
  CHECK(r1.holds);
  const auto r2 = check_order_one(*poly(Polynomial::monomial(MultiIndex{2})), NormKind::linf, g);
  CHECK(r2.lhs == 1.0);
  CHECK(r2.rhs == 2.0);
  CHECK(r2.holds);
  const auto r3 = check_order_one(*make_builtin_oracle("sin-x1", 1), NormKind::l2, GridSpec{1, 1001});
  CHECK(r3.lhs == doctest::Approx(std::sqrt(0.5)).epsilon(1e-5));
  CHECK(r3.rhs == doctest::Approx(std::numbers::pi / 2 * std::sqrt(0.5)).epsilon(1e-5));
  CHECK(r3.holds);
}

TEST_CASE("order-one trace violation is rejected") {
  CHECK_THROWS_AS(check_order_one(*make_builtin_oracle("one", 2), NormKind::l2, GridSpec::default_for(2)), InputError);
}

TEST_CASE("property: order-one inequality holds on random trace-free functions") {
  std::mt19937_64 rng(5);
  for (int dim = 1; dim <= 2; ++dim) {
    const GridSpec g{dim, 41};
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = poly(mul(Polynomial::coordinate(dim, 0), random_polynomial(dim, 4, rng)));
      for (auto p : {NormKind::l1, NormKind::l2, NormKind::linf}) CHECK(check_order_one(*u, p, g).holds);
    }
  }
}

TEST_CASE("check_detailed example x1x2") {
  ConstantTracker tracker;
  const TraceChain chain{{MultiIndex{1, 0}, MultiIndex{1, 1}}, {0}};
  CHECK(chain.axis(0) == 1);
  const auto r = check_detailed(*make_builtin_oracle("x1x2", 2), chain, NormKind::linf, GridSpec::default_for(2), tracker);
  CHECK(r.ratio == 1.0);
  CHECK(r.empirical_constant == 1.0);
  CHECK_FALSE(r.degenerate);
  const TraceChain wrong{{MultiIndex{1, 0}, MultiIndex{1, 1}}, {1}};
  CHECK_THROWS_AS(check_detailed(*make_builtin_oracle("x1x2", 2), wrong, NormKind::linf, GridSpec::default_for(2), tracker),
                  InputError);
}

TEST_CASE("degenerate inputs") {
  ConstantTracker tracker;
  const TraceChain chain{{MultiIndex{0, 0}, MultiIndex{1, 0}}, {0}};
  const auto r = check_detailed(*make_builtin_oracle("zero", 2), chain, NormKind::l2, GridSpec{2, 11}, tracker);
  CHECK(r.degenerate);
  CHECK(check_standard(*make_builtin_oracle("zero", 1), 1, NormKind::linf, GridSpec{1, 11}).degenerate);
}

TEST_CASE("malformed chains are rejected") {
  CHECK_THROWS_AS((TraceChain{{MultiIndex{0, 0}, MultiIndex{1, 1}}, {0}}.validate()), InputError);
  CHECK_THROWS_AS((TraceChain{{MultiIndex{0, 0}, MultiIndex{1, 0}}, {2}}.validate()), InputError);
  CHECK_THROWS_AS((TraceChain{{MultiIndex{0, 0}, MultiIndex{1, 0}}, {}}.validate()), InputError);
}

TEST_CASE("check_standard example x(1-x)") {
  const auto r = check_standard(*poly(bubble(1, 1)), 1, NormKind::linf, GridSpec{1, 101});
  CHECK(r.lhs == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.ratio == doctest::Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(check_standard(*poly(Polynomial::coordinate(1, 0)), 1, NormKind::linf, GridSpec{1, 101}),
                  InputError);
}

TEST_CASE("property: ratios are scale invariant") {
  std::mt19937_64 rng(9);
  ConstantTracker tracker;
  const SigmaTerm t{2, MultiIndex{0, 2}, 1};
  const auto q = random_polynomial(2, 3, rng);
  const auto u = mul(weight_polynomial(t), q);
  const auto chain = chain_for_weight(t, MultiIndex{0, 1});
  for (auto p : {NormKind::l1, NormKind::l2, NormKind::linf}) {
    const double base = check_detailed(*poly(u), chain, p, GridSpec{2, 31}, tracker).ratio;
    for (double c : {-3.0, 1e-4, 250.0}) {
      const double scaled = check_detailed(*poly(scale(u, c)), chain, p, GridSpec{2, 31}, tracker).ratio;
      CHECK(std::abs(scaled - base) <= 1e-12 * base);
    }
  }
}

TEST_CASE("property: sigma weights satisfy every trace condition of their chain") {
  std::mt19937_64 rng(13);
  ConstantTracker tracker;
  for (int m = 1; m <= 2; ++m) {
    for (const auto& t : enumerate_sigma(m, 2)) {
      const auto u = poly(mul(weight_polynomial(t), random_polynomial(2, 3, rng)));
      for (const auto& alpha : all_up_to_order(2, m)) {
        if (!chain_admissible(t, alpha)) {
          CHECK_THROWS_AS(chain_for_weight(t, alpha), InputError);
          continue;
        }
        const auto chain = chain_for_weight(t, alpha);
        CHECK(chain.indices.front() == alpha);
        CHECK(chain.indices.back() == beta_index(m, 2));
        CHECK_NOTHROW(check_detailed(*u, chain, NormKind::l2, GridSpec{2, 21}, tracker));
      }
    }
  }
}

TEST_CASE("admissibility of weight chains") {
  CHECK(chain_admissible(SigmaTerm{2, MultiIndex{0, 2}, 1}, MultiIndex{0, 0}));
  CHECK_FALSE(chain_admissible(SigmaTerm{2, MultiIndex{1, 2}, 2}, MultiIndex{0, 0}));
  CHECK(chain_admissible(SigmaTerm{2, MultiIndex{1, 2}, 2}, MultiIndex{2, 0}));
  for (const auto& t : enumerate_sigma(1, 3)) CHECK(chain_admissible(t, MultiIndex{0, 1, 0}));
}

TEST_CASE("property: random standard sweep stays bounded") {
  std::mt19937_64 rng(17);
  for (int m = 1; m <= 2; ++m) {
    for (int dim = 1; dim <= 2; ++dim) {
      double a = 0.0;
      for (int i = 0; i < 25; ++i) {
        const auto u = poly(mul(bubble(dim, m), random_polynomial(dim, 3, rng)));
        const auto r = check_standard(*u, m, NormKind::l2, GridSpec{dim, 21});
        if (r.degenerate) continue;
        CHECK(std::isfinite(r.ratio));
        a = std::max(a, r.ratio);
        CHECK(r.ratio <= a);
      }
      CHECK(a > 0.0);
    }
  }
}

TEST_CASE("property: weighted residuals of the pipeline obey a stable constant") {
  const auto u = make_builtin_oracle("exp-sum", 2);
  const int m = 1;
  std::vector<double> constants;
  for (int n : {8, 16, 32}) {
    ApproxConfig cfg;
    cfg.order = m;
    cfg.dimension = 2;
    cfg.bernstein_degree = n;
    cfg.grid = GridSpec{2, 41};
    const auto a = approximate(*u, cfg);
    ConstantTracker tracker;
    double worst = 0.0;
    for (std::size_t s = 0; s < a.terms.size(); ++s) {
      const auto residual =
          WeightedOracle(weight_polynomial(a.terms[s]), std::make_shared<DifferenceOracle>(u, a.corrections[s]));
      for (const auto& alpha : all_up_to_order(2, m)) {
        const auto r = check_detailed(residual, chain_for_weight(a.terms[s], alpha), NormKind::linf, cfg.grid, tracker);
        worst = std::max(worst, r.empirical_constant);
      }
    }
    constants.push_back(worst);
  }
  const auto [lo, hi] = std::minmax_element(constants.begin(), constants.end());
  CHECK(*hi <= 2.0 * *lo);
}
