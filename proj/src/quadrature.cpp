#include "sobolev/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "sobolev/errors.hpp"

namespace sobolev {

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw ConfigError("Gauss-Legendre rule needs at least one node");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_n(x) and its derivative
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

QuadratureRule unit_ball_rule(int dimension, int n) {
  const auto gl = gauss_legendre(n);
  QuadratureRule rule;
  rule.dimension = dimension;
  const double two_pi = 2.0 * std::numbers::pi;

  if (dimension == 1) {
    rule.nodes = gl.nodes;
    rule.weights = gl.weights;
    return rule;
  }
  if (dimension == 2) {
    for (int a = 0; a < n; ++a) {
      const double r = 0.5 * (gl.nodes[a] + 1.0);
      const double wr = 0.5 * gl.weights[a];
      for (int b = 0; b < n; ++b) {
        const double th = std::numbers::pi * (gl.nodes[b] + 1.0);
        const double wt = std::numbers::pi * gl.weights[b];
        rule.nodes.push_back(r * std::cos(th));
        rule.nodes.push_back(r * std::sin(th));
        rule.weights.push_back(wr * wt * r);
      }
    }
    return rule;
  }
  if (dimension == 3) {
    for (int a = 0; a < n; ++a) {
      const double r = 0.5 * (gl.nodes[a] + 1.0);
      const double wr = 0.5 * gl.weights[a];
      for (int b = 0; b < n; ++b) {
        const double u = gl.nodes[b];
        const double s = std::sqrt(1.0 - u * u);
        for (int c = 0; c < n; ++c) {
          const double ph = 0.5 * two_pi * (gl.nodes[c] + 1.0);
          const double wp = 0.5 * two_pi * gl.weights[c];
          rule.nodes.push_back(r * s * std::cos(ph));
          rule.nodes.push_back(r * s * std::sin(ph));
          rule.nodes.push_back(r * u);
          rule.weights.push_back(wr * gl.weights[b] * wp * r * r);
        }
      }
    }
    return rule;
  }
  throw ConfigError("unit ball quadrature supports 1 <= N <= 3");
}

}  // namespace sobolev
