#include "sobolev/bernstein.hpp"

#include <boost/multiprecision/number.hpp>
#include <cmath>
#include <string>

#include "sobolev/errors.hpp"

namespace sobolev {

namespace {

void check_degree(int degree, int dimension) {
  const int cap = max_bernstein_degree(dimension);
  if (degree < 1 || degree > cap) {
    throw ConfigError("Bernstein degree " + std::to_string(degree) + " outside [1, " + std::to_string(cap) +
                      "] for dimension " + std::to_string(dimension));
  }
}

}  // namespace

int max_bernstein_degree(int dimension) {
  if (dimension < 1 || dimension > 3) throw ConfigError("Bernstein approximation supports 1 <= N <= 3");
  return dimension <= 2 ? 64 : 40;
}

Polynomial bernstein_from_samples(std::span<const HpReal> samples, int degree, int dimension, Execution exec) {
  check_degree(degree, dimension);
  for (const auto& s : samples) {
    if (!boost::multiprecision::isfinite(s)) throw InputError("non-finite sample value in Bernstein approximation");
  }
  const auto coefs = kernels::bernstein_to_monomial(samples, dimension, degree, exec);

  const auto side = static_cast<std::size_t>(degree) + 1;
  Polynomial::Terms terms;
  std::vector<int> e(static_cast<std::size_t>(dimension));
  for (std::size_t flat = 0; flat < coefs.size(); ++flat) {
    const double c = static_cast<double>(coefs[flat]);
    if (c == 0.0) continue;
    std::size_t rest = flat;
    for (int j = dimension - 1; j >= 0; --j) {
      e[j] = static_cast<int>(rest % side);
      rest /= side;
    }
    terms.emplace(MultiIndex(e), c);
  }
  return Polynomial(dimension, std::move(terms));
}

Polynomial bernstein_approximate(const HpScalarField& f, int degree, int dimension, Execution exec) {
  check_degree(degree, dimension);
  const auto samples = kernels::sample_lattice(dimension, degree, f, exec);
  return bernstein_from_samples(samples, degree, dimension, exec);
}

Polynomial bernstein_approximate(const ScalarField& f, int degree, int dimension, Execution exec) {
  HpScalarField promoted = [&f](std::span<const HpReal> x) {
    std::vector<double> xd(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xd[i] = static_cast<double>(x[i]);
    return HpReal(f(xd));
  };
  return bernstein_approximate(promoted, degree, dimension, exec);
}

double sup_error(const ScalarField& f, const Polynomial& p, const GridSpec& grid, Execution exec) {
  if (grid.dimension != p.dimension()) throw InputError("grid and polynomial dimension mismatch");
  const auto diffs = kernels::sample_grid(
      grid, [&](std::span<const double> x) { return f(x) - p.evaluate(x); }, exec);
  return kernels::max_abs(diffs);
}

}  // namespace sobolev
