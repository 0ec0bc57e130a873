#include "sobolev/poincare.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sobolev/dbeta_solver.hpp"
#include "sobolev/errors.hpp"

namespace sobolev {

namespace {

std::string describe_node(const GridSpec& grid, std::size_t flat) {
  std::vector<double> x(static_cast<std::size_t>(grid.dimension));
  grid.node(flat, x);
  std::string out = "(";
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(x[j]);
  }
  return out + ")";
}

// Throws unless |D^gamma u| <= kTraceTolerance on every node of the face
// x_axis = face (face = 0 or 1).
void require_vanishing_on_face(const DerivativeOracle& u, const MultiIndex& gamma, int axis, int face,
                               const GridSpec& grid, const std::string& context) {
  u.require(gamma);
  const int target = face == 0 ? 0 : grid.nodes_per_axis - 1;
  std::vector<double> x(static_cast<std::size_t>(grid.dimension));
  for (std::size_t i = 0; i < grid.node_count(); ++i) {
    if (grid.indices(i)[axis] != target) continue;
    grid.node(i, x);
    const double v = u.eval(gamma, x);
    if (!(std::abs(v) <= kTraceTolerance)) {
      throw InputError(context + ": D^(" + gamma.to_string() + ")u = " + std::to_string(v) + " at node " +
                       describe_node(grid, i) + " on face x" + std::to_string(axis + 1) + "=" +
                       std::to_string(face));
    }
  }
}

double derivative_norm(const DerivativeOracle& u, const MultiIndex& gamma, NormKind p, const GridSpec& grid,
                       Execution exec) {
  u.require(gamma);
  return lp_norm([&](std::span<const double> x) { return u.eval(gamma, x); }, p, grid, exec);
}

}  // namespace

NormKind parse_norm(std::string_view text) {
  if (text == "1") return NormKind::l1;
  if (text == "2") return NormKind::l2;
  if (text == "inf") return NormKind::linf;
  throw InputError("norm must be one of 1, 2, inf");
}

std::string_view norm_name(NormKind p) {
  switch (p) {
    case NormKind::l1:
      return "1";
    case NormKind::l2:
      return "2";
    default:
      return "inf";
  }
}

double lp_norm(const ScalarField& f, NormKind p, const GridSpec& grid, Execution exec) {
  const auto values = kernels::sample_grid(grid, f, exec);
  if (p == NormKind::linf) return kernels::max_abs(values);

  const double h = 1.0 / (grid.nodes_per_axis - 1);
  const int last = grid.nodes_per_axis - 1;
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    double w = 1.0;
    for (int idx : grid.indices(i)) w *= (idx == 0 || idx == last) ? 0.5 * h : h;
    const double a = std::abs(values[i]);
    sum += w * (p == NormKind::l1 ? a : a * a);
  }
  return p == NormKind::l1 ? sum : std::sqrt(sum);
}

OrderOneResult check_order_one(const DerivativeOracle& u, NormKind p, const GridSpec& grid, Execution exec) {
  if (grid.dimension != u.dimension()) throw InputError("grid and oracle dimension mismatch");
  grid.validate();
  const int dim = u.dimension();
  require_vanishing_on_face(u, MultiIndex::zeros(dim), 0, 0, grid, "order-one trace condition");
  OrderOneResult r;
  r.lhs = derivative_norm(u, MultiIndex::zeros(dim), p, grid, exec);
  r.rhs = derivative_norm(u, MultiIndex::unit(dim, 0), p, grid, exec);
  r.holds = r.lhs <= r.rhs * (1.0 + kInequalitySlack);
  return r;
}

void TraceChain::validate() const {
  if (indices.empty()) throw InputError("trace chain is empty");
  if (faces.size() + 1 != indices.size()) throw InputError("trace chain needs one face per link");
  for (std::size_t k = 0; k + 1 < indices.size(); ++k) {
    if (!componentwise_lt(indices[k], indices[k + 1]) || (indices[k + 1] - indices[k]).total() != 1) {
      throw InputError("trace chain link " + std::to_string(k) + " is not a unit step");
    }
    if (faces[k] != 0 && faces[k] != 1) throw InputError("trace chain faces must be 0 or 1");
  }
}

int TraceChain::axis(std::size_t link) const {
  const auto diff = indices.at(link + 1) - indices.at(link);
  for (int j = 0; j < diff.dimension(); ++j) {
    if (diff[j] == 1) return j;
  }
  throw InputError("trace chain link has no axis");
}

bool chain_admissible(const SigmaTerm& term, const MultiIndex& alpha) {
  if (alpha.dimension() != term.dimension()) return false;
  const int m = term.order;
  for (int j = 0; j < term.dimension(); ++j) {
    if (alpha[j] > m) return false;
    const int k = term.retention[j];
    if (alpha[j] < m && std::max(k, m - k) < m) return false;
  }
  return true;
}

TraceChain chain_for_weight(const SigmaTerm& term, const MultiIndex& alpha) {
  const auto beta = beta_index(term.order, term.dimension());
  if (!componentwise_le(alpha, beta)) throw InputError("chain start must satisfy alpha <= beta");
  TraceChain chain;
  chain.indices.push_back(alpha);
  auto cur = alpha;
  const int m = term.order;
  for (int j = 0; j < term.dimension(); ++j) {
    const int k = term.retention[j];
    while (cur[j] < m) {
      if (cur[j] >= k && cur[j] >= m - k) {
        throw InputError("weight with retention " + term.retention.to_string() + " has no vanishing face for order " +
                         std::to_string(cur[j]) + " on axis " + std::to_string(j));
      }
      chain.faces.push_back(cur[j] < k ? 0 : 1);
      cur = cur.with(j, cur[j] + 1);
      chain.indices.push_back(cur);
    }
  }
  return chain;
}

double ConstantTracker::record(int dimension, int top, int bottom, NormKind p, double ratio) {
  std::lock_guard lock(mutex_);
  auto& slot = max_[{dimension, top, bottom, static_cast<int>(p)}];
  slot = std::max(slot, ratio);
  return slot;
}

double ConstantTracker::get(int dimension, int top, int bottom, NormKind p) const {
  std::lock_guard lock(mutex_);
  auto it = max_.find({dimension, top, bottom, static_cast<int>(p)});
  return it == max_.end() ? 0.0 : it->second;
}

DetailedResult check_detailed(const DerivativeOracle& u, const TraceChain& chain, NormKind p, const GridSpec& grid,
                              ConstantTracker& tracker, Execution exec) {
  chain.validate();
  if (grid.dimension != u.dimension() || chain.indices.front().dimension() != u.dimension()) {
    throw InputError("grid, chain and oracle dimension mismatch");
  }
  grid.validate();
  for (std::size_t k = 0; k < chain.faces.size(); ++k) {
    require_vanishing_on_face(u, chain.indices[k], chain.axis(k), chain.faces[k], grid,
                              "detailed trace condition, link " + std::to_string(k));
  }
  DetailedResult r;
  r.lhs = derivative_norm(u, chain.indices.front(), p, grid, exec);
  r.rhs = derivative_norm(u, chain.indices.back(), p, grid, exec);
  const int top = chain.indices.back().total();
  const int bottom = chain.indices.front().total();
  if (r.rhs == 0.0) {
    r.degenerate = true;
    r.empirical_constant = tracker.get(u.dimension(), top, bottom, p);
    return r;
  }
  r.ratio = r.lhs / r.rhs;
  r.empirical_constant = tracker.record(u.dimension(), top, bottom, p, r.ratio);
  return r;
}

StandardResult check_standard(const DerivativeOracle& u, int order, NormKind p, const GridSpec& grid,
                              Execution exec) {
  if (order < 1) throw InputError("standard Poincare check needs m >= 1");
  if (grid.dimension != u.dimension()) throw InputError("grid and oracle dimension mismatch");
  grid.validate();
  const int dim = u.dimension();
  for (int k = 0; k < order; ++k) {
    for (const auto& alpha : all_of_order(dim, k)) {
      for (int j = 0; j < dim; ++j) {
        for (int face = 0; face <= 1; ++face) {
          require_vanishing_on_face(u, alpha, j, face, grid, "standard boundary condition");
        }
      }
    }
  }
  StandardResult r;
  for (int k = 0; k < order; ++k) {
    for (const auto& alpha : all_of_order(dim, k)) r.lhs += derivative_norm(u, alpha, p, grid, exec);
  }
  for (const auto& alpha : all_of_order(dim, order)) r.rhs += derivative_norm(u, alpha, p, grid, exec);
  if (r.rhs == 0.0) {
    r.degenerate = true;
  } else {
    r.ratio = r.lhs / r.rhs;
  }
  return r;
}

Polynomial random_polynomial(int dimension, int degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  Polynomial::Terms terms;
  for (const auto& e : all_up_to_order(dimension, degree)) terms.emplace(e, coef(rng));
  return Polynomial(dimension, std::move(terms));
}

}  // namespace sobolev
