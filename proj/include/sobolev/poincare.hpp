#pragma once

#include <map>
#include <mutex>
#include <random>
#include <string_view>
#include <tuple>
#include <vector>

#include "sobolev/grid.hpp"
#include "sobolev/kernels.hpp"
#include "sobolev/multi_index.hpp"
#include "sobolev/oracle.hpp"
#include "sobolev/sigma_partition.hpp"

namespace sobolev {

enum class NormKind { l1, l2, linf };

/// "1", "2" or "inf".
NormKind parse_norm(std::string_view text);
std::string_view norm_name(NormKind p);

/// Relative slack for inequality checks; grid sups and trapezoid sums are
/// approximations on both sides.
inline constexpr double kInequalitySlack = 1e-6;
/// Largest |value| accepted as "vanishes" in trace preconditions.
inline constexpr double kTraceTolerance = 1e-10;

/// p = inf: grid max of |f|. p = 1, 2: tensor trapezoid rule for |f|^p, then
/// the p-th root.
double lp_norm(const ScalarField& f, NormKind p, const GridSpec& grid, Execution exec = Execution::parallel);

struct OrderOneResult {
  double lhs = 0.0;  // ||u||
  double rhs = 0.0;  // ||D_1 u||
  bool holds = false;
};

/// ||u|| <= ||D_1 u|| for u vanishing on {x_1 = 0}. Throws InputError naming
/// the offending node if the trace condition fails on the grid.
OrderOneResult check_order_one(const DerivativeOracle& u, NormKind p, const GridSpec& grid,
                               Execution exec = Execution::parallel);

/// gamma_t < gamma_{t+1} < ... < gamma_m, each step adding one order on one
/// axis. Link k (from indices[k] to indices[k+1]) requires
/// D^indices[k] u = 0 on the face x_a = faces[k], a = the link's axis.
struct TraceChain {
  std::vector<MultiIndex> indices;
  std::vector<int> faces;

  void validate() const;
  int axis(std::size_t link) const;
};

/// True when w_t * q meets every trace condition of the chain alpha -> beta.
/// D_j^r w_t vanishes on x_j = 0 for r < k_j and on x_j = 1 for r < m - k_j,
/// so an axis that still has to be raised needs k_j = 0 or k_j = m.
bool chain_admissible(const SigmaTerm& term, const MultiIndex& alpha);

/// The chain alpha -> beta = (m,...,m), raising axis 0 first: order r on
/// axis j uses the 0-face when r < k_j, else the 1-face when r < m - k_j.
/// Throws InputError when neither face vanishes.
TraceChain chain_for_weight(const SigmaTerm& term, const MultiIndex& alpha);

/// Running maximum of observed ratios per (N, |gamma_m|, |gamma_t|, p): the
/// empirical constant A.
class ConstantTracker {
 public:
  double record(int dimension, int top, int bottom, NormKind p, double ratio);
  double get(int dimension, int top, int bottom, NormKind p) const;

 private:
  mutable std::mutex mutex_;
  std::map<std::tuple<int, int, int, int>, double> max_;
};

struct DetailedResult {
  double lhs = 0.0;  // ||D^gamma_t u||
  double rhs = 0.0;  // ||D^gamma_m u||
  double ratio = 0.0;
  double empirical_constant = 0.0;
  bool degenerate = false;  // rhs == 0
};

DetailedResult check_detailed(const DerivativeOracle& u, const TraceChain& chain, NormKind p, const GridSpec& grid,
                              ConstantTracker& tracker, Execution exec = Execution::parallel);

struct StandardResult {
  double lhs = 0.0;  // sum_{|alpha|<m} ||D^alpha u||
  double rhs = 0.0;  // sum_{|alpha|=m} ||D^alpha u||
  double ratio = 0.0;
  bool degenerate = false;
};

/// Requires every D^alpha u, |alpha| < m, to vanish on the whole boundary.
StandardResult check_standard(const DerivativeOracle& u, int order, NormKind p, const GridSpec& grid,
                              Execution exec = Execution::parallel);

/// Coefficients uniform in [-1, 1] on every monomial of total degree <= degree.
Polynomial random_polynomial(int dimension, int degree, std::mt19937_64& rng);

}  // namespace sobolev
