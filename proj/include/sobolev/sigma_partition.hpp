#pragma once

#include <cstdint>
#include <vector>

#include "sobolev/multi_index.hpp"
#include "sobolev/polynomial.hpp"

namespace sobolev {

/// One collapsed class of the 2^(Nm) substitutions of x^beta, beta=(m,...,m).
/// `retention[j]` is how many x_j factors stay un-flipped; the remaining
/// m - retention[j] become (1 - x_j). `multiplicity` = prod_j C(m, k_j)
/// counts the raw substitutions that collapse onto this term.
struct SigmaTerm {
  int order = 1;
  MultiIndex retention;
  std::uint64_t multiplicity = 1;

  int dimension() const noexcept { return retention.dimension(); }
};

inline constexpr std::size_t kMaxSigmaTerms = 4096;

/// All (m+1)^N retention vectors in lexicographic order.
std::vector<SigmaTerm> enumerate_sigma(int order, int dimension);

/// prod_j x_j^k_j (1 - x_j)^(m - k_j), multiplicity not included.
Polynomial weight_polynomial(const SigmaTerm& term);

/// Max-abs coefficient norm of sum_t multiplicity(t) * w_t - 1.
double verify_identity(int order, int dimension);

}  // namespace sobolev
