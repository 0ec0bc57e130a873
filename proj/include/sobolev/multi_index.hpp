#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace sobolev {

/// Non-negative integer exponent / derivative-order vector of fixed dimension.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> orders);
  MultiIndex(std::initializer_list<int> orders);

  static MultiIndex zeros(int dimension);
  static MultiIndex filled(int dimension, int value);
  static MultiIndex unit(int dimension, int axis);

  int dimension() const noexcept { return static_cast<int>(orders_.size()); }
  int total() const noexcept;
  int max_entry() const noexcept;
  int operator[](int axis) const { return orders_[static_cast<std::size_t>(axis)]; }
  const std::vector<int>& orders() const noexcept { return orders_; }

  MultiIndex with(int axis, int value) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  std::string to_string(char separator = ',') const;

 private:
  std::vector<int> orders_;
};

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
// Requires b <= a componentwise.
MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);

/// a <= b in every entry.
bool componentwise_le(const MultiIndex& a, const MultiIndex& b);
/// a <= b componentwise and a != b.
bool componentwise_lt(const MultiIndex& a, const MultiIndex& b);

/// Graded lexicographic order: higher total degree first, ties broken by
/// lexicographically larger exponent vector first.
struct GradedLexGreater {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// Every gamma with 0 <= gamma <= upper, in lexicographic order.
std::vector<MultiIndex> all_below(const MultiIndex& upper);

/// Every alpha of the given dimension with |alpha| <= order, ordered by
/// total order ascending and graded-lex descending within one order.
std::vector<MultiIndex> all_up_to_order(int dimension, int order);

/// Every alpha with |alpha| == order.
std::vector<MultiIndex> all_of_order(int dimension, int order);

/// prod_j C(upper_j, lower_j), as a double (exact for the sizes used here).
double multi_binomial(const MultiIndex& upper, const MultiIndex& lower);

}  // namespace sobolev
