#include "sobolev/multi_index.hpp"

#include <algorithm>
#include <numeric>

#include "sobolev/errors.hpp"

namespace sobolev {

namespace {

void check_non_negative(const std::vector<int>& orders) {
  for (int v : orders) {
    if (v < 0) throw InputError("multi-index entries must be non-negative");
  }
}

void check_same_dimension(const MultiIndex& a, const MultiIndex& b) {
  if (a.dimension() != b.dimension()) throw InputError("multi-index dimension mismatch");
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> orders) : orders_(std::move(orders)) {
  check_non_negative(orders_);
}

MultiIndex::MultiIndex(std::initializer_list<int> orders) : orders_(orders) {
  check_non_negative(orders_);
}

MultiIndex MultiIndex::zeros(int dimension) { return filled(dimension, 0); }

MultiIndex MultiIndex::filled(int dimension, int value) {
  if (dimension < 0) throw InputError("negative dimension");
  return MultiIndex(std::vector<int>(static_cast<std::size_t>(dimension), value));
}

MultiIndex MultiIndex::unit(int dimension, int axis) {
  if (axis < 0 || axis >= dimension) throw InputError("axis out of range");
  return zeros(dimension).with(axis, 1);
}

int MultiIndex::total() const noexcept { return std::accumulate(orders_.begin(), orders_.end(), 0); }

int MultiIndex::max_entry() const noexcept {
  return orders_.empty() ? 0 : *std::max_element(orders_.begin(), orders_.end());
}

MultiIndex MultiIndex::with(int axis, int value) const {
  if (axis < 0 || axis >= dimension()) throw InputError("axis out of range");
  std::vector<int> copy = orders_;
  copy[static_cast<std::size_t>(axis)] = value;
  return MultiIndex(std::move(copy));
}

std::string MultiIndex::to_string(char separator) const {
  std::string out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) out += separator;
    out += std::to_string(orders_[i]);
  }
  return out;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  check_same_dimension(a, b);
  std::vector<int> out(a.orders());
  for (int i = 0; i < a.dimension(); ++i) out[static_cast<std::size_t>(i)] += b[i];
  return MultiIndex(std::move(out));
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  check_same_dimension(a, b);
  std::vector<int> out(a.orders());
  for (int i = 0; i < a.dimension(); ++i) out[static_cast<std::size_t>(i)] -= b[i];
  return MultiIndex(std::move(out));
}

bool componentwise_le(const MultiIndex& a, const MultiIndex& b) {
  check_same_dimension(a, b);
  for (int i = 0; i < a.dimension(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool componentwise_lt(const MultiIndex& a, const MultiIndex& b) {
  return componentwise_le(a, b) && a != b;
}

bool GradedLexGreater::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const int ta = a.total();
  const int tb = b.total();
  if (ta != tb) return ta > tb;
  return a.orders() > b.orders();
}

std::vector<MultiIndex> all_below(const MultiIndex& upper) {
  const int dim = upper.dimension();
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(dim), 0);
  while (true) {
    out.emplace_back(cur);
    int axis = dim - 1;
    while (axis >= 0) {
      auto& c = cur[static_cast<std::size_t>(axis)];
      if (c < upper[axis]) {
        ++c;
        break;
      }
      c = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  return out;
}

std::vector<MultiIndex> all_of_order(int dimension, int order) {
  std::vector<MultiIndex> out;
  for (auto& g : all_below(MultiIndex::filled(dimension, order))) {
    if (g.total() == order) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), GradedLexGreater{});
  return out;
}

std::vector<MultiIndex> all_up_to_order(int dimension, int order) {
  std::vector<MultiIndex> out;
  for (int k = 0; k <= order; ++k) {
    auto level = all_of_order(dimension, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

double multi_binomial(const MultiIndex& upper, const MultiIndex& lower) {
  check_same_dimension(upper, lower);
  double out = 1.0;
  for (int j = 0; j < upper.dimension(); ++j) {
    const int n = upper[j];
    const int k = lower[j];
    if (k > n) return 0.0;
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    out *= c;
  }
  return out;
}

}  // namespace sobolev
