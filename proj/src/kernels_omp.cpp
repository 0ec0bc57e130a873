#include <omp.h>

#include <exception>
#include <vector>

#include "sobolev/kernels.hpp"

namespace sobolev::kernels::omp {

namespace {

// Exceptions may not leave a parallel region; keep the first one and rethrow.
class ErrorSlot {
 public:
  template <class Fn>
  void run(Fn&& fn) noexcept {
    try {
      fn();
    } catch (...) {
#pragma omp critical(sobolev_error_slot)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

}  // namespace

std::vector<double> sample_grid(const GridSpec& grid, const ScalarField& f) {
  const auto count = static_cast<long>(grid.node_count());
  std::vector<double> out(static_cast<std::size_t>(count));
  ErrorSlot errors;
#pragma omp parallel
  {
    std::vector<double> x(static_cast<std::size_t>(grid.dimension));
#pragma omp for schedule(static)
    for (long i = 0; i < count; ++i) {
      errors.run([&] {
        grid.node(static_cast<std::size_t>(i), x);
        out[static_cast<std::size_t>(i)] = f(x);
      });
    }
  }
  errors.rethrow();
  return out;
}

std::vector<HpReal> sample_lattice(int dimension, int degree, const HpScalarField& f) {
  const auto count = static_cast<long>(detail::lattice_size(dimension, degree));
  std::vector<HpReal> out(static_cast<std::size_t>(count));
  ErrorSlot errors;
#pragma omp parallel
  {
    std::vector<HpReal> x(static_cast<std::size_t>(dimension));
#pragma omp for schedule(dynamic, 16)
    for (long i = 0; i < count; ++i) {
      errors.run([&] {
        detail::lattice_node(static_cast<std::size_t>(i), dimension, degree, x);
        out[static_cast<std::size_t>(i)] = f(x);
      });
    }
  }
  errors.rethrow();
  return out;
}

std::vector<HpReal> bernstein_to_monomial(std::span<const HpReal> values, int dimension, int degree) {
  const auto basis = detail::bernstein_change_of_basis(degree);
  std::vector<HpReal> cur(values.begin(), values.end());
  std::vector<HpReal> next(cur.size());
  const auto count = static_cast<long>(cur.size());
  for (int axis = 0; axis < dimension; ++axis) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) {
      next[static_cast<std::size_t>(i)] =
          detail::contract_entry(cur, basis, static_cast<std::size_t>(i), axis, dimension, degree);
    }
    cur.swap(next);
  }
  return cur;
}

}  // namespace sobolev::kernels::omp
