#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sobolev/grid.hpp"
#include "sobolev/precision.hpp"

namespace sobolev {

enum class Execution { serial, parallel };

using ScalarField = std::function<double(std::span<const double>)>;
using HpScalarField = std::function<HpReal(std::span<const HpReal>)>;

// Data-parallel inner loops. Each kernel has a serial reference and an
// OpenMP version; both write results in node order so outputs are
// bit-identical and every reduction downstream is serial and ordered.
// Callbacks must be safe to call concurrently.
namespace kernels {

/// f at every node of `grid`, row-major.
std::vector<double> sample_grid(const GridSpec& grid, const ScalarField& f, Execution exec);

/// f at the lattice nodes k/degree, k in {0..degree}^dimension, with the
/// node coordinates formed exactly in high precision.
std::vector<HpReal> sample_lattice(int dimension, int degree, const HpScalarField& f, Execution exec);

/// Converts tensor Bernstein coefficients (row-major over {0..degree}^N) to
/// monomial coefficients over the same index set.
std::vector<HpReal> bernstein_to_monomial(std::span<const HpReal> values, int dimension, int degree,
                                          Execution exec);

/// max |v| over the span, 0 for empty input.
double max_abs(std::span<const double> values);

namespace serial {
std::vector<double> sample_grid(const GridSpec& grid, const ScalarField& f);
std::vector<HpReal> sample_lattice(int dimension, int degree, const HpScalarField& f);
std::vector<HpReal> bernstein_to_monomial(std::span<const HpReal> values, int dimension, int degree);
}  // namespace serial

namespace omp {
std::vector<double> sample_grid(const GridSpec& grid, const ScalarField& f);
std::vector<HpReal> sample_lattice(int dimension, int degree, const HpScalarField& f);
std::vector<HpReal> bernstein_to_monomial(std::span<const HpReal> values, int dimension, int degree);
}  // namespace omp

// Shared helpers for both variants.
namespace detail {
std::size_t lattice_size(int dimension, int degree);
void lattice_node(std::size_t flat, int dimension, int degree, std::span<HpReal> out);
/// M[k][i] = C(n,i) C(i,k) (-1)^(i-k) for k <= i, row-major (n+1)x(n+1).
std::vector<HpReal> bernstein_change_of_basis(int degree);
/// One output entry of the contraction along `axis`.
HpReal contract_entry(std::span<const HpReal> in, std::span<const HpReal> basis, std::size_t flat, int axis,
                      int dimension, int degree);
}  // namespace detail

}  // namespace kernels
}  // namespace sobolev
