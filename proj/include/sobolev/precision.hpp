#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace sobolev {

// 100 decimal digits. Bernstein-to-monomial expansion at degree n in N
// dimensions cancels terms of size ~3^(nN) relative to the result, so the
// lattice samples and the expansion need far more than double precision.
using HpReal = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>,
                                             boost::multiprecision::et_off>;

}  // namespace sobolev
