// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rischan/types.hpp"

namespace rischan::specfun {

// Bessel function of the first kind, order zero. Requires x >= 0.
double bessel_j0(double x);

// Bessel function of the second kind, order zero. Requires x > 0
// (logarithmic singularity at the origin).
double bessel_y0(double x);

// Hankel function of the first kind, order zero: J0(x) + i*Y0(x).
cdouble hankel0_first_kind(double x);

} // namespace rischan::specfun
