// SPDX-License-Identifier: Apache-2.0
#include "rischan/specfun.hpp"

#include <cmath>

namespace rischan::specfun {

double bessel_j0(double x) {
    if (!std::isfinite(x) || x < 0.0)
        throw DomainError("bessel_j0: argument must be finite and >= 0");
    return std::cyl_bessel_j(0.0, x);
}

double bessel_y0(double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw DomainError("bessel_y0: argument must be finite and > 0");
    return std::cyl_neumann(0.0, x);
}

cdouble hankel0_first_kind(double x) {
    return {bessel_j0(x), bessel_y0(x)};
}

} // namespace rischan::specfun
