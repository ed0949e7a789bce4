// SPDX-License-Identifier: Apache-2.0
#include "rischan/physics.hpp"

#include <cmath>

#include "rischan/specfun.hpp"

namespace rischan {

Wavenumber Wavenumber::from_frequency_ghz(double f_ghz) {
    if (!(f_ghz > 0.0) || !std::isfinite(f_ghz))
        throw DomainError("Wavenumber: frequency must be finite and > 0");
    return {2.0 * M_PI * f_ghz * 1e9 / kSpeedOfLight};
}

cdouble inverse_polarizability(double f_ghz, const DipoleParams& d) {
    if (!(f_ghz > 0.0) || !std::isfinite(f_ghz))
        throw DomainError("inverse_polarizability: frequency must be finite and > 0");
    const double fr = d.f_res_ghz;
    const double re = (fr * fr - f_ghz * f_ghz) / (d.chi * f_ghz * f_ghz);
    const double im = d.gamma_ghz / (d.chi * f_ghz);
    return {re, im};
}

cdouble green_function(Position r_i, Position r_j, Wavenumber k) {
    const double dx = r_i.x - r_j.x;
    const double dy = r_i.y - r_j.y;
    const double dist = std::hypot(dx, dy);
    if (dist <= 0.0)
        throw SingularGeometryError("green_function: coincident dipole positions");
    const cdouble h = specfun::hankel0_first_kind(k.k * dist);
    return cdouble(0.0, 0.25) * h;
}

} // namespace rischan
