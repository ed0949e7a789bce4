// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rischan/types.hpp"

namespace rischan {

// One polarizable element: position plus Lorentzian resonance parameters.
// Frequencies are in GHz at the API surface.
struct DipoleParams {
    double x = 0.0;         // m
    double y = 0.0;         // m
    double f_res_ghz = 1.0; // resonance frequency
    double chi = 1.0;       // oscillator strength, > 0
    double gamma_ghz = 0.0; // damping factor, >= 0

    Position position() const { return {x, y}; }
};

// Free-space wavenumber, k = 2*pi*f / c0.
struct Wavenumber {
    double k; // rad/m

    static Wavenumber from_frequency_ghz(double f_ghz);
};

// Lorentzian inverse polarizability at operating frequency f:
//   alpha^{-1}(f) = (f_res^2 - f^2)/(chi f^2) + i * gamma/(chi f)
cdouble inverse_polarizability(double f_ghz, const DipoleParams& d);

// 2D free-space Green's function (i/4) * H0^{(1)}(k * |r_i - r_j|).
// Coincident positions are singular and rejected.
cdouble green_function(Position r_i, Position r_j, Wavenumber k);

} // namespace rischan
