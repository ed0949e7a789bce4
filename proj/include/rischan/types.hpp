// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace rischan {

using cdouble = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

// 2D dipole position in meters.
struct Position {
    double x = 0.0;
    double y = 0.0;
};

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Two dipoles at the same location: the Green's function is singular there.
struct SingularGeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConditioningError : std::runtime_error {
    ConditioningError(const std::string& what, double rcond_estimate)
        : std::runtime_error(what), rcond(rcond_estimate) {}
    double rcond;
};

struct DiagonalizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested shift collides with an eigenvalue of the secondary block.
struct ResonanceError : std::runtime_error {
    ResonanceError(const std::string& what, int index)
        : std::runtime_error(what), eigenvalue_index(index) {}
    int eigenvalue_index;
};

// The m-by-m inner system of a low-rank update is singular.
struct UpdateSingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rischan
