// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#pragma once

#include <functional>
#include <span>

namespace sinlet {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Adaptive 15-point Gauss–Kronrod integration of f over [a, b], refined until the
/// error estimate drops below abs_tol (or the recursion limit is reached).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol = 1e-9);

/// Trapezoidal rule over an ordered sample grid.
double trapezoid(std::span<const double> times, std::span<const double> values);

}  // namespace sinlet
