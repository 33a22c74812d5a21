// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#include "sinlet/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "sinlet/error.hpp"

namespace sinlet {

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol) {
    using boost::math::quadrature::gauss_kronrod;
    constexpr unsigned kMaxDepth = 15;
    if (!(abs_tol > 0.0)) throw ParameterError("integrate: tolerance must be positive");

    // Boost's tolerance is relative to the L1 norm of f; tighten it once the norm is known.
    double err = 0.0;
    double l1 = 0.0;
    double value = gauss_kronrod<double, 15>::integrate(f, a, b, kMaxDepth, abs_tol, &err, &l1);
    if (err > abs_tol && l1 > 1.0) {
        value = gauss_kronrod<double, 15>::integrate(f, a, b, kMaxDepth, abs_tol / l1, &err, &l1);
    }
    return {value, err};
}

double trapezoid(std::span<const double> times, std::span<const double> values) {
    if (times.size() != values.size())
        throw ParameterError("trapezoid: times and values differ in length");
    double sum = 0.0;
    for (std::size_t i = 1; i < times.size(); ++i)
        sum += 0.5 * (times[i] - times[i - 1]) * (values[i] + values[i - 1]);
    return sum;
}

}  // namespace sinlet
