// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#include "sinlet/basis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sinlet/error.hpp"

namespace sinlet {

using std::numbers::pi;

std::string_view to_string(Kind kind) noexcept { return kind == Kind::Sin ? "sin" : "cos"; }

Kind parse_kind(std::string_view name) {
    if (name == "sin" || name == "sinlet") return Kind::Sin;
    if (name == "cos" || name == "coslet") return Kind::Cos;
    throw ParameterError("unknown coefficient kind '" + std::string(name) +
                         "' (expected sin or cos)");
}

PolarPoint SinletBasis::polar(double t) const {
    const PhaseJet j = phase_.jet(t);
    const double a = std::sqrt(2.0 * j.d1);
    // Subnormal amplitudes carry no information; report an exact zero.
    return {a >= std::sqrt(std::numeric_limits<double>::min()) ? a : 0.0, j.theta};
}

namespace {

double angle(std::size_t n, double theta) { return pi * static_cast<double>(n + 1) * theta; }

}  // namespace

double SinletBasis::sinlet(std::size_t n, double t) const {
    const PolarPoint p = polar(t);
    return p.amplitude == 0.0 ? 0.0 : p.amplitude * std::sin(angle(n, p.theta));
}

double SinletBasis::coslet(std::size_t n, double t) const {
    const PolarPoint p = polar(t);
    return p.amplitude == 0.0 ? 0.0 : p.amplitude * std::cos(angle(n, p.theta));
}

std::complex<double> SinletBasis::psi(std::size_t n, double t) const {
    const PolarPoint p = polar(t);
    if (p.amplitude == 0.0) return {0.0, 0.0};
    return std::polar(p.amplitude, angle(n, p.theta));
}

double SinletBasis::inst_frequency(std::size_t n, double t) const {
    return 0.5 * static_cast<double>(n + 1) * phase_.jet(t).d1;
}

double SinletBasis::omega_squared(std::size_t n, double t) const {
    const double s = phase_.schwarzian(t);  // throws first if θ̇ underflowed
    const double rate_n = pi * static_cast<double>(n + 1) * phase_.jet(t).d1;
    return rate_n * rate_n + 0.5 * s;
}

SinletBasis SinletBasis::scale(double alpha) const {
    if (!std::isfinite(alpha) || !(alpha > 0.0))
        throw DomainError("scale factor alpha must be positive and finite");
    return SinletBasis(family(), center(), width() / alpha);
}

SinletBasis SinletBasis::recentered(double center) const {
    return SinletBasis(family(), center, width());
}

double omega_squared_closed_form(const SinletBasis& basis, std::size_t n, double t) {
    if (!std::isfinite(t)) throw DomainError("omega_squared at non-finite time");
    const double s = basis.width();
    const double x = t - basis.center();
    const double m = static_cast<double>(n + 1);
    if (basis.family() == Family::Erf) {
        return (pi * m * m * std::exp(-x * x / (s * s)) - x * x / (2.0 * s * s) - 1.0) /
               (2.0 * s * s);
    }
    const double c = std::cosh(x / (2.0 * s));
    const double c2 = c * c;
    return (pi * pi * m * m / (4.0 * c2 * c2) - 1.0) / (4.0 * s * s);
}

}  // namespace sinlet
