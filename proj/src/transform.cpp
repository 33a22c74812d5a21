// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#include "sinlet/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "sinlet/error.hpp"
#include "sinlet/quadrature.hpp"

namespace sinlet {

using std::numbers::pi;

SampledSignal::SampledSignal(std::vector<double> times, std::vector<double> values)
    : times_(std::move(times)), values_(std::move(values)) {
    if (times_.size() != values_.size())
        throw ParameterError("signal: times and values differ in length");
    if (times_.size() < 2) throw ParameterError("signal: at least two samples are required");
    for (std::size_t i = 0; i < times_.size(); ++i) {
        if (!std::isfinite(times_[i]) || !std::isfinite(values_[i]))
            throw DomainError("signal: non-finite sample at index " + std::to_string(i));
        if (i > 0 && !(times_[i] > times_[i - 1]))
            throw ParameterError("signal: times must be strictly increasing (index " +
                                 std::to_string(i) + ")");
    }
    const double h0 = times_[1] - times_[0];
    uniform_ = true;
    for (std::size_t i = 2; i < times_.size() && uniform_; ++i)
        uniform_ = std::abs((times_[i] - times_[i - 1]) - h0) <= 1e-9 * h0;
}

double SampledSignal::median_spacing() const {
    std::vector<double> gaps(times_.size() - 1);
    for (std::size_t i = 1; i < times_.size(); ++i) gaps[i - 1] = times_[i] - times_[i - 1];
    auto mid = gaps.begin() + static_cast<std::ptrdiff_t>(gaps.size() / 2);
    std::nth_element(gaps.begin(), mid, gaps.end());
    return *mid;
}

double SampledSignal::energy() const {
    std::vector<double> sq(values_.size());
    std::transform(values_.begin(), values_.end(), sq.begin(), [](double v) { return v * v; });
    return trapezoid(times_, sq);
}

CoefficientVector::CoefficientVector(Kind kind, const SinletBasis& basis,
                                     std::vector<double> coeffs)
    : kind_(kind), basis_(basis), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw ParameterError("coefficient vector must hold at least one entry");
    for (double c : coeffs_)
        if (!std::isfinite(c)) throw DomainError("coefficient vector holds a non-finite entry");
}

double CoefficientVector::energy() const noexcept {
    double e = 0.0;
    for (double c : coeffs_) e += c * c;
    return e;
}

double CoefficientVector::evaluate(double t) const {
    const PolarPoint p = basis_.polar(t);
    if (p.amplitude == 0.0) return 0.0;
    double sum = 0.0;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        const double angle = pi * static_cast<double>(n + 1) * p.theta;
        sum += coeffs_[n] * (kind_ == Kind::Sin ? std::sin(angle) : std::cos(angle));
    }
    return p.amplitude * sum;
}

double coupling_entry(std::size_t k, std::size_t m) noexcept {
    if ((k + m) % 2 == 0) return 0.0;
    const double kk = static_cast<double>(k);
    const double mm = static_cast<double>(m);
    return 2.0 / (pi * (kk + mm + 2.0)) + 2.0 / (pi * (kk - mm));
}

CouplingMatrix::CouplingMatrix(std::size_t order) : order_(order), entries_(order * order) {
    if (order == 0) throw ParameterError("coupling matrix order must be positive");
    for (std::size_t k = 0; k < order; ++k)
        for (std::size_t m = 0; m < order; ++m) entries_[k * order + m] = coupling_entry(k, m);
}

std::vector<double> CouplingMatrix::apply(std::span<const double> x) const {
    if (x.size() != order_) throw ParameterError("coupling matrix: dimension mismatch");
    std::vector<double> y(order_, 0.0);
    for (std::size_t k = 0; k < order_; ++k)
        for (std::size_t m = 0; m < order_; ++m) y[k] += (*this)(k, m) * x[m];
    return y;
}

std::vector<double> CouplingMatrix::apply_transposed(std::span<const double> x) const {
    if (x.size() != order_) throw ParameterError("coupling matrix: dimension mismatch");
    std::vector<double> y(order_, 0.0);
    for (std::size_t k = 0; k < order_; ++k)
        for (std::size_t m = 0; m < order_; ++m) y[m] += (*this)(k, m) * x[k];
    return y;
}

CouplingMatrix coupling_matrix(std::size_t order) { return CouplingMatrix(order); }

std::vector<double> linspace(double a, double b, std::size_t n) {
    if (n < 2) throw ParameterError("linspace needs at least two points");
    std::vector<double> out(n);
    const double step = (b - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) out[i] = a + step * static_cast<double>(i);
    out.back() = b;
    return out;
}

namespace {

struct Moments {
    double m0 = 0.0;  // ∫u²
    double m1 = 0.0;  // ∫t·u²
};

Moments energy_moments(const SampledSignal& s, double shift) {
    const auto t = s.times();
    const auto v = s.values();
    std::vector<double> w0(t.size()), w1(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        w0[i] = v[i] * v[i];
        w1[i] = (t[i] - shift) * w0[i];
    }
    return {trapezoid(t, w0), trapezoid(t, w1)};
}

void require_energy(double e) {
    if (!(e > 0.0)) throw DegenerateInputError("signal has zero energy; parameters undefined");
}

}  // namespace

double estimate_center(const SampledSignal& signal) {
    // Moments taken about the first sample so a pure time shift moves the result exactly.
    const double origin = signal.times().front();
    const Moments m = energy_moments(signal, origin);
    require_energy(m.m0);
    return origin + m.m1 / m.m0;
}

double estimate_width(const SampledSignal& signal, double c) {
    if (!(c >= 1.0 && c <= 2.0)) {
        std::ostringstream msg;
        msg << "width constant c must lie in [1, 2] (got " << c << ")";
        throw ParameterError(msg.str());
    }
    const double t0 = estimate_center(signal);
    const auto t = signal.times();
    const auto v = signal.values();
    std::vector<double> w0(t.size()), w2(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        w0[i] = v[i] * v[i];
        w2[i] = (t[i] - t0) * (t[i] - t0) * w0[i];
    }
    const double m0 = trapezoid(t, w0);
    require_energy(m0);
    return c * std::sqrt(trapezoid(t, w2) / m0);
}

std::size_t estimate_nmax(const SinletBasis& basis, double nu_max, double t_max) {
    if (!std::isfinite(nu_max) || !(nu_max > 0.0))
        throw ParameterError("nu_max must be positive and finite");
    const double rate = basis.phase().jet(t_max).d1;
    const double ratio = 2.0 * nu_max / rate;
    if (!(rate > 0.0) || !std::isfinite(ratio) || ratio > 9.0e15) {
        std::ostringstream msg;
        msg << "n_max overflows: d(theta)/dt at t_max=" << t_max
            << " is too small; reduce t_max or increase sigma";
        throw PrecisionLossError(msg.str());
    }
    const double n = std::ceil(ratio) - 1.0;
    return n < 0.0 ? 0 : static_cast<std::size_t>(n);
}

std::size_t max_safe_terms(const SinletBasis& basis, double spacing) {
    if (!(spacing > 0.0)) throw ParameterError("sample spacing must be positive");
    const double peak_rate = basis.phase().jet(basis.center()).d1;
    const double n = std::floor(1.0 / (2.0 * spacing * peak_rate));
    return n >= static_cast<double>(std::numeric_limits<std::size_t>::max())
               ? std::numeric_limits<std::size_t>::max()
               : static_cast<std::size_t>(n);
}

CoefficientVector decompose(const SampledSignal& signal, const SinletBasis& basis, std::size_t n,
                            Kind kind, AliasPolicy policy) {
    if (n == 0) throw ParameterError("decompose: N must be at least 1");
    const double lo = basis.center() - kWindowHalfWidth * basis.width();
    const double hi = basis.center() + kWindowHalfWidth * basis.width();
    const auto t = signal.times();
    const auto v = signal.values();
    const auto first = std::lower_bound(t.begin(), t.end(), lo);
    const auto last = std::upper_bound(t.begin(), t.end(), hi);
    const auto count = static_cast<std::size_t>(last - first);
    if (count < 2) throw DomainError("decompose: signal support does not overlap the basis window");
    const auto offset = static_cast<std::size_t>(first - t.begin());
    const SampledSignal window(std::vector<double>(first, last),
                               std::vector<double>(v.begin() + static_cast<std::ptrdiff_t>(offset),
                                                   v.begin() + static_cast<std::ptrdiff_t>(offset + count)));

    if (policy == AliasPolicy::Enforce) {
        const std::size_t safe = max_safe_terms(basis, window.median_spacing());
        if (n > safe) {
            std::ostringstream msg;
            msg << "decompose: grid spacing " << window.median_spacing() << " aliases sinlet "
                << n - 1 << "; max safe N is " << safe;
            throw AliasingError(msg.str(), safe);
        }
    }

    // Trapezoid weights times the shared amplitude, then one sin/cos per (sample, n).
    const auto wt = window.times();
    const auto wv = window.values();
    std::vector<double> coeffs(n, 0.0);
    for (std::size_t i = 0; i < count; ++i) {
        const double left = i > 0 ? wt[i] - wt[i - 1] : 0.0;
        const double right = i + 1 < count ? wt[i + 1] - wt[i] : 0.0;
        const PolarPoint p = basis.polar(wt[i]);
        const double w = 0.5 * (left + right) * p.amplitude * wv[i];
        if (w == 0.0) continue;
        const double theta = p.theta;
        for (std::size_t k = 0; k < n; ++k) {
            const double angle = pi * static_cast<double>(k + 1) * theta;
            coeffs[k] += w * (kind == Kind::Sin ? std::sin(angle) : std::cos(angle));
        }
    }
    return CoefficientVector(kind, basis, std::move(coeffs));
}

std::vector<double> synthesize(const CoefficientVector& coeffs, std::span<const double> grid) {
    std::vector<double> out(grid.size());
    std::transform(grid.begin(), grid.end(), out.begin(),
                   [&](double t) { return coeffs.evaluate(t); });
    return out;
}

SampledSignal reconstruct(const CoefficientVector& coeffs, std::span<const double> grid) {
    return SampledSignal(std::vector<double>(grid.begin(), grid.end()), synthesize(coeffs, grid));
}

CoefficientVector sin_to_cos(const CoefficientVector& a) {
    if (a.kind() != Kind::Sin)
        throw UnsupportedKindError("sin_to_cos expects sinlet coefficients");
    const CouplingMatrix d(a.size());
    return CoefficientVector(Kind::Cos, a.basis(), d.apply_transposed(a.coeffs()));
}

CoefficientVector cos_to_sin(const CoefficientVector& b) {
    if (b.kind() != Kind::Cos)
        throw UnsupportedKindError("cos_to_sin expects coslet coefficients");
    const CouplingMatrix d(b.size());
    return CoefficientVector(Kind::Sin, b.basis(), d.apply(b.coeffs()));
}

}  // namespace sinlet
