// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#include "sinlet/analysis.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "sinlet/error.hpp"

namespace sinlet {

using std::numbers::pi;

SampledSignal denoise(const SampledSignal& signal, const SinletBasis& basis, std::size_t n) {
    const CoefficientVector a = decompose(signal, basis, n, Kind::Sin);
    return reconstruct(a, signal.times());
}

std::size_t suggest_terms(const CoefficientVector& coeffs, double delta) {
    if (!(delta >= 0.0 && delta < 1.0)) throw ParameterError("delta must lie in [0, 1)");
    const double total = coeffs.energy();
    if (total == 0.0) return 1;
    double running = 0.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        running += coeffs[n] * coeffs[n];
        if (running >= (1.0 - delta) * total) return n + 1;
    }
    return coeffs.size();
}

DesignMatrix::DesignMatrix(const SinletBasis& basis, std::span<const double> times,
                           std::size_t cols)
    : rows_(times.size()), cols_(cols), entries_(times.size() * cols, 0.0) {
    for (std::size_t i = 0; i < rows_; ++i) {
        const PolarPoint p = basis.polar(times[i]);
        if (p.amplitude == 0.0) continue;
        for (std::size_t k = 0; k < cols_; ++k)
            entries_[i * cols_ + k] = p.amplitude * std::sin(pi * static_cast<double>(k + 1) * p.theta);
    }
}

std::vector<double> DesignMatrix::apply(std::span<const double> a) const {
    if (a.size() != cols_) throw ParameterError("design matrix: dimension mismatch");
    std::vector<double> out(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * a[k];
    return out;
}

CoefficientVector fit_nonuniform(const SampledSignal& samples, const SinletBasis& basis,
                                 std::size_t k) {
    if (k == 0) throw ParameterError("fit_nonuniform: K must be at least 1");
    if (k >= samples.size()) {
        std::ostringstream msg;
        msg << "fit_nonuniform: K=" << k << " must be smaller than the sample count "
            << samples.size();
        throw ParameterError(msg.str());
    }
    const DesignMatrix f(basis, samples.times(), k);
    using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const Eigen::Map<const RowMajor> fm(f.entries().data(), static_cast<Eigen::Index>(f.rows()),
                                        static_cast<Eigen::Index>(f.cols()));
    const Eigen::Map<const Eigen::VectorXd> x(samples.values().data(),
                                              static_cast<Eigen::Index>(samples.size()));

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(fm);
    qr.setThreshold(1e-10);
    const auto rank = static_cast<std::size_t>(qr.rank());
    if (rank < k) {
        std::ostringstream msg;
        msg << "fit_nonuniform: design matrix is rank deficient (effective rank " << rank
            << " of " << k << "); sample times do not cover the basis support";
        throw IllPosedError(msg.str(), rank);
    }
    const Eigen::VectorXd a = qr.solve(x);
    return CoefficientVector(Kind::Sin, basis, std::vector<double>(a.data(), a.data() + a.size()));
}

namespace {

SampledSignal on_grid(std::span<const double> grid, std::vector<double> values) {
    return SampledSignal(std::vector<double>(grid.begin(), grid.end()), std::move(values));
}

void require_sin(const CoefficientVector& coeffs, const char* op) {
    if (coeffs.kind() != Kind::Sin) {
        throw UnsupportedKindError(std::string(op) +
                                   " needs sinlet coefficients; convert with cos_to_sin first");
    }
}

}  // namespace

SampledSignal envelope(const CoefficientVector& coeffs, std::span<const double> grid) {
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const PolarPoint p = coeffs.basis().polar(grid[i]);
        std::complex<double> sum{0.0, 0.0};
        for (std::size_t n = 0; n < coeffs.size(); ++n)
            sum += coeffs[n] * std::polar(1.0, pi * static_cast<double>(n + 1) * p.theta);
        out[i] = p.amplitude * std::abs(sum);
    }
    return on_grid(grid, std::move(out));
}

SampledSignal differentiate(const CoefficientVector& coeffs, std::span<const double> grid) {
    require_sin(coeffs, "differentiate");
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const PhaseJet j = coeffs.basis().phase().jet(grid[i]);
        const double amp = coeffs.basis().amplitude(grid[i]);
        if (amp == 0.0) continue;
        const double log_slope = j.d2 / (2.0 * j.d1);
        double sum = 0.0;
        for (std::size_t n = 0; n < coeffs.size(); ++n) {
            const double m = static_cast<double>(n + 1);
            const double angle = pi * m * j.theta;
            sum += coeffs[n] * (log_slope * std::sin(angle) + pi * m * j.d1 * std::cos(angle));
        }
        out[i] = amp * sum;
    }
    return on_grid(grid, std::move(out));
}

SampledSignal differentiate_erf(const CoefficientVector& coeffs, std::span<const double> grid) {
    require_sin(coeffs, "differentiate_erf");
    if (coeffs.family() != Family::Erf)
        throw ParameterError("differentiate_erf applies to the erf family only");
    const SinletBasis& b = coeffs.basis();
    const double t0 = b.center();
    const double s = b.width();
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        const double gauss = std::exp(-(t - t0) * (t - t0) / (2.0 * s * s));
        double sum = 0.0;
        for (std::size_t n = 0; n < coeffs.size(); ++n) {
            sum += coeffs[n] * ((t0 - t) / (2.0 * s * s) * b.sinlet(n, t) +
                                std::sqrt(pi / 2.0) * static_cast<double>(n + 1) / s * gauss *
                                    b.coslet(n, t));
        }
        out[i] = sum;
    }
    return on_grid(grid, std::move(out));
}

void DopplerParams::validate() const {
    const double c = propagation_speed;
    const double v = radial_velocity;
    if (!std::isfinite(c) || !(c > 0.0)) throw DomainError("propagation speed must be positive");
    if (!std::isfinite(v) || !(std::abs(v) < c))
        throw DomainError("radial velocity must satisfy |v| < c");
    if (!std::isfinite(range) || range < 0.0) throw DomainError("range must be non-negative");
}

double DopplerParams::alpha() const {
    validate();
    return (propagation_speed - radial_velocity) / (propagation_speed + radial_velocity);
}

double DopplerParams::delay() const {
    validate();
    return 2.0 * range / propagation_speed;
}

CoefficientVector doppler_shift(const CoefficientVector& transmit, const DopplerParams& params) {
    require_sin(transmit, "doppler");
    const double alpha = params.alpha();
    const double tau = params.delay();
    const SinletBasis echo_basis =
        transmit.basis().scale(alpha).recentered(tau + transmit.center() / alpha);
    return CoefficientVector(Kind::Sin, echo_basis,
                             std::vector<double>(transmit.coeffs().begin(), transmit.coeffs().end()));
}

SampledSignal doppler_echo(const CoefficientVector& transmit, const DopplerParams& params,
                           std::span<const double> grid) {
    return reconstruct(doppler_shift(transmit, params), grid);
}

}  // namespace sinlet
