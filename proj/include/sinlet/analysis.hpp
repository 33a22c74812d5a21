// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sinlet/transform.hpp"

namespace sinlet {

/// Projection of a sampled signal onto span{Sl₀ … Sl_{N−1}}, evaluated back on the
/// input grid. Errors as decompose().
SampledSignal denoise(const SampledSignal& signal, const SinletBasis& basis, std::size_t n);

/// Smallest N whose leading coefficients hold at least (1 − delta) of Σcₙ².
std::size_t suggest_terms(const CoefficientVector& coeffs, double delta = 1e-3);

/// Row-major N×K matrix of Sl_k(t_i).
class DesignMatrix {
public:
    DesignMatrix(const SinletBasis& basis, std::span<const double> times, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double operator()(std::size_t i, std::size_t k) const { return entries_[i * cols_ + k]; }
    std::span<const double> entries() const noexcept { return entries_; }

    /// F·a
    std::vector<double> apply(std::span<const double> a) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;
};

/// Least-squares sinlet coefficients from (possibly non-uniform) samples, solved by a
/// column-pivoted Householder QR of F rather than the normal equations.
/// Requires K < number of samples; throws IllPosedError with the effective rank when F
/// is rank-deficient.
CoefficientVector fit_nonuniform(const SampledSignal& samples, const SinletBasis& basis,
                                 std::size_t k);

/// |Σ cₙ·Ψₙ(t)|. For sinlet coefficients this is the envelope of Σ aₙSlₙ; for coslet
/// coefficients the envelope of Σ bₙClₙ.
SampledSignal envelope(const CoefficientVector& coeffs, std::span<const double> grid);

/// u̇(t) = Σ aₙ·(θ̈/(2θ̇)·Slₙ + π(n+1)θ̇·Clₙ). Sinlet coefficients only; convert coslet
/// coefficients with cos_to_sin() first (UnsupportedKindError otherwise).
SampledSignal differentiate(const CoefficientVector& coeffs, std::span<const double> grid);

/// The erf-family specialization of differentiate():
/// Σ aₙ·((t₀−t)/(2σ²)·Slₙ + √(π/2)(n+1)σ⁻¹exp(−(t−t₀)²/(2σ²))·Clₙ).
/// Throws ParameterError for other families.
SampledSignal differentiate_erf(const CoefficientVector& coeffs, std::span<const double> grid);

/// Echo geometry for a point target at constant radial velocity.
struct DopplerParams {
    double propagation_speed = 0.0;  // c, m/s
    double radial_velocity = 0.0;    // v, m/s (positive = receding)
    double range = 0.0;              // m

    /// Throws DomainError unless c > 0, |v| < c and range ≥ 0 (all finite).
    void validate() const;
    /// α = (c − v)/(c + v)
    double alpha() const;
    /// τ = 2·range/c
    double delay() const;
};

/// Coefficients of the echo √α·w(α(t − τ)) of the waveform w = Σ aₙSlₙ(t − t₀; σ):
/// the same aₙ against a basis of width σ/α centered at τ + t₀/α.
CoefficientVector doppler_shift(const CoefficientVector& transmit, const DopplerParams& params);

/// doppler_shift() evaluated on a grid.
SampledSignal doppler_echo(const CoefficientVector& transmit, const DopplerParams& params,
                           std::span<const double> grid);

}  // namespace sinlet
