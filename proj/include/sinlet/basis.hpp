// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

#include "sinlet/phase.hpp"

namespace sinlet {

/// Sinlet (sine) or coslet (cosine) member of a basis.
enum class Kind { Sin, Cos };

std::string_view to_string(Kind kind) noexcept;
/// Accepts "sin" or "cos"; throws ParameterError otherwise.
Kind parse_kind(std::string_view name);

/// Shared amplitude √(2θ̇) and mother-phase value θ at one instant.
struct PolarPoint {
    double amplitude = 0.0;
    double theta = 0.0;
};

/// Localized orthonormal basis generated by a mother-phase θ:
///
///   Slₙ(t) = √(2θ̇(t))·sin(π(n+1)θ(t))
///   Clₙ(t) = √(2θ̇(t))·cos(π(n+1)θ(t))
///   Ψₙ(t)  = Clₙ(t) + i·Slₙ(t) = √(2θ̇(t))·exp(iπ(n+1)θ(t))
///
/// Each element is an exact solution of a time-dependent harmonic oscillator
/// ẍ + Ωₙ²(t)x = 0. Evaluation is O(1) in n. Where √(2θ̇) underflows the
/// functions return exactly zero.
class SinletBasis {
public:
    explicit SinletBasis(PhaseFamily phase) : phase_(phase) {}
    SinletBasis(Family family, double center, double width) : phase_(family, center, width) {}

    const PhaseFamily& phase() const noexcept { return phase_; }
    Family family() const noexcept { return phase_.kind(); }
    double center() const noexcept { return phase_.center(); }
    double width() const noexcept { return phase_.width(); }

    double sinlet(std::size_t n, double t) const;
    double coslet(std::size_t n, double t) const;
    double evaluate(Kind kind, std::size_t n, double t) const {
        return kind == Kind::Sin ? sinlet(n, t) : coslet(n, t);
    }
    std::complex<double> psi(std::size_t n, double t) const;

    /// Instantaneous amplitude √(2θ̇), shared by every element.
    double amplitude(double t) const { return polar(t).amplitude; }

    /// Amplitude and θ from one phase evaluation; element n has angle π(n+1)θ.
    PolarPoint polar(double t) const;

    /// νₙ(t) = ½(n+1)θ̇(t), in cycles per unit time.
    double inst_frequency(std::size_t n, double t) const;

    /// Ωₙ²(t) = θ̇ₙ² + ½S(θ) with θ̇ₙ = π(n+1)θ̇ (generic route via the phase jet).
    /// Throws PrecisionLossError deep in the tails.
    double omega_squared(std::size_t n, double t) const;

    /// Basis with width σ/α and the same center, so that
    /// √α·Slₙ(α(t−t₀); σ) = Slₙ(t−t₀; σ/α). Throws DomainError unless α > 0.
    SinletBasis scale(double alpha) const;

    /// Same family and width, center moved to `center`.
    SinletBasis recentered(double center) const;

    friend bool operator==(const SinletBasis&, const SinletBasis&) = default;

private:
    PhaseFamily phase_;
};

inline SinletBasis scale(const SinletBasis& basis, double alpha) { return basis.scale(alpha); }

/// Ωₙ² from the family's closed form:
///   erf:      (1/(2σ²))·[π(n+1)²·exp(−x²/σ²) − x²/(2σ²) − 1]
///   logistic: (1/(4σ²))·[π²(n+1)² / (4cosh⁴(x/(2σ))) − 1]
/// with x = t − t₀. Finite everywhere, unlike the generic route.
double omega_squared_closed_form(const SinletBasis& basis, std::size_t n, double t);

}  // namespace sinlet
