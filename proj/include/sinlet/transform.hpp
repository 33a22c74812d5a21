// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sinlet/basis.hpp"

namespace sinlet {

/// Ordered (time, value) samples, uniform or not.
/// Invariants: at least two samples, strictly increasing finite times, finite values.
class SampledSignal {
public:
    SampledSignal(std::vector<double> times, std::vector<double> values);

    std::span<const double> times() const noexcept { return times_; }
    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return times_.size(); }

    /// True when all spacings agree to 1e−9 relative.
    bool is_uniform() const noexcept { return uniform_; }
    double median_spacing() const;

    /// ∫u² dt by the trapezoidal rule on the sample grid.
    double energy() const;

private:
    std::vector<double> times_;
    std::vector<double> values_;
    bool uniform_ = false;
};

/// Generalized Fourier coefficients together with the basis they refer to.
class CoefficientVector {
public:
    /// Throws ParameterError for an empty or non-finite coefficient list.
    CoefficientVector(Kind kind, const SinletBasis& basis, std::vector<double> coeffs);

    Kind kind() const noexcept { return kind_; }
    const SinletBasis& basis() const noexcept { return basis_; }
    Family family() const noexcept { return basis_.family(); }
    double center() const noexcept { return basis_.center(); }
    double width() const noexcept { return basis_.width(); }

    std::span<const double> coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    double operator[](std::size_t n) const { return coeffs_[n]; }

    /// Σ cₙ², which equals ∫u² dt for a signal in the span (Parseval).
    double energy() const noexcept;

    /// Σ cₙ·Slₙ(t) or Σ cₙ·Clₙ(t), according to kind().
    double evaluate(double t) const;

    friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;

private:
    Kind kind_;
    SinletBasis basis_;
    std::vector<double> coeffs_;
};

/// Dₖₘ = ∫ Slₖ(t)·Clₘ(t) dt, independent of family, t₀ and σ.
class CouplingMatrix {
public:
    explicit CouplingMatrix(std::size_t order);

    std::size_t order() const noexcept { return order_; }
    double operator()(std::size_t k, std::size_t m) const { return entries_[k * order_ + m]; }

    /// D·x
    std::vector<double> apply(std::span<const double> x) const;
    /// Dᵀ·x
    std::vector<double> apply_transposed(std::span<const double> x) const;

private:
    std::size_t order_;
    std::vector<double> entries_;  // row-major
};

/// Closed-form entry: 0 when k+m is even (including k = m), otherwise
/// 2/(π(k+m+2)) + 2/(π(k−m)).
double coupling_entry(std::size_t k, std::size_t m) noexcept;

CouplingMatrix coupling_matrix(std::size_t order);

/// Whether decompose() refuses grids that are too coarse for the requested N.
enum class AliasPolicy { Enforce, Allow };

/// Half-width of the integration window in units of σ.
inline constexpr double kWindowHalfWidth = 10.0;

/// n evenly spaced points from a to b inclusive (n ≥ 2).
std::vector<double> linspace(double a, double b, std::size_t n);

/// Energy centroid ∫t·u² / ∫u². Throws DegenerateInputError for a zero signal.
double estimate_center(const SampledSignal& signal);

/// c·[∫(t−t₀)²u² / ∫u²]^{1/2} about estimate_center(). c must lie in [1, 2].
double estimate_width(const SampledSignal& signal, double c);

/// Smallest n_max whose sinlet still reaches nu_max at t_max:
/// ⌈2ν_max / θ̇(t_max)⌉ − 1. Throws PrecisionLossError when θ̇(t_max) underflows
/// or the count overflows.
std::size_t estimate_nmax(const SinletBasis& basis, double nu_max, double t_max);

/// Largest N for which a grid of spacing h keeps ≥ 4 samples per period of
/// sinlet N−1 at its fastest point t₀, i.e. h ≤ 1/(4·ν_{N−1}(t₀)).
std::size_t max_safe_terms(const SinletBasis& basis, double spacing);

/// First N coefficients ∫u·Slₙ dt (or ∫u·Clₙ dt) by the trapezoidal rule over the
/// samples inside [t₀ − 10σ, t₀ + 10σ]. Throws AliasingError if the median spacing
/// there is too coarse for N (unless policy is Allow) and DomainError if the signal
/// does not overlap the window.
CoefficientVector decompose(const SampledSignal& signal, const SinletBasis& basis, std::size_t n,
                            Kind kind, AliasPolicy policy = AliasPolicy::Enforce);

/// Values of Σ cₙ·(basis element n) on the grid.
std::vector<double> synthesize(const CoefficientVector& coeffs, std::span<const double> grid);

/// synthesize() packaged as a signal; the grid must be a valid SampledSignal time axis.
SampledSignal reconstruct(const CoefficientVector& coeffs, std::span<const double> grid);

/// Sinlet → coslet coefficients, b = Dᵀa. Never inverts D (singular for odd N).
CoefficientVector sin_to_cos(const CoefficientVector& a);

/// Coslet → sinlet coefficients, a = D·b.
CoefficientVector cos_to_sin(const CoefficientVector& b);

}  // namespace sinlet
