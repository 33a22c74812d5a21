// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

namespace sinlet {

/// The two built-in mother-phase families.
///
///   Erf:      θ(t) = ½·(1 + erf((t − t₀)/(σ√2)))
///   Logistic: θ(t) = 1 / (1 + exp(−(t − t₀)/σ))
///
/// Both rise monotonically from 0 to 1, are point-symmetric about (t₀, ½)
/// and have a non-positive Schwarzian derivative everywhere.
enum class Family { Erf, Logistic };

std::string_view to_string(Family family) noexcept;
/// Accepts "erf" or "logistic" (case-insensitive); throws ParameterError otherwise.
Family parse_family(std::string_view name);

/// θ and its first three time derivatives at one instant.
struct PhaseJet {
    double theta = 0.0;  // dimensionless
    double d1 = 0.0;     // 1/time
    double d2 = 0.0;     // 1/time²
    double d3 = 0.0;     // 1/time³
};

/// A mother-phase θ(t − t₀; σ). Immutable once constructed.
///
/// erf is evaluated through the C library's erfc (glibc documents a maximum
/// error of a couple of ulp), as θ = ½·erfc(−z). This keeps full relative
/// precision in the left tail where ½(1 + erf(z)) would cancel.
class PhaseFamily {
public:
    /// Throws DomainError unless σ > 0 and both parameters are finite.
    PhaseFamily(Family kind, double center, double width);

    Family kind() const noexcept { return kind_; }
    double center() const noexcept { return center_; }
    double width() const noexcept { return width_; }

    /// Analytic θ, θ̇, θ̈, θ⃛ at t. Throws DomainError for non-finite t.
    PhaseJet jet(double t) const;

    /// θ(t) alone.
    double theta(double t) const;

    /// ln θ̇(t), finite for every finite t even where θ̇ itself underflows.
    double log_rate(double t) const;

    /// Schwarzian derivative θ⃛/θ̇ − (3/2)(θ̈/θ̇)².
    /// Throws PrecisionLossError where θ̇ is no longer a normal double.
    double schwarzian(double t) const;

    friend bool operator==(const PhaseFamily&, const PhaseFamily&) = default;

private:
    Family kind_;
    double center_;
    double width_;
};

PhaseJet eval_jet(const PhaseFamily& family, double t);
double schwarzian(const PhaseFamily& family, double t);

/// Outcome of one admissibility condition on a finite grid.
enum class Verdict { Pass, Fail, Indeterminate };
std::string_view to_string(Verdict verdict) noexcept;

/// Grid-based check of the three mother-phase conditions:
///   1. θ̇ > 0 and bounded,
///   2. θ → 0 as t → −∞ and θ → 1 as t → +∞ (monotonically),
///   3. S(θ) ≤ 0.
struct ValidityReport {
    Verdict rate_positive_bounded = Verdict::Indeterminate;
    Verdict limits = Verdict::Indeterminate;
    Verdict schwarzian_nonpositive = Verdict::Indeterminate;

    double max_rate = 0.0;                 // max θ̇ seen on the grid
    double max_schwarzian = 0.0;           // max S(θ) seen where it is representable
    std::size_t precision_limited = 0;     // grid points where S(θ) could not be evaluated

    bool all_pass() const noexcept {
        return rate_positive_bounded == Verdict::Pass && limits == Verdict::Pass &&
               schwarzian_nonpositive == Verdict::Pass;
    }
};

struct ValidationTolerances {
    double tail_tol = 1e-10;          // floor for the distance to the limit at a sampled tail
    double tail_distance = 8.0;       // in units of σ; extremes closer than this are not tails
    double schwarzian_slack = 1e-9;   // S(θ) ≤ slack counts as non-positive
};

/// Never throws on a failed condition; failures are reported.
/// Throws ParameterError when the grid is empty or unsorted.
ValidityReport validate(const PhaseFamily& family, std::span<const double> grid,
                        const ValidationTolerances& tol = {});

}  // namespace sinlet
