// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#include "sinlet/phase.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "sinlet/error.hpp"

namespace sinlet {

std::string_view to_string(Family family) noexcept {
    return family == Family::Erf ? "erf" : "logistic";
}

Family parse_family(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "erf") return Family::Erf;
    if (lower == "logistic") return Family::Logistic;
    throw ParameterError("unknown phase family '" + std::string(name) +
                         "' (expected erf or logistic)");
}

std::string_view to_string(Verdict verdict) noexcept {
    switch (verdict) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

PhaseFamily::PhaseFamily(Family kind, double center, double width)
    : kind_(kind), center_(center), width_(width) {
    if (!std::isfinite(center)) throw DomainError("phase center t0 must be finite");
    if (!std::isfinite(width) || !(width > 0.0)) {
        std::ostringstream msg;
        msg << "phase width sigma must be positive and finite (got " << width << ")";
        throw DomainError(msg.str());
    }
}

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267794;  // 1/√(2π)

void require_finite(double t) {
    if (!std::isfinite(t)) throw DomainError("phase evaluated at non-finite time");
}

// Logistic θ and 1−θ, each formed without subtracting from 1.
struct LogisticPair {
    double p;  // θ
    double q;  // 1 − θ
};

LogisticPair logistic_pair(double x) {
    const double e = std::exp(-std::abs(x));
    const double big = 1.0 / (1.0 + e);
    const double small = e / (1.0 + e);
    return x >= 0.0 ? LogisticPair{big, small} : LogisticPair{small, big};
}

}  // namespace

double PhaseFamily::theta(double t) const {
    require_finite(t);
    const double x = (t - center_) / width_;
    if (kind_ == Family::Erf) return 0.5 * std::erfc(-x * std::numbers::sqrt2 / 2.0);
    return logistic_pair(x).p;
}

PhaseJet PhaseFamily::jet(double t) const {
    require_finite(t);
    const double s = width_;
    const double x = (t - center_) / s;
    PhaseJet j;
    if (kind_ == Family::Erf) {
        j.theta = 0.5 * std::erfc(-x * std::numbers::sqrt2 / 2.0);
        j.d1 = kInvSqrt2Pi / s * std::exp(-0.5 * x * x);
        j.d2 = -x / s * j.d1;
        j.d3 = (x * x - 1.0) / (s * s) * j.d1;
    } else {
        const auto [p, q] = logistic_pair(x);
        j.theta = p;
        j.d1 = p * q / s;
        j.d2 = j.d1 * (q - p) / s;
        j.d3 = (j.d2 * (q - p) - 2.0 * j.d1 * j.d1) / s;
    }
    return j;
}

double PhaseFamily::log_rate(double t) const {
    require_finite(t);
    const double x = (t - center_) / width_;
    if (kind_ == Family::Erf) return -0.5 * x * x + std::log(kInvSqrt2Pi / width_);
    const double a = std::abs(x);
    return -a - 2.0 * std::log1p(std::exp(-a)) - std::log(width_);
}

double PhaseFamily::schwarzian(double t) const {
    const PhaseJet j = jet(t);
    if (!(j.d1 >= std::numeric_limits<double>::min())) {
        std::ostringstream msg;
        msg << "Schwarzian derivative unavailable at t=" << t << ": d(theta)/dt underflows ("
            << (t - center_) / width_ << " sigma from the center), loss of precision";
        throw PrecisionLossError(msg.str());
    }
    const double r2 = j.d2 / j.d1;
    return j.d3 / j.d1 - 1.5 * r2 * r2;
}

PhaseJet eval_jet(const PhaseFamily& family, double t) { return family.jet(t); }

double schwarzian(const PhaseFamily& family, double t) { return family.schwarzian(t); }

ValidityReport validate(const PhaseFamily& family, std::span<const double> grid,
                        const ValidationTolerances& tol) {
    if (grid.empty()) throw ParameterError("validate: empty grid");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw ParameterError("validate: grid must be sorted");
    for (double t : grid)
        if (!std::isfinite(t)) throw ParameterError("validate: grid contains non-finite time");

    ValidityReport report;

    // 1. θ̇ > 0 (via the analytic log-rate, immune to underflow) and bounded on the grid.
    bool positive = true;
    double max_rate = 0.0;
    for (double t : grid) {
        if (!std::isfinite(family.log_rate(t))) positive = false;
        max_rate = std::max(max_rate, family.jet(t).d1);
    }
    report.max_rate = max_rate;
    report.rate_positive_bounded =
        positive && std::isfinite(max_rate) ? Verdict::Pass : Verdict::Fail;

    // 2. Monotone approach to 0 and 1 at the sampled extremes.
    bool monotone = true;
    double prev = -1.0;
    for (double t : grid) {
        const double th = family.theta(t);
        if (th < prev) monotone = false;
        prev = th;
    }
    const double lo = (family.center() - grid.front()) / family.width();
    const double hi = (grid.back() - family.center()) / family.width();
    if (!monotone) {
        report.limits = Verdict::Fail;
    } else if (lo < tol.tail_distance || hi < tol.tail_distance) {
        report.limits = Verdict::Indeterminate;
    } else {
        const double left = family.theta(grid.front());
        const double right = 1.0 - family.theta(grid.back());
        const bool ok = left <= std::max(tol.tail_tol, std::exp(-lo)) &&
                        right <= std::max(tol.tail_tol, std::exp(-hi));
        report.limits = ok ? Verdict::Pass : Verdict::Fail;
    }

    // 3. S(θ) ≤ slack wherever it is representable.
    bool nonpositive = true;
    bool any = false;
    double max_s = -std::numeric_limits<double>::infinity();
    for (double t : grid) {
        try {
            const double s = family.schwarzian(t);
            any = true;
            max_s = std::max(max_s, s);
            if (!(s <= tol.schwarzian_slack)) nonpositive = false;
        } catch (const PrecisionLossError&) {
            ++report.precision_limited;
        }
    }
    report.max_schwarzian = any ? max_s : 0.0;
    report.schwarzian_nonpositive =
        !any ? Verdict::Indeterminate : (nonpositive ? Verdict::Pass : Verdict::Fail);
    return report;
}

}  // namespace sinlet
