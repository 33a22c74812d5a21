// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sinlet/transform.hpp"

namespace sinlet {

/// Separable 2D basis Φ_{k₁k₂}(x, y) = Sl_{k₁}(x − x₀; σ₁)·Sl_{k₂}(y − y₀; σ₂).
/// Both axes must share a family; centers and widths may differ.
class Basis2D {
public:
    Basis2D(SinletBasis x_axis, SinletBasis y_axis);

    const SinletBasis& x_axis() const noexcept { return x_; }
    const SinletBasis& y_axis() const noexcept { return y_; }
    Family family() const noexcept { return x_.family(); }

    friend bool operator==(const Basis2D&, const Basis2D&) = default;

private:
    SinletBasis x_;
    SinletBasis y_;
};

double basis2d_eval(const Basis2D& basis, std::size_t k1, std::size_t k2, double x, double y);

/// Grayscale raster, row-major (pixels[y·width + x]). Values are nominally in [0, 1];
/// decoders clamp on load and encoders clamp on write, in-memory results stay raw.
class GrayImage {
public:
    GrayImage(std::size_t width, std::size_t height);
    GrayImage(std::size_t width, std::size_t height, std::vector<double> pixels);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    double at(std::size_t x, std::size_t y) const { return pixels_[y * width_ + x]; }
    double& at(std::size_t x, std::size_t y) { return pixels_[y * width_ + x]; }
    std::span<const double> pixels() const noexcept { return pixels_; }

    GrayImage clamped() const;

private:
    std::size_t width_;
    std::size_t height_;
    std::vector<double> pixels_;
};

/// Physical coordinates of `count` pixel centers along one axis: the frame spans
/// ±4σ about the axis center, x_i = x₀ + σ·(8i/(count−1) − 4). A single pixel sits at x₀.
std::vector<double> pixel_coordinates(const SinletBasis& axis, std::size_t count);

/// K₁×K₂ coefficient matrix, row-major in k₁ (coeffs[k₁·K₂ + k₂]).
class ImageCoefficients {
public:
    ImageCoefficients(Basis2D basis, std::size_t k1, std::size_t k2, std::vector<double> coeffs);

    const Basis2D& basis() const noexcept { return basis_; }
    std::size_t k1() const noexcept { return k1_; }
    std::size_t k2() const noexcept { return k2_; }
    double at(std::size_t i, std::size_t j) const { return coeffs_[i * k2_ + j]; }
    std::span<const double> coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const ImageCoefficients&, const ImageCoefficients&) = default;

private:
    Basis2D basis_;
    std::size_t k1_;
    std::size_t k2_;
    std::vector<double> coeffs_;
};

/// c_{k₁k₂} = Σ img·Φ_{k₁k₂}·ΔxΔy (midpoint rule), computed as a row pass followed by a
/// column pass. Each axis is checked against the aliasing guard of decompose().
ImageCoefficients image_decompose(const GrayImage& image, const Basis2D& basis, std::size_t k1,
                                  std::size_t k2, AliasPolicy policy = AliasPolicy::Enforce);

/// Σ c_{k₁k₂}·Φ_{k₁k₂} on a width×height pixel grid; values are not clamped.
GrayImage image_reconstruct(const ImageCoefficients& coeffs, std::size_t width, std::size_t height);

/// Data compression ratio: stored coefficients over original pixels, (K₁·K₂)/(W·H).
double dcr(std::size_t k1, std::size_t k2, std::size_t width, std::size_t height);

/// Extension to dcr(): the same ratio measured in bytes, for coefficients and pixels of
/// the given sizes (defaults: double coefficients, 8-bit pixels).
double storage_ratio(std::size_t k1, std::size_t k2, std::size_t width, std::size_t height,
                     std::size_t coefficient_bytes = 8, std::size_t pixel_bytes = 1);

/// Peak signal-to-noise ratio in dB for a peak value of 1. Infinite for identical images.
double psnr(const GrayImage& reference, const GrayImage& test);

}  // namespace sinlet
