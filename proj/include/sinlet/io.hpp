// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "sinlet/image.hpp"
#include "sinlet/transform.hpp"

namespace sinlet::io {

/// Shortest-safe decimal form with 17 significant digits; parses back to the same double.
std::string format_double(double value);

/// Strict decimal parse of the whole token. Throws ParseError (line 0 when unknown).
double parse_double(std::string_view token, std::size_t line = 0);

// Coefficient file:
//   sinlet-coefficients 1
//   family=erf
//   kind=sin
//   t0=...
//   sigma=...
//   N=...
//   <N lines, one coefficient each>
inline constexpr std::string_view kCoefficientMagic = "sinlet-coefficients";
inline constexpr int kCoefficientVersion = 1;

void write_coefficients(std::ostream& out, const CoefficientVector& coeffs);
CoefficientVector read_coefficients(std::istream& in);

/// Two-column time,value text. '#' starts a comment line; comma or whitespace separate
/// the columns on read, a comma is written.
void write_signal(std::ostream& out, const SampledSignal& signal);
SampledSignal read_signal(std::istream& in);

// Image coefficient file: magic "sinlet-image-coefficients 1", then family, x0, sigma_x,
// y0, sigma_y, K1, K2, width, height as key=value lines, then K1·K2 coefficients in
// row-major order. width/height record the source frame for decoding.
inline constexpr std::string_view kImageCoefficientMagic = "sinlet-image-coefficients";

struct StoredImageCoefficients {
    ImageCoefficients coeffs;
    std::size_t width;
    std::size_t height;
};

void write_image_coefficients(std::ostream& out, const ImageCoefficients& coeffs,
                              std::size_t width, std::size_t height);
StoredImageCoefficients read_image_coefficients(std::istream& in);

/// Reads binary PGM (P5) or PPM (P6, converted to luminance 0.299R + 0.587G + 0.114B).
/// Pixels map to [0, 1] by value/maxval; maxval up to 65535.
GrayImage read_pnm(std::istream& in);

/// Writes an 8-bit P5 file; pixels are clamped to [0, 1] and rounded to value·255.
void write_pgm(std::ostream& out, const GrayImage& image);

// File-path conveniences; throw ParseError when the file cannot be opened.
CoefficientVector load_coefficients(const std::string& path);
void save_coefficients(const std::string& path, const CoefficientVector& coeffs);
SampledSignal load_signal(const std::string& path);
void save_signal(const std::string& path, const SampledSignal& signal);
StoredImageCoefficients load_image_coefficients(const std::string& path);
void save_image_coefficients(const std::string& path, const ImageCoefficients& coeffs,
                             std::size_t width, std::size_t height);
GrayImage load_image(const std::string& path);
void save_image(const std::string& path, const GrayImage& image);

}  // namespace sinlet::io
