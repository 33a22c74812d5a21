// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#include "sinlet/image.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sinlet/error.hpp"

namespace sinlet {

namespace {

using Matrix = Eigen::MatrixXd;

// count × terms matrix of Sl_k at the axis pixel coordinates.
Matrix axis_samples(const SinletBasis& axis, std::size_t count, std::size_t terms) {
    const std::vector<double> coords = pixel_coordinates(axis, count);
    Matrix m(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(terms));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t k = 0; k < terms; ++k)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = axis.sinlet(k, coords[i]);
    return m;
}

void check_axis(const SinletBasis& axis, std::size_t count, std::size_t terms, const char* name,
                AliasPolicy policy) {
    if (terms == 0) throw ParameterError(std::string("image: ") + name + " term count must be positive");
    if (count < 2)
        throw ParameterError(std::string("image: at least two pixels are needed along ") + name);
    if (policy == AliasPolicy::Allow) return;
    const double spacing = 8.0 * axis.width() / static_cast<double>(count - 1);
    const std::size_t safe = max_safe_terms(axis, spacing);
    if (terms > safe) {
        std::ostringstream msg;
        msg << "image: " << terms << " terms along " << name << " alias on " << count
            << " pixels; max safe is " << safe;
        throw AliasingError(msg.str(), safe);
    }
}

}  // namespace

Basis2D::Basis2D(SinletBasis x_axis, SinletBasis y_axis) : x_(x_axis), y_(y_axis) {
    if (x_.family() != y_.family())
        throw ParameterError("2D basis axes must share one phase family");
}

double basis2d_eval(const Basis2D& basis, std::size_t k1, std::size_t k2, double x, double y) {
    return basis.x_axis().sinlet(k1, x) * basis.y_axis().sinlet(k2, y);
}

GrayImage::GrayImage(std::size_t width, std::size_t height)
    : GrayImage(width, height, std::vector<double>(width * height, 0.0)) {}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<double> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width == 0 || height == 0) throw ParameterError("image dimensions must be positive");
    if (pixels_.size() != width * height)
        throw ParameterError("image pixel count does not match its dimensions");
    for (double p : pixels_)
        if (!std::isfinite(p)) throw DomainError("image holds a non-finite pixel");
}

GrayImage GrayImage::clamped() const {
    std::vector<double> out(pixels_);
    for (double& p : out) p = std::clamp(p, 0.0, 1.0);
    return GrayImage(width_, height_, std::move(out));
}

std::vector<double> pixel_coordinates(const SinletBasis& axis, std::size_t count) {
    if (count == 0) throw ParameterError("pixel axis must have at least one pixel");
    if (count == 1) return {axis.center()};
    std::vector<double> out(count);
    const double denom = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = axis.center() + axis.width() * (8.0 * static_cast<double>(i) / denom - 4.0);
    return out;
}

ImageCoefficients::ImageCoefficients(Basis2D basis, std::size_t k1, std::size_t k2,
                                     std::vector<double> coeffs)
    : basis_(std::move(basis)), k1_(k1), k2_(k2), coeffs_(std::move(coeffs)) {
    if (k1 == 0 || k2 == 0) throw ParameterError("image coefficient dimensions must be positive");
    if (coeffs_.size() != k1 * k2)
        throw ParameterError("image coefficient count does not match K1*K2");
    for (double c : coeffs_)
        if (!std::isfinite(c)) throw DomainError("image coefficients hold a non-finite entry");
}

ImageCoefficients image_decompose(const GrayImage& image, const Basis2D& basis, std::size_t k1,
                                  std::size_t k2, AliasPolicy policy) {
    const std::size_t w = image.width();
    const std::size_t h = image.height();
    check_axis(basis.x_axis(), w, k1, "x", policy);
    check_axis(basis.y_axis(), h, k2, "y", policy);

    const double dx = 8.0 * basis.x_axis().width() / static_cast<double>(w - 1);
    const double dy = 8.0 * basis.y_axis().width() / static_cast<double>(h - 1);
    const Matrix sx = axis_samples(basis.x_axis(), w, k1) * dx;  // W×K₁
    const Matrix sy = axis_samples(basis.y_axis(), h, k2) * dy;  // H×K₂

    using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const Eigen::Map<const RowMajor> img(image.pixels().data(), static_cast<Eigen::Index>(h),
                                         static_cast<Eigen::Index>(w));
    const Matrix rows = img * sx;                   // H×K₁, one pass along x per row
    const RowMajor c = (sy.transpose() * rows).transpose();  // K₁×K₂, pass along y
    return ImageCoefficients(basis, k1, k2, std::vector<double>(c.data(), c.data() + c.size()));
}

GrayImage image_reconstruct(const ImageCoefficients& coeffs, std::size_t width,
                            std::size_t height) {
    if (width == 0 || height == 0) throw ParameterError("image dimensions must be positive");
    const Matrix sx = axis_samples(coeffs.basis().x_axis(), width, coeffs.k1());   // W×K₁
    const Matrix sy = axis_samples(coeffs.basis().y_axis(), height, coeffs.k2());  // H×K₂
    using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const Eigen::Map<const RowMajor> c(coeffs.coeffs().data(), static_cast<Eigen::Index>(coeffs.k1()),
                                       static_cast<Eigen::Index>(coeffs.k2()));
    const RowMajor img = sy * c.transpose() * sx.transpose();  // H×W
    return GrayImage(width, height, std::vector<double>(img.data(), img.data() + img.size()));
}

double dcr(std::size_t k1, std::size_t k2, std::size_t width, std::size_t height) {
    if (k1 == 0 || k2 == 0 || width == 0 || height == 0)
        throw ParameterError("dcr: all dimensions must be positive");
    return static_cast<double>(k1 * k2) / static_cast<double>(width * height);
}

double storage_ratio(std::size_t k1, std::size_t k2, std::size_t width, std::size_t height,
                     std::size_t coefficient_bytes, std::size_t pixel_bytes) {
    if (coefficient_bytes == 0 || pixel_bytes == 0)
        throw ParameterError("storage_ratio: byte sizes must be positive");
    return dcr(k1, k2, width, height) * static_cast<double>(coefficient_bytes) /
           static_cast<double>(pixel_bytes);
}

double psnr(const GrayImage& reference, const GrayImage& test) {
    if (reference.width() != test.width() || reference.height() != test.height())
        throw ParameterError("psnr: image dimensions differ");
    double sse = 0.0;
    for (std::size_t i = 0; i < reference.pixels().size(); ++i) {
        const double d = reference.pixels()[i] - test.pixels()[i];
        sse += d * d;
    }
    const double mse = sse / static_cast<double>(reference.pixels().size());
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(1.0 / mse);
}

}  // namespace sinlet
