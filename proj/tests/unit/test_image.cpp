// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "oracles.hpp"
#include "sinlet/error.hpp"
#include "sinlet/image.hpp"

using namespace sinlet;

namespace {

// Smooth test image in physical coordinates on the ±4σ frame.
GrayImage smooth_image(const Basis2D& b, std::size_t w, std::size_t h) {
    const auto xs = pixel_coordinates(b.x_axis(), w);
    const auto ys = pixel_coordinates(b.y_axis(), h);
    GrayImage img(w, h);
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = 0; x < w; ++x) {
            const double u = xs[x] - b.x_axis().center(), v = ys[y] - b.y_axis().center();
            img.at(x, y) = 0.5 * std::exp(-(u * u + v * v) / 6.0) * (1.0 + 0.6 * std::cos(0.9 * u - 0.4 * v));
        }
    return img;
}

// c = Σ_x Σ_y img·Φ·ΔxΔy, one basis evaluation per term per pixel.
double naive_coefficient(const GrayImage& img, const Basis2D& b, std::size_t k1, std::size_t k2) {
    const auto xs = pixel_coordinates(b.x_axis(), img.width());
    const auto ys = pixel_coordinates(b.y_axis(), img.height());
    const double dx = xs[1] - xs[0], dy = ys[1] - ys[0];
    double s = 0.0;
    for (std::size_t y = 0; y < img.height(); ++y)
        for (std::size_t x = 0; x < img.width(); ++x)
            s += img.at(x, y) *
                 oracle::sinlet(b.family(), k1, xs[x], b.x_axis().center(), b.x_axis().width()) *
                 oracle::sinlet(b.family(), k2, ys[y], b.y_axis().center(), b.y_axis().width());
    return s * dx * dy;
}

}  // namespace

TEST(Basis2D, RequiresOneFamily) {
    EXPECT_THROW(Basis2D(SinletBasis(Family::Erf, 0, 1), SinletBasis(Family::Logistic, 0, 1)), ParameterError);
    const Basis2D b(SinletBasis(Family::Erf, 0, 1), SinletBasis(Family::Erf, 2, 3));
    EXPECT_EQ(b.family(), Family::Erf);
    EXPECT_DOUBLE_EQ(b.y_axis().width(), 3.0);
}

TEST(Basis2D, EvaluationIsTheProductOfAxes) {
    oracle::Gen g(3);
    for (int i = 0; i < 100; ++i) {
        const Family f = g.family();
        const double x0 = g.uniform(-1, 1), s1 = g.uniform(0.5, 2), y0 = g.uniform(-1, 1), s2 = g.uniform(0.5, 2);
        const Basis2D b(SinletBasis(f, x0, s1), SinletBasis(f, y0, s2));
        const std::size_t k1 = g.index(0, 7), k2 = g.index(0, 7);
        const double x = g.uniform(-5, 5), y = g.uniform(-5, 5);
        EXPECT_NEAR(basis2d_eval(b, k1, k2, x, y),
                    oracle::sinlet(f, k1, x, x0, s1) * oracle::sinlet(f, k2, y, y0, s2), 1e-13);
    }
}

TEST(Basis2D, GramMatrixIsIdentity) {
    // Tensor Gauss–Legendre over ±12σ per axis, indices up to (7, 7).
    for (Family f : {Family::Erf, Family::Logistic}) {
        const Basis2D b(SinletBasis(f, 0.5, 1.0), SinletBasis(f, -1.0, 1.5));
        const std::size_t panels = 120;
        const double ax = 0.5 - 12.0, bx = 0.5 + 12.0, ay = -1.0 - 18.0, by = -1.0 + 18.0;
        std::vector<double> gx, gy, wx, wy;
        static constexpr double node[5] = {0.0, 0.5384693101056830910, -0.5384693101056830910,
                                           0.9061798459386639928, -0.9061798459386639928};
        static constexpr double weight[5] = {0.5688888888888888889, 0.4786286704993664680,
                                             0.4786286704993664680, 0.2369268850561890875,
                                             0.2369268850561890875};
        auto nodes = [&](double a, double c, std::vector<double>& pts, std::vector<double>& ws) {
            const double h = (c - a) / panels;
            for (std::size_t p = 0; p < panels; ++p)
                for (int i = 0; i < 5; ++i) {
                    pts.push_back(a + (p + 0.5) * h + 0.5 * h * node[i]);
                    ws.push_back(0.5 * h * weight[i]);
                }
        };
        nodes(ax, bx, gx, wx);
        nodes(ay, by, gy, wy);
        // Tabulate each axis once; the 2D integral of products factors only if the test
        // sums the full tensor grid, which it does below.
        std::vector<std::vector<double>> tx(8, std::vector<double>(gx.size())), ty(8, std::vector<double>(gy.size()));
        for (std::size_t k = 0; k < 8; ++k) {
            for (std::size_t i = 0; i < gx.size(); ++i) tx[k][i] = oracle::sinlet(f, k, gx[i], 0.5, 1.0);
            for (std::size_t j = 0; j < gy.size(); ++j) ty[k][j] = oracle::sinlet(f, k, gy[j], -1.0, 1.5);
        }
        double worst = 0.0;
        for (std::size_t k1 = 0; k1 < 8; k1 += 3)
            for (std::size_t k2 = 0; k2 < 8; k2 += 2)
                for (std::size_t m1 = 0; m1 < 8; ++m1)
                    for (std::size_t m2 = 0; m2 < 8; ++m2) {
                        double s = 0.0;
                        for (std::size_t j = 0; j < gy.size(); ++j) {
                            double row = 0.0;
                            for (std::size_t i = 0; i < gx.size(); ++i) row += wx[i] * tx[k1][i] * tx[m1][i];
                            s += wy[j] * ty[k2][j] * ty[m2][j] * row;
                        }
                        const double want = (k1 == m1 && k2 == m2) ? 1.0 : 0.0;
                        worst = std::max(worst, std::abs(s - want));
                    }
        EXPECT_LT(worst, 1e-5) << to_string(f);
    }
}

TEST(GrayImage, Invariants) {
    EXPECT_THROW(GrayImage(0, 3), ParameterError);
    EXPECT_THROW(GrayImage(2, 2, {0.0, 0.1, 0.2}), ParameterError);
    EXPECT_THROW(GrayImage(1, 1, {std::nan("")}), DomainError);
    GrayImage img(3, 2, {0, 1, 2, 3, 4, 5});
    EXPECT_EQ(img.at(2, 1), 5.0);
    EXPECT_EQ(img.at(0, 1), 3.0);
    img.at(1, 0) = -0.5;
    const GrayImage c = img.clamped();
    EXPECT_EQ(c.at(1, 0), 0.0);
    EXPECT_EQ(c.at(2, 1), 1.0);
}

TEST(PixelCoordinates, SpanPlusMinusFourSigma) {
    const SinletBasis axis(Family::Logistic, 2.0, 0.5);
    const auto c = pixel_coordinates(axis, 9);
    EXPECT_DOUBLE_EQ(c.front(), 0.0);
    EXPECT_DOUBLE_EQ(c.back(), 4.0);
    EXPECT_DOUBLE_EQ(c[4], 2.0);
    EXPECT_EQ(pixel_coordinates(axis, 1), std::vector<double>{2.0});
}

TEST(ImageDecompose, ZeroImageGivesZeroCoefficients) {
    const Basis2D b(SinletBasis(Family::Logistic, 0, 1), SinletBasis(Family::Logistic, 0, 1));
    const ImageCoefficients c = image_decompose(GrayImage(32, 24), b, 5, 4);
    EXPECT_EQ(c.k1(), 5u);
    EXPECT_EQ(c.k2(), 4u);
    for (double v : c.coeffs()) EXPECT_EQ(v, 0.0);
}

TEST(ImageDecompose, FastTransformEqualsNaiveDoubleSum) {
    oracle::Gen g(4);
    for (Family f : {Family::Erf, Family::Logistic}) {
        const Basis2D b(SinletBasis(f, 0.0, 1.0), SinletBasis(f, 0.3, 0.8));
        std::vector<double> px(16 * 16);
        for (double& p : px) p = g.uniform(0, 1);
        const GrayImage img(16, 16, px);
        const ImageCoefficients c = image_decompose(img, b, 4, 3, AliasPolicy::Allow);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(c.at(i, j), naive_coefficient(img, b, i, j), 1e-10);
    }
}

TEST(ImageDecompose, NonSquareLayoutIsRowMajorInK1) {
    const Basis2D b(SinletBasis(Family::Erf, 0.0, 1.0), SinletBasis(Family::Erf, 0.0, 2.0));
    const GrayImage img = smooth_image(b, 40, 30);
    const ImageCoefficients c = image_decompose(img, b, 5, 3);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(c.at(i, j), naive_coefficient(img, b, i, j), 1e-10);
}

TEST(ImageDecompose, RankOneImageGivesOuterProduct) {
    // u(x)·v(y) decomposes to the outer product of the per-axis sums, each computed
    // with the same midpoint weights.
    const Basis2D b(SinletBasis(Family::Logistic, 0.0, 1.0), SinletBasis(Family::Logistic, 0.0, 1.0));
    const std::size_t w = 48, h = 36;
    const auto xs = pixel_coordinates(b.x_axis(), w), ys = pixel_coordinates(b.y_axis(), h);
    auto u = [](double x) { return std::exp(-x * x / 4) * (1 + 0.5 * std::sin(x)); };
    auto v = [](double y) { return 1.0 / (1.0 + y * y); };
    GrayImage img(w, h);
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = 0; x < w; ++x) img.at(x, y) = u(xs[x]) * v(ys[y]);
    const ImageCoefficients c = image_decompose(img, b, 6, 5);
    const double dx = xs[1] - xs[0], dy = ys[1] - ys[0];
    for (std::size_t i = 0; i < 6; ++i) {
        double cu = 0.0;
        for (std::size_t x = 0; x < w; ++x) cu += u(xs[x]) * oracle::sinlet(Family::Logistic, i, xs[x], 0, 1) * dx;
        for (std::size_t j = 0; j < 5; ++j) {
            double cv = 0.0;
            for (std::size_t y = 0; y < h; ++y) cv += v(ys[y]) * oracle::sinlet(Family::Logistic, j, ys[y], 0, 1) * dy;
            EXPECT_NEAR(c.at(i, j), cu * cv, 1e-6);
        }
    }
    // and the 2×2 minors vanish
    for (std::size_t i = 1; i < 6; ++i)
        for (std::size_t j = 1; j < 5; ++j)
            EXPECT_NEAR(c.at(i, j) * c.at(0, 0) - c.at(i, 0) * c.at(0, j), 0.0, 1e-6);
}

TEST(ImageDecompose, AliasingGuard) {
    // 64 pixels over 8σ: spacing 8/63; θ̇(0) = 1/4 (logistic), 1/√(2π) (erf).
    const Basis2D lb(SinletBasis(Family::Logistic, 0, 1), SinletBasis(Family::Logistic, 0, 1));
    const Basis2D eb(SinletBasis(Family::Erf, 0, 1), SinletBasis(Family::Erf, 0, 1));
    const GrayImage img(64, 64);
    EXPECT_NO_THROW(image_decompose(img, lb, 15, 15));
    try {
        image_decompose(img, lb, 16, 4);
        FAIL();
    } catch (const AliasingError& e) {
        EXPECT_EQ(e.max_safe_terms(), 15u);
    }
    EXPECT_NO_THROW(image_decompose(img, eb, 9, 9));
    EXPECT_THROW(image_decompose(img, eb, 4, 10), AliasingError);
    EXPECT_THROW(image_decompose(img, eb, 64, 64), AliasingError);
    EXPECT_NO_THROW(image_decompose(img, eb, 64, 64, AliasPolicy::Allow));
    EXPECT_THROW(image_decompose(img, eb, 0, 3), ParameterError);
    EXPECT_THROW(image_decompose(GrayImage(1, 8), eb, 1, 1), ParameterError);
}

TEST(ImageReconstruct, ZeroCoefficientsGiveBlack) {
    const Basis2D b(SinletBasis(Family::Erf, 0, 1), SinletBasis(Family::Erf, 0, 1));
    const GrayImage img = image_reconstruct(ImageCoefficients(b, 3, 2, std::vector<double>(6, 0.0)), 10, 7);
    EXPECT_EQ(img.width(), 10u);
    EXPECT_EQ(img.height(), 7u);
    for (double p : img.pixels()) EXPECT_EQ(p, 0.0);
}

TEST(ImageReconstruct, MatchesDirectSum) {
    oracle::Gen g(6);
    const Basis2D b(SinletBasis(Family::Logistic, 0.2, 1.1), SinletBasis(Family::Logistic, -0.4, 0.9));
    const ImageCoefficients c(b, 3, 4, g.vector(12));
    const GrayImage img = image_reconstruct(c, 11, 13);
    const auto xs = pixel_coordinates(b.x_axis(), 11), ys = pixel_coordinates(b.y_axis(), 13);
    for (std::size_t y = 0; y < 13; ++y)
        for (std::size_t x = 0; x < 11; ++x) {
            double s = 0.0;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 4; ++j) s += c.at(i, j) * basis2d_eval(b, i, j, xs[x], ys[y]);
            EXPECT_NEAR(img.at(x, y), s, 1e-13);
        }
}

TEST(ImageRoundTrip, InSpanImageIsRecovered) {
    // Erf sinlets keep all but ~6e−5 of their energy inside ±4σ, so an image built from
    // a few terms comes back through decompose/reconstruct nearly unchanged.
    oracle::Gen g(7);
    const Basis2D b(SinletBasis(Family::Erf, 0, 1), SinletBasis(Family::Erf, 0, 1));
    const ImageCoefficients truth(b, 4, 4, g.vector(16, 0.0, 0.25));
    const GrayImage img = image_reconstruct(truth, 64, 64);
    const ImageCoefficients got = image_decompose(img, b, 4, 4);
    for (std::size_t i = 0; i < 16; ++i) EXPECT_NEAR(got.coeffs()[i], truth.coeffs()[i], 1e-3);
    EXPECT_GT(psnr(img, image_reconstruct(got, 64, 64)), 60.0);
}

TEST(ImageRoundTrip, FidelityIsMonotoneInEachAxis) {
    const Basis2D b(SinletBasis(Family::Erf, 0, 1), SinletBasis(Family::Erf, 0, 1));
    const GrayImage img = smooth_image(b, 64, 64);
    for (std::size_t fixed : {std::size_t{3}, std::size_t{9}}) {
        double prev_x = -std::numeric_limits<double>::infinity(), prev_y = prev_x;
        for (std::size_t k = 1; k <= 9; ++k) {
            const double px = psnr(img, image_reconstruct(image_decompose(img, b, k, fixed), 64, 64));
            const double py = psnr(img, image_reconstruct(image_decompose(img, b, fixed, k), 64, 64));
            EXPECT_GE(px, prev_x) << "K1=" << k << " K2=" << fixed;
            EXPECT_GE(py, prev_y) << "K1=" << fixed << " K2=" << k;
            prev_x = px;
            prev_y = py;
        }
    }
}

TEST(ImageRoundTrip, LogisticFrameTruncationDipIsSmall) {
    // Logistic sinlets leave a few percent of their energy outside the ±4σ frame, so the
    // midpoint sum is not an exact projection and an added odd term can cost a little.
    const Basis2D b(SinletBasis(Family::Logistic, 0, 1), SinletBasis(Family::Logistic, 0, 1));
    const GrayImage img = smooth_image(b, 64, 64);
    for (std::size_t fixed : {std::size_t{3}, std::size_t{15}}) {
        double prev = -std::numeric_limits<double>::infinity(), first = 0.0, last = 0.0;
        for (std::size_t k = 1; k <= 15; ++k) {
            const double p = psnr(img, image_reconstruct(image_decompose(img, b, k, fixed), 64, 64));
            EXPECT_GE(p, prev - 0.05) << "K1=" << k << " K2=" << fixed;
            prev = p;
            (k == 1 ? first : last) = p;
        }
        EXPECT_GT(last, first + 3.0);
    }
}

TEST(Dcr, FigureCaptions) {
    EXPECT_EQ(std::round(dcr(200, 200, 281, 231) * 1e4) / 1e4, 0.6162);
    EXPECT_EQ(std::round(dcr(210, 210, 332, 286) * 1e4) / 1e4, 0.4644);
    EXPECT_DOUBLE_EQ(dcr(200, 200, 281, 231), 40000.0 / 64911.0);
    EXPECT_DOUBLE_EQ(storage_ratio(200, 200, 281, 231), 8 * 40000.0 / 64911.0);
    EXPECT_DOUBLE_EQ(storage_ratio(200, 200, 281, 231, 4, 2), 2 * 40000.0 / 64911.0);
    EXPECT_THROW(dcr(0, 1, 1, 1), ParameterError);
    EXPECT_THROW(storage_ratio(1, 1, 1, 1, 0, 1), ParameterError);
}

TEST(Psnr, Values) {
    const GrayImage a(2, 2, {0.0, 0.5, 1.0, 0.25});
    EXPECT_TRUE(std::isinf(psnr(a, a)));
    const GrayImage b(2, 2, {0.1, 0.6, 1.1, 0.35});
    EXPECT_NEAR(psnr(a, b), 20.0, 1e-12);
    EXPECT_THROW(psnr(a, GrayImage(1, 4)), ParameterError);
}
