// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#include <cmath>
#include <memory>

#include "commands.hpp"
#include "sinlet/error.hpp"
#include "sinlet/image.hpp"
#include "sinlet/io.hpp"

namespace sinlet::cli {

namespace {

// Smooth test pattern for --synthetic: low-order cosines over normalized coordinates.
GrayImage synthetic_image(std::size_t w, std::size_t h) {
    GrayImage img(w, h);
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = 0; x < w; ++x) {
            const double u = w > 1 ? 2.0 * static_cast<double>(x) / static_cast<double>(w - 1) - 1.0 : 0.0;
            const double v = h > 1 ? 2.0 * static_cast<double>(y) / static_cast<double>(h - 1) - 1.0 : 0.0;
            img.at(x, y) = 0.5 + 0.3 * std::cos(3.0 * u) * std::cos(2.0 * v) + 0.15 * u * v;
        }
    return img;
}

std::pair<std::size_t, std::size_t> parse_size_spec(const std::string& spec) {
    const std::size_t x = spec.find('x');
    std::size_t w = 0, h = 0;
    try {
        if (x == std::string::npos) throw std::invalid_argument(spec);
        std::size_t used = 0;
        w = std::stoul(spec.substr(0, x), &used);
        if (used != x) throw std::invalid_argument(spec);
        h = std::stoul(spec.substr(x + 1), &used);
        if (used != spec.size() - x - 1) throw std::invalid_argument(spec);
    } catch (const std::logic_error&) {
        throw UsageError("size must look like WIDTHxHEIGHT, got '" + spec + "'");
    }
    if (w == 0 || h == 0) throw UsageError("image size must be positive");
    return {w, h};
}

void add_img_encode(CLI::App& app, std::vector<Command>& commands) {
    struct Opts {
        std::string input, synthetic, output, restored, family = "logistic";
        std::optional<std::size_t> k, k1, k2;
        double x0 = 0.0, y0 = 0.0, sigma_x = 1.0, sigma_y = 1.0;
        bool allow_aliasing = false;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = app.add_subcommand("img-encode", "grayscale image -> K1 x K2 sinlet coefficients");
    auto* in = sub->add_option("--input", o->input, "PGM (P5) or PPM (P6) image");
    sub->add_option("--synthetic", o->synthetic, "use a smooth WIDTHxHEIGHT test image")->excludes(in);
    sub->add_option("--k", o->k, "terms along both axes");
    sub->add_option("--k1", o->k1, "terms along x");
    sub->add_option("--k2", o->k2, "terms along y");
    sub->add_option("--family", o->family)->capture_default_str();
    sub->add_option("--x0", o->x0)->capture_default_str();
    sub->add_option("--y0", o->y0)->capture_default_str();
    sub->add_option("--sigma-x", o->sigma_x)->capture_default_str();
    sub->add_option("--sigma-y", o->sigma_y)->capture_default_str();
    sub->add_flag("--allow-aliasing", o->allow_aliasing, "skip the sampling-density guard");
    sub->add_option("-o,--output", o->output, "image coefficient file");
    sub->add_option("--restored", o->restored, "write the reconstruction as PGM");
    commands.push_back({sub, [o] {
        if (o->input.empty() == o->synthetic.empty()) throw UsageError("give exactly one of --input or --synthetic");
        const std::size_t k1 = o->k1 ? *o->k1 : o->k ? *o->k : 0;
        const std::size_t k2 = o->k2 ? *o->k2 : o->k ? *o->k : 0;
        if (k1 == 0 || k2 == 0) throw UsageError("give --k or both --k1 and --k2");
        GrayImage img = o->input.empty() ? [&] {
            const auto [w, h] = parse_size_spec(o->synthetic);
            return synthetic_image(w, h);
        }() : io::load_image(o->input);
        const Family f = parse_family(o->family);
        const Basis2D basis(SinletBasis(f, o->x0, o->sigma_x), SinletBasis(f, o->y0, o->sigma_y));
        const ImageCoefficients c = image_decompose(img, basis, k1, k2,
                                                    o->allow_aliasing ? AliasPolicy::Allow : AliasPolicy::Enforce);
        if (!o->output.empty()) io::save_image_coefficients(o->output, c, img.width(), img.height());
        const GrayImage restored = image_reconstruct(c, img.width(), img.height());
        if (!o->restored.empty()) io::save_image(o->restored, restored);
        double energy = 0.0;
        for (double v : c.coeffs()) energy += v * v;
        Summary("img-encode")
            .add("family", to_string(f))
            .add("K1", k1)
            .add("K2", k2)
            .add("width", img.width())
            .add("height", img.height())
            .add("dcr", dcr(k1, k2, img.width(), img.height()))
            .add("storage_ratio", storage_ratio(k1, k2, img.width(), img.height()))
            .add("energy", energy)
            .add("psnr", psnr(img, restored))
            .print();
        return 0;
    }});
}

void add_img_decode(CLI::App& app, std::vector<Command>& commands) {
    struct Opts {
        std::string coeffs, output, reference;
        std::optional<std::size_t> width, height;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = app.add_subcommand("img-decode", "image coefficients -> PGM");
    sub->add_option("--coeffs", o->coeffs, "image coefficient file")->required();
    sub->add_option("-o,--output", o->output, "PGM output");
    sub->add_option("--width", o->width, "override the stored width");
    sub->add_option("--height", o->height, "override the stored height");
    sub->add_option("--reference", o->reference, "image to report PSNR against");
    commands.push_back({sub, [o] {
        const io::StoredImageCoefficients stored = io::load_image_coefficients(o->coeffs);
        const std::size_t w = o->width ? *o->width : stored.width;
        const std::size_t h = o->height ? *o->height : stored.height;
        const GrayImage img = image_reconstruct(stored.coeffs, w, h);
        if (!o->output.empty()) io::save_image(o->output, img);
        double energy = 0.0;
        for (double v : stored.coeffs.coeffs()) energy += v * v;
        Summary s("img-decode");
        s.add("K1", stored.coeffs.k1()).add("K2", stored.coeffs.k2()).add("width", w).add("height", h);
        s.add("dcr", dcr(stored.coeffs.k1(), stored.coeffs.k2(), w, h)).add("energy", energy);
        if (!o->reference.empty()) s.add("psnr", psnr(io::load_image(o->reference), img));
        s.print();
        return 0;
    }});
}

}  // namespace

void add_image_commands(CLI::App& app, std::vector<Command>& commands) {
    add_img_encode(app, commands);
    add_img_decode(app, commands);
}

}  // namespace sinlet::cli
