// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#include "sinlet/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "sinlet/error.hpp"

namespace sinlet::io {

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view token, std::size_t line) {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || res.ec != std::errc() || res.ptr != token.data() + token.size())
        throw ParseError("not a number: '" + std::string(token) + "'", line);
    if (!std::isfinite(value)) throw ParseError("non-finite number: '" + std::string(token) + "'", line);
    return value;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Line reader that tracks 1-based line numbers.
class Lines {
public:
    explicit Lines(std::istream& in) : in_(in) {}

    bool next(std::string& out) {
        if (!std::getline(in_, out)) return false;
        ++line_;
        return true;
    }
    std::string require(const char* what) {
        std::string s;
        if (!next(s)) throw ParseError(std::string("unexpected end of file, expected ") + what, line_ + 1);
        return s;
    }
    std::size_t line() const noexcept { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

std::size_t parse_count(std::string_view token, std::size_t line) {
    std::size_t value = 0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || res.ec != std::errc() || res.ptr != token.data() + token.size())
        throw ParseError("not a non-negative integer: '" + std::string(token) + "'", line);
    return value;
}

std::string expect_key(Lines& lines, std::string_view key) {
    const std::string raw = lines.require(std::string(key).c_str());
    const std::string_view s = trim(raw);
    const auto eq = s.find('=');
    if (eq == std::string_view::npos || trim(s.substr(0, eq)) != key)
        throw ParseError("expected '" + std::string(key) + "=<value>'", lines.line());
    return std::string(trim(s.substr(eq + 1)));
}

void expect_magic(Lines& lines, std::string_view magic) {
    const std::string raw = lines.require("a format header");
    std::istringstream hdr{std::string(trim(raw))};
    std::string word, version;
    hdr >> word >> version;
    if (word != magic)
        throw ParseError("missing '" + std::string(magic) + "' header", lines.line());
    if (version != std::to_string(kCoefficientVersion))
        throw ParseError("unsupported format version '" + version + "'", lines.line());
}

template <typename Fn>
auto with_line(std::size_t line, Fn&& fn) {
    // Domain errors raised while building objects from file fields become parse errors.
    try {
        return fn();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), line);
    }
}

Family read_family(Lines& lines) {
    const std::string v = expect_key(lines, "family");
    return with_line(lines.line(), [&] { return parse_family(v); });
}

std::vector<double> read_values(Lines& lines, std::size_t count) {
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::string raw = lines.require("a coefficient");
        out.push_back(parse_double(trim(raw), lines.line()));
    }
    std::string extra;
    while (lines.next(extra))
        if (!trim(extra).empty()) throw ParseError("unexpected trailing content", lines.line());
    return out;
}

}  // namespace

void write_coefficients(std::ostream& out, const CoefficientVector& coeffs) {
    out << kCoefficientMagic << ' ' << kCoefficientVersion << '\n'
        << "family=" << to_string(coeffs.family()) << '\n'
        << "kind=" << to_string(coeffs.kind()) << '\n'
        << "t0=" << format_double(coeffs.center()) << '\n'
        << "sigma=" << format_double(coeffs.width()) << '\n'
        << "N=" << coeffs.size() << '\n';
    for (double c : coeffs.coeffs()) out << format_double(c) << '\n';
}

CoefficientVector read_coefficients(std::istream& in) {
    Lines lines(in);
    expect_magic(lines, kCoefficientMagic);
    const Family family = read_family(lines);
    const std::string kind_text = expect_key(lines, "kind");
    const Kind kind = with_line(lines.line(), [&] { return parse_kind(kind_text); });
    const double t0 = parse_double(expect_key(lines, "t0"), lines.line());
    const double sigma = parse_double(expect_key(lines, "sigma"), lines.line());
    const SinletBasis basis = with_line(lines.line(), [&] { return SinletBasis(family, t0, sigma); });
    const std::size_t n = parse_count(expect_key(lines, "N"), lines.line());
    if (n == 0) throw ParseError("N must be positive", lines.line());
    return CoefficientVector(kind, basis, read_values(lines, n));
}

void write_signal(std::ostream& out, const SampledSignal& signal) {
    out << "# time,value\n";
    for (std::size_t i = 0; i < signal.size(); ++i)
        out << format_double(signal.times()[i]) << ',' << format_double(signal.values()[i]) << '\n';
}

SampledSignal read_signal(std::istream& in) {
    Lines lines(in);
    std::vector<double> t, v;
    std::string raw;
    while (lines.next(raw)) {
        const std::string_view s = trim(raw);
        if (s.empty() || s.front() == '#') continue;
        std::vector<std::string_view> fields;
        std::size_t pos = 0;
        while (pos < s.size()) {
            const auto end = s.find_first_of(", \t", pos);
            const auto token = s.substr(pos, end == std::string_view::npos ? s.npos : end - pos);
            if (!token.empty()) fields.push_back(token);
            if (end == std::string_view::npos) break;
            pos = end + 1;
        }
        if (fields.size() != 2)
            throw ParseError("expected two columns (time, value), found " +
                                 std::to_string(fields.size()),
                             lines.line());
        const double time = parse_double(fields[0], lines.line());
        if (!t.empty() && !(time > t.back()))
            throw ParseError("times must be strictly increasing", lines.line());
        t.push_back(time);
        v.push_back(parse_double(fields[1], lines.line()));
    }
    if (t.size() < 2) throw ParseError("a signal needs at least two samples", lines.line());
    return SampledSignal(std::move(t), std::move(v));
}

void write_image_coefficients(std::ostream& out, const ImageCoefficients& coeffs,
                              std::size_t width, std::size_t height) {
    const Basis2D& b = coeffs.basis();
    out << kImageCoefficientMagic << ' ' << kCoefficientVersion << '\n'
        << "family=" << to_string(b.family()) << '\n'
        << "x0=" << format_double(b.x_axis().center()) << '\n'
        << "sigma_x=" << format_double(b.x_axis().width()) << '\n'
        << "y0=" << format_double(b.y_axis().center()) << '\n'
        << "sigma_y=" << format_double(b.y_axis().width()) << '\n'
        << "K1=" << coeffs.k1() << '\n'
        << "K2=" << coeffs.k2() << '\n'
        << "width=" << width << '\n'
        << "height=" << height << '\n';
    for (double c : coeffs.coeffs()) out << format_double(c) << '\n';
}

StoredImageCoefficients read_image_coefficients(std::istream& in) {
    Lines lines(in);
    expect_magic(lines, kImageCoefficientMagic);
    const Family family = read_family(lines);
    const double x0 = parse_double(expect_key(lines, "x0"), lines.line());
    const double sx = parse_double(expect_key(lines, "sigma_x"), lines.line());
    const SinletBasis bx = with_line(lines.line(), [&] { return SinletBasis(family, x0, sx); });
    const double y0 = parse_double(expect_key(lines, "y0"), lines.line());
    const double sy = parse_double(expect_key(lines, "sigma_y"), lines.line());
    const SinletBasis by = with_line(lines.line(), [&] { return SinletBasis(family, y0, sy); });
    const std::size_t k1 = parse_count(expect_key(lines, "K1"), lines.line());
    const std::size_t k2 = parse_count(expect_key(lines, "K2"), lines.line());
    if (k1 == 0 || k2 == 0) throw ParseError("K1 and K2 must be positive", lines.line());
    const std::size_t w = parse_count(expect_key(lines, "width"), lines.line());
    const std::size_t h = parse_count(expect_key(lines, "height"), lines.line());
    if (w == 0 || h == 0) throw ParseError("width and height must be positive", lines.line());
    std::vector<double> values = read_values(lines, k1 * k2);
    return {ImageCoefficients(Basis2D(bx, by), k1, k2, std::move(values)), w, h};
}

namespace {

// Next header token of a PNM file, skipping whitespace and '#' comments.
std::string pnm_token(std::istream& in) {
    std::string tok;
    int ch;
    while ((ch = in.get()) != EOF) {
        if (ch == '#') {
            while ((ch = in.get()) != EOF && ch != '\n') {
            }
            continue;
        }
        if (std::isspace(ch)) {
            if (!tok.empty()) return tok;
            continue;
        }
        tok.push_back(static_cast<char>(ch));
    }
    if (tok.empty()) throw ParseError("PNM header is truncated", 0);
    return tok;
}

std::size_t pnm_number(std::istream& in, const char* what) {
    const std::string tok = pnm_token(in);
    std::size_t v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || v == 0)
        throw ParseError(std::string("PNM header: bad ") + what + " '" + tok + "'", 0);
    return v;
}

}  // namespace

GrayImage read_pnm(std::istream& in) {
    const std::string magic = pnm_token(in);
    if (magic != "P5" && magic != "P6")
        throw ParseError("unsupported image format '" + magic + "' (expected binary P5 or P6)", 0);
    const std::size_t w = pnm_number(in, "width");
    const std::size_t h = pnm_number(in, "height");
    const std::size_t maxval = pnm_number(in, "maxval");
    if (maxval > 65535) throw ParseError("PNM maxval exceeds 65535", 0);
    const std::size_t channels = magic == "P6" ? 3 : 1;
    const std::size_t sample_bytes = maxval > 255 ? 2 : 1;
    std::vector<unsigned char> raw(w * h * channels * sample_bytes);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size())
        throw ParseError("PNM pixel data is truncated", 0);

    auto sample = [&](std::size_t idx) {
        const double v = sample_bytes == 2 ? 256.0 * raw[2 * idx] + raw[2 * idx + 1] : raw[idx];
        return std::clamp(v / static_cast<double>(maxval), 0.0, 1.0);
    };
    std::vector<double> px(w * h);
    for (std::size_t i = 0; i < w * h; ++i) {
        px[i] = channels == 1 ? sample(i)
                              : 0.299 * sample(3 * i) + 0.587 * sample(3 * i + 1) +
                                    0.114 * sample(3 * i + 2);
    }
    return GrayImage(w, h, std::move(px));
}

void write_pgm(std::ostream& out, const GrayImage& image) {
    out << "P5\n" << image.width() << ' ' << image.height() << "\n255\n";
    std::vector<unsigned char> bytes(image.pixels().size());
    for (std::size_t i = 0; i < bytes.size(); ++i)
        bytes[i] = static_cast<unsigned char>(std::lround(std::clamp(image.pixels()[i], 0.0, 1.0) * 255.0));
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

namespace {

std::ifstream open_in(const std::string& path, bool binary = false) {
    std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
    if (!in) throw ParseError("cannot open '" + path + "' for reading", 0);
    return in;
}

std::ofstream open_out(const std::string& path, bool binary = false) {
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    if (!out) throw ParseError("cannot open '" + path + "' for writing", 0);
    return out;
}

template <typename Fn>
auto in_file(const std::string& path, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), 0);
    }
}

}  // namespace

CoefficientVector load_coefficients(const std::string& path) {
    auto in = open_in(path);
    return in_file(path, [&] { return read_coefficients(in); });
}

void save_coefficients(const std::string& path, const CoefficientVector& coeffs) {
    auto out = open_out(path);
    write_coefficients(out, coeffs);
}

SampledSignal load_signal(const std::string& path) {
    auto in = open_in(path);
    return in_file(path, [&] { return read_signal(in); });
}

void save_signal(const std::string& path, const SampledSignal& signal) {
    auto out = open_out(path);
    write_signal(out, signal);
}

StoredImageCoefficients load_image_coefficients(const std::string& path) {
    auto in = open_in(path);
    return in_file(path, [&] { return read_image_coefficients(in); });
}

void save_image_coefficients(const std::string& path, const ImageCoefficients& coeffs,
                             std::size_t width, std::size_t height) {
    auto out = open_out(path);
    write_image_coefficients(out, coeffs, width, height);
}

GrayImage load_image(const std::string& path) {
    auto in = open_in(path, true);
    return in_file(path, [&] { return read_pnm(in); });
}

void save_image(const std::string& path, const GrayImage& image) {
    auto out = open_out(path, true);
    write_pgm(out, image);
}

}  // namespace sinlet::io
