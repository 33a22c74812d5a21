// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include "sinlet/analysis.hpp"
#include "sinlet/error.hpp"
#include "sinlet/io.hpp"

namespace sinlet::cli {

namespace {

bool parse_size(std::string_view s, std::size_t& out) {
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size() && !s.empty();
}

// Options naming a basis. Center and width are estimated from the signal when omitted.
struct BasisOptions {
    std::string family = "logistic";
    std::optional<double> t0;
    std::optional<double> sigma;
    double width_factor = 1.5;

    void attach(CLI::App* app) {
        app->add_option("--family", family, "phase family: erf or logistic")->capture_default_str();
        app->add_option("--t0", t0, "basis center (estimated from the signal when omitted)");
        app->add_option("--sigma", sigma, "basis width (estimated from the signal when omitted)");
        app->add_option("--width-factor", width_factor, "c in sigma = c * RMS duration, 1..2")
            ->capture_default_str();
    }

    SinletBasis resolve(const SampledSignal* signal) const {
        const Family f = parse_family(family);
        if ((!t0 || !sigma) && !signal)
            throw UsageError("--t0 and --sigma are required without an input signal");
        const double c = t0 ? *t0 : estimate_center(*signal);
        const double s = sigma ? *sigma : estimate_width(*signal, width_factor);
        return SinletBasis(f, c, s);
    }
};

struct NoiseOptions {
    double sd = 0.0;
    std::uint64_t seed = 0;

    void attach(CLI::App* app) {
        app->add_option("--noise-sigma", sd, "add white Gaussian noise of this standard deviation")
            ->check(CLI::NonNegativeNumber);
        app->add_option("--seed", seed, "noise seed")->capture_default_str();
    }
};

std::vector<double> default_grid(const SinletBasis& b, double half_widths, std::size_t n) {
    return linspace(b.center() - half_widths * b.width(), b.center() + half_widths * b.width(), n);
}

void write_columns(const std::string& path, const std::vector<std::string>& names,
                   const std::vector<std::span<const double>>& columns) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing", 0);
    out << '#';
    for (std::size_t c = 0; c < names.size(); ++c) out << (c ? "," : " ") << names[c];
    out << '\n';
    for (std::size_t r = 0; r < columns.front().size(); ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << io::format_double(columns[c][r]);
        out << '\n';
    }
}

// Samples of the input inside the basis window and their reconstruction.
double window_residual(const SampledSignal& signal, const CoefficientVector& c) {
    const double lo = c.center() - kWindowHalfWidth * c.width();
    const double hi = c.center() + kWindowHalfWidth * c.width();
    double s = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < signal.size(); ++i) {
        const double t = signal.times()[i];
        if (t < lo || t > hi) continue;
        const double d = signal.values()[i] - c.evaluate(t);
        s += d * d;
        ++n;
    }
    return n ? std::sqrt(s / static_cast<double>(n)) : 0.0;
}

// --input signal or --coeffs file; signals are decomposed with the given kind and N.
struct CoefficientSource {
    std::string input;
    std::string coeffs;
    std::optional<std::size_t> n;
    std::string kind = "sin";
    BasisOptions basis;
    bool allow_aliasing = false;

    void attach(CLI::App* app) {
        auto* in = app->add_option("--input", input, "signal file (time,value)");
        auto* co = app->add_option("--coeffs", coeffs, "coefficient file");
        in->excludes(co);
        app->add_option("--n", n, "number of terms when decomposing --input");
        app->add_option("--kind", kind, "sin or cos")->capture_default_str();
        app->add_flag("--allow-aliasing", allow_aliasing, "skip the sampling-density guard");
        basis.attach(app);
    }

    std::pair<CoefficientVector, std::optional<SampledSignal>> load() const {
        if (!coeffs.empty()) return {io::load_coefficients(coeffs), std::nullopt};
        if (input.empty()) throw UsageError("one of --input or --coeffs is required");
        if (!n) throw UsageError("--n is required with --input");
        SampledSignal signal = io::load_signal(input);
        const SinletBasis b = basis.resolve(&signal);
        CoefficientVector c = decompose(signal, b, *n, parse_kind(kind),
                                        allow_aliasing ? AliasPolicy::Allow : AliasPolicy::Enforce);
        return {std::move(c), std::move(signal)};
    }
};

void add_basis(CLI::App& app, std::vector<Command>& commands) {
    struct Opts {
        std::string family = "logistic";
        double t0 = 0.0;
        double sigma = 1.0;
        std::string n = "0..7";
        std::string grid;
        std::string output;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = app.add_subcommand("basis", "tabulate Sl, Cl, nu, Omega^2 and |Psi| on a grid");
    sub->add_option("--family", o->family)->capture_default_str();
    sub->add_option("--t0", o->t0)->capture_default_str();
    sub->add_option("--sigma", o->sigma)->capture_default_str();
    sub->add_option("--n", o->n, "indices, e.g. 0..7 or 0,2,5")->capture_default_str();
    sub->add_option("--grid", o->grid, "a:b:count (default t0 +- 8 sigma, 801 points)");
    sub->add_option("-o,--output", o->output, "CSV output");
    commands.push_back({sub, [o] {
        const SinletBasis b(parse_family(o->family), o->t0, o->sigma);
        const std::vector<std::size_t> idx = parse_index_list(o->n);
        const std::vector<double> grid = o->grid.empty() ? default_grid(b, 8.0, 801) : parse_grid(o->grid);
        std::vector<std::string> names{"t"};
        std::vector<std::vector<double>> cols;
        Summary s("basis");
        s.add("family", to_string(b.family())).add("t0", b.center()).add("sigma", b.width());
        s.add("terms", idx.size()).add("points", grid.size());
        for (std::size_t n : idx) {
            std::vector<double> sl, cl, nu, om, ab;
            for (double t : grid) {
                sl.push_back(b.sinlet(n, t));
                cl.push_back(b.coslet(n, t));
                nu.push_back(b.inst_frequency(n, t));
                om.push_back(omega_squared_closed_form(b, n, t));
                ab.push_back(std::abs(b.psi(n, t)));
            }
            s.add("peak_nu" + std::to_string(n), *std::max_element(nu.begin(), nu.end()));
            const std::string k = std::to_string(n);
            for (const char* p : {"Sl", "Cl", "nu", "omega2_", "abs_psi"}) names.push_back(p + k);
            for (auto* v : {&sl, &cl, &nu, &om, &ab}) cols.push_back(std::move(*v));
        }
        if (!o->output.empty()) {
            std::vector<std::span<const double>> spans{grid};
            for (const auto& c : cols) spans.emplace_back(c);
            write_columns(o->output, names, spans);
        }
        s.print();
        return 0;
    }});
}

void add_decompose(CLI::App& app, std::vector<Command>& commands) {
    struct Opts {
        std::string input, output, kind = "sin";
        std::optional<std::size_t> n;
        std::optional<double> nu_max, t_max;
        bool allow_aliasing = false;
        BasisOptions basis;
        NoiseOptions noise;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = app.add_subcommand("decompose", "signal -> sinlet or coslet coefficients");
    sub->add_option("--input", o->input, "signal file (time,value)")->required();
    sub->add_option("-o,--output", o->output, "coefficient file");
    sub->add_option("--n", o->n, "number of terms");
    sub->add_option("--nu-max", o->nu_max, "highest frequency of interest, Hz (with --t-max, sets N)");
    sub->add_option("--t-max", o->t_max, "time offset where nu-max must still be reached");
    sub->add_option("--kind", o->kind, "sin or cos")->capture_default_str();
    sub->add_flag("--allow-aliasing", o->allow_aliasing, "skip the sampling-density guard");
    o->basis.attach(sub);
    o->noise.attach(sub);
    commands.push_back({sub, [o] {
        const SampledSignal signal = with_noise(io::load_signal(o->input), o->noise.sd, o->noise.seed);
        const SinletBasis b = o->basis.resolve(&signal);
        std::size_t n = 0;
        if (o->n) n = *o->n;
        else if (o->nu_max && o->t_max) n = estimate_nmax(b, *o->nu_max, *o->t_max) + 1;
        else throw UsageError("give --n, or both --nu-max and --t-max");
        const CoefficientVector c = decompose(signal, b, n, parse_kind(o->kind),
                                              o->allow_aliasing ? AliasPolicy::Allow : AliasPolicy::Enforce);
        if (!o->output.empty()) io::save_coefficients(o->output, c);
        Summary("decompose")
            .add("kind", to_string(c.kind()))
            .add("family", to_string(b.family()))
            .add("N", c.size())
            .add("t0", b.center())
            .add("sigma", b.width())
            .add("energy", c.energy())
            .add("signal_energy", signal.energy())
            .add("residual", window_residual(signal, c))
            .print();
        return 0;
    }});
}

void add_reconstruct(CLI::App& app, std::vector<Command>& commands) {
    struct Opts {
        std::string coeffs, output, grid, times_from, reference;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = app.add_subcommand("reconstruct", "coefficients -> signal");
    sub->add_option("--coeffs", o->coeffs, "coefficient file")->required();
    sub->add_option("-o,--output", o->output, "signal file");
    auto* g = sub->add_option("--grid", o->grid, "a:b:count");
    sub->add_option("--times-from", o->times_from, "take the time axis from this signal file")->excludes(g);
    sub->add_option("--reference", o->reference, "signal to report the RMS residual against");
    commands.push_back({sub, [o] {
        const CoefficientVector c = io::load_coefficients(o->coeffs);
        std::optional<SampledSignal> ref;
        if (!o->reference.empty()) ref = io::load_signal(o->reference);
        std::vector<double> grid;
        if (!o->grid.empty()) grid = parse_grid(o->grid);
        else if (!o->times_from.empty()) {
            const auto t = io::load_signal(o->times_from).times();
            grid.assign(t.begin(), t.end());
        } else if (ref) grid.assign(ref->times().begin(), ref->times().end());
        else grid = default_grid(c.basis(), kWindowHalfWidth, 2001);
        const SampledSignal out = reconstruct(c, grid);
        if (!o->output.empty()) io::save_signal(o->output, out);
        Summary s("reconstruct");
        s.add("kind", to_string(c.kind())).add("N", c.size()).add("points", out.size()).add("energy", c.energy());
        if (ref) s.add("residual", rms(ref->values(), synthesize(c, ref->times())));
        s.print();
        return 0;
    }});
}

void add_denoise(CLI::App& app, std::vector<Command>& commands) {
    struct Opts {
        std::string input, output;
        std::size_t n = 0;
        BasisOptions basis;
        NoiseOptions noise;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = app.add_subcommand("denoise", "project a signal onto its first N sinlets");
    sub->add_option("--input", o->input, "signal file")->required();
    sub->add_option("--n", o->n, "number of sinlets kept")->required();
    sub->add_option("-o,--output", o->output, "signal file");
    o->basis.attach(sub);
    o->noise.attach(sub);
    commands.push_back({sub, [o] {
        const SampledSignal signal = with_noise(io::load_signal(o->input), o->noise.sd, o->noise.seed);
        const SinletBasis b = o->basis.resolve(&signal);
        const SampledSignal out = denoise(signal, b, o->n);
        if (!o->output.empty()) io::save_signal(o->output, out);
        Summary("denoise")
            .add("family", to_string(b.family()))
            .add("N", o->n)
            .add("t0", b.center())
            .add("sigma", b.width())
            .add("energy", out.energy())
            .add("residual", rms(out.values(), signal.values()))
            .print();
        return 0;
    }});
}

void add_envelope(CLI::App& app, std::vector<Command>& commands) {
    struct Opts {
        CoefficientSource source;
        std::string grid, output;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = app.add_subcommand("envelope", "|sum c_n Psi_n| from sinlet or coslet coefficients");
    o->source.attach(sub);
    sub->add_option("--grid", o->grid, "a:b:count (default: the input's time axis)");
    sub->add_option("-o,--output", o->output, "CSV: t, signal, envelope");
    commands.push_back({sub, [o] {
        auto [c, signal] = o->source.load();
        std::vector<double> grid;
        if (!o->grid.empty()) grid = parse_grid(o->grid);
        else if (signal) grid.assign(signal->times().begin(), signal->times().end());
        else grid = default_grid(c.basis(), kWindowHalfWidth, 2001);
        const SampledSignal env = envelope(c, grid);
        const std::vector<double> sig = synthesize(c, grid);
        if (!o->output.empty()) write_columns(o->output, {"t", "signal", "envelope"}, {grid, sig, env.values()});
        Summary("envelope")
            .add("kind", to_string(c.kind()))
            .add("N", c.size())
            .add("points", grid.size())
            .add("energy", c.energy())
            .add("peak", *std::max_element(env.values().begin(), env.values().end()))
            .print();
        return 0;
    }});
}

void add_differentiate(CLI::App& app, std::vector<Command>& commands) {
    struct Opts {
        CoefficientSource source;
        std::string grid, output;
        bool closed_form = false;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = app.add_subcommand("differentiate", "derivative of the sinlet expansion");
    o->source.attach(sub);
    sub->add_option("--grid", o->grid, "a:b:count (default: the input's time axis)");
    sub->add_option("-o,--output", o->output, "signal file of the derivative");
    sub->add_flag("--closed-form", o->closed_form, "use the erf-family specialization");
    commands.push_back({sub, [o] {
        auto [c, signal] = o->source.load();
        const std::string_view kind = to_string(c.kind());
        if (c.kind() == Kind::Cos) c = cos_to_sin(c);
        std::vector<double> grid;
        if (!o->grid.empty()) grid = parse_grid(o->grid);
        else if (signal) grid.assign(signal->times().begin(), signal->times().end());
        else grid = default_grid(c.basis(), kWindowHalfWidth, 2001);
        const SampledSignal d = o->closed_form ? differentiate_erf(c, grid) : differentiate(c, grid);
        if (!o->output.empty()) io::save_signal(o->output, d);
        double peak = 0.0;
        for (double v : d.values()) peak = std::max(peak, std::abs(v));
        Summary("differentiate")
            .add("kind", kind)
            .add("N", c.size())
            .add("points", grid.size())
            .add("energy", d.energy())
            .add("max_abs", peak)
            .print();
        return 0;
    }});
}

void add_resample(CLI::App& app, std::vector<Command>& commands) {
    struct Opts {
        std::string input, output, coeffs_out, grid;
        std::size_t k = 0;
        BasisOptions basis;
        NoiseOptions noise;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = app.add_subcommand("resample", "least-squares sinlet fit of non-uniform samples");
    sub->add_option("--input", o->input, "samples (time,value), any spacing")->required();
    sub->add_option("--k", o->k, "number of sinlets fitted")->required();
    sub->add_option("-o,--output", o->output, "reconstruction on --grid");
    sub->add_option("--coeffs-out", o->coeffs_out, "coefficient file");
    sub->add_option("--grid", o->grid, "a:b:count (default: sample span, 1001 points)");
    o->basis.attach(sub);
    o->noise.attach(sub);
    commands.push_back({sub, [o] {
        const SampledSignal samples = with_noise(io::load_signal(o->input), o->noise.sd, o->noise.seed);
        const SinletBasis b = o->basis.resolve(&samples);
        const CoefficientVector c = fit_nonuniform(samples, b, o->k);
        if (!o->coeffs_out.empty()) io::save_coefficients(o->coeffs_out, c);
        if (!o->output.empty()) {
            const std::vector<double> grid =
                o->grid.empty() ? linspace(samples.times().front(), samples.times().back(), 1001) : parse_grid(o->grid);
            io::save_signal(o->output, reconstruct(c, grid));
        }
        Summary("resample")
            .add("family", to_string(b.family()))
            .add("K", c.size())
            .add("samples", samples.size())
            .add("t0", b.center())
            .add("sigma", b.width())
            .add("energy", c.energy())
            .add("residual", rms(samples.values(), synthesize(c, samples.times())))
            .print();
        return 0;
    }});
}

void add_doppler(CLI::App& app, std::vector<Command>& commands) {
    struct Opts {
        std::string coeffs, output, signal_out, grid;
        DopplerParams params;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = app.add_subcommand("doppler", "echo coefficients for a moving point target");
    sub->add_option("--coeffs", o->coeffs, "transmitted waveform (sinlet coefficients)")->required();
    sub->add_option("--speed", o->params.propagation_speed, "propagation speed c, m/s")->required();
    sub->add_option("--velocity", o->params.radial_velocity, "radial velocity v, m/s (receding > 0)")
        ->capture_default_str();
    sub->add_option("--range", o->params.range, "target range, m")->capture_default_str();
    sub->add_option("-o,--output", o->output, "echo coefficient file");
    sub->add_option("--signal-out", o->signal_out, "echo samples on --grid");
    sub->add_option("--grid", o->grid, "a:b:count (default: echo window)");
    commands.push_back({sub, [o] {
        const CoefficientVector w = io::load_coefficients(o->coeffs);
        const CoefficientVector e = doppler_shift(w, o->params);
        if (!o->output.empty()) io::save_coefficients(o->output, e);
        if (!o->signal_out.empty()) {
            const std::vector<double> grid = o->grid.empty() ? default_grid(e.basis(), kWindowHalfWidth, 2001)
                                                             : parse_grid(o->grid);
            io::save_signal(o->signal_out, reconstruct(e, grid));
        }
        Summary("doppler")
            .add("N", e.size())
            .add("alpha", o->params.alpha())
            .add("tau", o->params.delay())
            .add("t0", e.center())
            .add("sigma", e.width())
            .add("energy", e.energy())
            .print();
        return 0;
    }});
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
    const auto bad = [&] { return UsageError("grid must look like a:b:count with a < b and count >= 2, got '" + spec + "'"); };
    const std::size_t p1 = spec.find(':');
    const std::size_t p2 = p1 == std::string::npos ? p1 : spec.find(':', p1 + 1);
    if (p2 == std::string::npos) throw bad();
    double a = 0.0, b = 0.0;
    std::size_t n = 0;
    try {
        a = io::parse_double(std::string_view(spec).substr(0, p1));
        b = io::parse_double(std::string_view(spec).substr(p1 + 1, p2 - p1 - 1));
    } catch (const ParseError&) {
        throw bad();
    }
    if (!parse_size(std::string_view(spec).substr(p2 + 1), n) || n < 2 || !(a < b)) throw bad();
    return linspace(a, b, n);
}

std::vector<std::size_t> parse_index_list(const std::string& spec) {
    std::vector<std::size_t> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::size_t dots = item.find("..");
        std::size_t lo = 0, hi = 0;
        const bool ok = dots == std::string::npos
                            ? parse_size(item, lo) && (hi = lo, true)
                            : parse_size(std::string_view(item).substr(0, dots), lo) &&
                                  parse_size(std::string_view(item).substr(dots + 2), hi) && lo <= hi;
        if (!ok) throw UsageError("bad index list '" + spec + "'");
        for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
    }
    if (out.empty()) throw UsageError("index list is empty");
    return out;
}

Summary::Summary(std::string_view op) { fields_.emplace_back("op", std::string(op)); }

Summary& Summary::add(std::string_view key, double value) {
    fields_.emplace_back(std::string(key), io::format_double(value));
    return *this;
}

Summary& Summary::add(std::string_view key, std::size_t value) {
    fields_.emplace_back(std::string(key), std::to_string(value));
    return *this;
}

Summary& Summary::add(std::string_view key, std::string_view value) {
    fields_.emplace_back(std::string(key), std::string(value));
    return *this;
}

std::string Summary::str() const {
    std::string out;
    for (const auto& [k, v] : fields_) out += (out.empty() ? "" : " ") + k + "=" + v;
    return out;
}

void Summary::print() const { std::cout << str() << std::endl; }

SampledSignal with_noise(const SampledSignal& signal, double sd, std::uint64_t seed) {
    if (sd == 0.0) return signal;
    if (!(sd > 0.0) || !std::isfinite(sd)) throw ParameterError("noise standard deviation must be non-negative");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, sd);
    std::vector<double> v(signal.values().begin(), signal.values().end());
    for (double& x : v) x += gauss(rng);
    return SampledSignal(std::vector<double>(signal.times().begin(), signal.times().end()), std::move(v));
}

double rms(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
    return std::sqrt(s / static_cast<double>(x.size()));
}

void add_signal_commands(CLI::App& app, std::vector<Command>& commands) {
    add_basis(app, commands);
    add_decompose(app, commands);
    add_reconstruct(app, commands);
    add_denoise(app, commands);
    add_envelope(app, commands);
    add_differentiate(app, commands);
    add_resample(app, commands);
    add_doppler(app, commands);
}

}  // namespace sinlet::cli
