// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "sinlet/analysis.hpp"
#include "sinlet/image.hpp"
#include "sinlet/io.hpp"

using namespace sinlet;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int status;
    std::string out;
    std::map<std::string, std::string> fields;

    double num(const std::string& key) const {
        auto it = fields.find(key);
        if (it == fields.end()) {
            ADD_FAILURE() << "missing " << key << " in: " << out;
            return std::nan("");
        }
        return std::stod(it->second);
    }
};

CliResult run(const std::string& args) {
    const std::string cmd = std::string(SINLET_CLI_PATH) + " " + args + " 2>/dev/null";
    std::FILE* p = popen(cmd.c_str(), "r");
    CliResult r{-1, {}, {}};
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), p)) r.out += buf.data();
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    std::istringstream first(r.out.substr(0, r.out.find('\n')));
    std::string kv;
    while (first >> kv) {
        const auto eq = kv.find('=');
        if (eq != std::string::npos) r.fields[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("sinlet_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, DecomposeThenReconstructRoundTrip) {
    oracle::Gen g(1);
    const SinletBasis b(Family::Logistic, 0.0, 1.0);
    const CoefficientVector truth(Kind::Sin, b, g.vector(16));
    io::save_signal(path("u.csv"), reconstruct(truth, linspace(-10, 10, 4001)));

    const CliResult d = run("decompose --input " + path("u.csv") + " --n 16 --t0 0 --sigma 1 -o " + path("c.txt"));
    ASSERT_EQ(d.status, 0) << d.out;
    EXPECT_EQ(d.fields.at("op"), "decompose");
    EXPECT_EQ(d.fields.at("N"), "16");
    EXPECT_NEAR(d.num("energy"), truth.energy(), 1e-6 * truth.energy());

    const CliResult r = run("reconstruct --coeffs " + path("c.txt") + " --reference " + path("u.csv") + " -o " + path("r.csv"));
    ASSERT_EQ(r.status, 0) << r.out;
    EXPECT_LT(r.num("residual"), 1e-4);
    const CoefficientVector back = io::load_coefficients(path("c.txt"));
    for (std::size_t n = 0; n < 16; ++n) EXPECT_NEAR(back[n], truth[n], 1e-4);
}

TEST_F(Cli, DecomposeChoosesNFromFrequencyAndEstimatesTheBasis) {
    const auto t = linspace(-10, 10, 2001);
    std::vector<double> v(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) v[i] = std::exp(-t[i] * t[i] / 2) * std::sin(2 * t[i]);
    io::save_signal(path("u.csv"), SampledSignal(t, v));
    const SampledSignal u = io::load_signal(path("u.csv"));
    const SinletBasis b(Family::Erf, estimate_center(u), estimate_width(u, 1.5));
    const CliResult r = run("decompose --family erf --input " + path("u.csv") + " --nu-max 1 --t-max 2");
    ASSERT_EQ(r.status, 0) << r.out;
    EXPECT_EQ(std::stoul(r.fields.at("N")), estimate_nmax(b, 1.0, 2.0) + 1);
    EXPECT_DOUBLE_EQ(r.num("sigma"), b.width());
    EXPECT_EQ(run("decompose --input " + path("u.csv")).status, 2);
}

TEST_F(Cli, ResampleNoiselessFigureTwelveSetup) {
    oracle::Gen g(2);
    const SinletBasis b(Family::Logistic, 0.0, 1.0);
    const CoefficientVector truth(Kind::Sin, b, g.vector(32));
    std::vector<double> t(150);
    for (double& x : t) x = g.uniform(-5, 5);
    std::sort(t.begin(), t.end());
    io::save_signal(path("s.csv"), reconstruct(truth, t));
    const CliResult r = run("resample --input " + path("s.csv") + " --k 32 --t0 0 --sigma 1 --coeffs-out " + path("c.txt") +
                      " -o " + path("dense.csv"));
    ASSERT_EQ(r.status, 0) << r.out;
    EXPECT_LT(r.num("residual"), 1e-8);
    EXPECT_EQ(r.fields.at("K"), "32");
    const SampledSignal dense = io::load_signal(path("dense.csv"));
    double worst = 0.0;
    for (std::size_t i = 0; i < dense.size(); ++i)
        worst = std::max(worst, std::abs(dense.values()[i] - truth.evaluate(dense.times()[i])));
    EXPECT_LT(worst, 1e-8);
}

TEST_F(Cli, ImageEncodeReportsDcrAndGuardsAliasing) {
    const CliResult guarded = run("img-encode --synthetic 281x231 --k 200");
    EXPECT_EQ(guarded.status, 5);
    const CliResult r = run("img-encode --synthetic 281x231 --k 200 --allow-aliasing -o " + path("ic.txt"));
    ASSERT_EQ(r.status, 0) << r.out;
    EXPECT_EQ(std::round(r.num("dcr") * 1e4) / 1e4, 0.6162);
    EXPECT_EQ(r.fields.at("width"), "281");
    const CliResult d = run("img-decode --coeffs " + path("ic.txt") + " -o " + path("out.pgm"));
    ASSERT_EQ(d.status, 0) << d.out;
    const GrayImage img = io::load_image(path("out.pgm"));
    EXPECT_EQ(img.width(), 281u);
    EXPECT_EQ(img.height(), 231u);
}

TEST_F(Cli, ImageRoundTripThroughFiles) {
    std::vector<double> px(32 * 24);
    oracle::Gen g(3);
    for (double& p : px) p = std::round(g.uniform(0, 1) * 255) / 255;
    io::save_image(path("in.pgm"), GrayImage(32, 24, px));
    const CliResult e = run("img-encode --input " + path("in.pgm") + " --k1 6 --k2 5 --restored " + path("a.pgm") + " -o " +
                      path("c.txt"));
    ASSERT_EQ(e.status, 0) << e.out;
    const CliResult d = run("img-decode --coeffs " + path("c.txt") + " -o " + path("b.pgm"));
    ASSERT_EQ(d.status, 0);
    EXPECT_EQ(slurp(path("a.pgm")), slurp(path("b.pgm")));
    EXPECT_EQ(e.fields.at("K1"), "6");
    EXPECT_DOUBLE_EQ(e.num("dcr"), 30.0 / 768.0);
}

TEST_F(Cli, BasisTable) {
    const CliResult r = run("basis --family logistic --t0 0 --sigma 2 --n 0..3 -o " + path("b.csv"));
    ASSERT_EQ(r.status, 0) << r.out;
    for (int n = 0; n < 4; ++n) EXPECT_NEAR(r.num("peak_nu" + std::to_string(n)), (n + 1) / 16.0, 1e-12);
    std::ifstream in(path("b.csv"));
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header.rfind("# t,Sl0,Cl0,nu0,omega2_0,abs_psi0,Sl1,", 0), 0u) << header;
    std::size_t rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    EXPECT_EQ(rows, 801u);

    const CliResult fig1 = run("basis --family erf --t0 0 --sigma 2 --n 0..7");
    EXPECT_EQ(fig1.status, 0);
    EXPECT_EQ(fig1.fields.at("terms"), "8");
}

TEST_F(Cli, ExitCodesByErrorClass) {
    EXPECT_EQ(run("--help").status, 0);
    EXPECT_EQ(run("decompose --help").status, 0);
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("basis --n ''").status, 2);
    EXPECT_EQ(run("basis --grid 0:1").status, 2);
    EXPECT_EQ(run("basis --frobnicate").status, 2);
    EXPECT_EQ(run("decompose --input " + path("missing.csv") + " --n 3").status, 3);

    std::ofstream(path("bad.csv")) << "0,1\n1,2,3\n";
    EXPECT_EQ(run("denoise --input " + path("bad.csv") + " --n 2").status, 3);

    io::save_coefficients(path("c.txt"), CoefficientVector(Kind::Sin, SinletBasis(Family::Logistic, 0, 1), {1.0}));
    EXPECT_EQ(run("doppler --coeffs " + path("c.txt") + " --speed 1500 --velocity 2000").status, 4);
    EXPECT_EQ(run("basis --sigma -1").status, 4);
    EXPECT_EQ(run("differentiate --closed-form --coeffs " + path("c.txt")).status, 4);

    io::save_signal(path("u.csv"), SampledSignal(linspace(-10, 10, 201), std::vector<double>(201, 1.0)));
    EXPECT_EQ(run("decompose --input " + path("u.csv") + " --n 50 --t0 0 --sigma 1").status, 5);
    io::save_signal(path("tail.csv"), SampledSignal(linspace(60, 70, 50), std::vector<double>(50, 1.0)));
    EXPECT_EQ(run("resample --family erf --input " + path("tail.csv") + " --k 4 --t0 0 --sigma 1").status, 5);
}

TEST_F(Cli, DeterministicGivenSeed) {
    io::save_signal(path("u.csv"), SampledSignal(linspace(-10, 10, 1001), std::vector<double>(1001, 0.0)));
    const std::string cmd = "denoise --input " + path("u.csv") + " --n 8 --t0 0 --sigma 1 --noise-sigma 0.1 --seed 42 -o ";
    const CliResult a = run(cmd + path("a.csv"));
    const CliResult b = run(cmd + path("b.csv"));
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
    const CliResult c = run("denoise --input " + path("u.csv") + " --n 8 --t0 0 --sigma 1 --noise-sigma 0.1 --seed 43");
    EXPECT_NE(a.fields.at("energy"), c.fields.at("energy"));
}

TEST_F(Cli, DopplerEnvelopeAndDifferentiate) {
    const SinletBasis b(Family::Erf, 0.0, 0.5);
    const CoefficientVector w(Kind::Sin, b, {0.3, -1.0, 0.5});
    io::save_coefficients(path("w.txt"), w);
    const CliResult d = run("doppler --coeffs " + path("w.txt") + " --speed 1500 --velocity 15 --range 750 -o " + path("e.txt"));
    ASSERT_EQ(d.status, 0) << d.out;
    EXPECT_NEAR(d.num("alpha"), 1485.0 / 1515.0, 1e-15);
    EXPECT_EQ(d.num("tau"), 1.0);
    EXPECT_NEAR(d.num("energy"), w.energy(), 1e-15);
    EXPECT_EQ(io::load_coefficients(path("e.txt")), doppler_shift(w, DopplerParams{1500, 15, 750}));

    const CliResult env = run("envelope --coeffs " + path("w.txt") + " --grid -3:3:601 -o " + path("env.csv"));
    ASSERT_EQ(env.status, 0);
    const SampledSignal lib = envelope(w, linspace(-3, 3, 601));
    EXPECT_DOUBLE_EQ(env.num("peak"), *std::max_element(lib.values().begin(), lib.values().end()));

    const CliResult a = run("differentiate --coeffs " + path("w.txt") + " --grid -3:3:61 -o " + path("a.csv"));
    const CliResult c = run("differentiate --closed-form --coeffs " + path("w.txt") + " --grid -3:3:61 -o " + path("c.csv"));
    ASSERT_EQ(a.status, 0);
    ASSERT_EQ(c.status, 0);
    const SampledSignal da = io::load_signal(path("a.csv")), dc = io::load_signal(path("c.csv"));
    for (std::size_t i = 0; i < da.size(); ++i) EXPECT_NEAR(da.values()[i], dc.values()[i], 1e-10);
}

TEST_F(Cli, DemoExperimentsPassTheirGates) {
    const CliResult r = run("demo --experiment resample --out-dir " + path("demo"));
    ASSERT_EQ(r.status, 0) << r.out;
    EXPECT_EQ(r.fields.at("gate"), "pass");
    EXPECT_TRUE(fs::exists(path("demo") + "/fig12_reconstruction.csv"));
    EXPECT_EQ(run("demo --experiment nope").status, 2);
}
