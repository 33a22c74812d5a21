// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sinlet/transform.hpp"

namespace sinlet::cli {

/// A registered subcommand and the action to run once it has parsed.
struct Command {
    CLI::App* app;
    std::function<int()> run;
};

void add_signal_commands(CLI::App& app, std::vector<Command>& commands);
void add_image_commands(CLI::App& app, std::vector<Command>& commands);
void add_demo_command(CLI::App& app, std::vector<Command>& commands);

/// "a:b:n" → n evenly spaced points. UsageError on anything else.
std::vector<double> parse_grid(const std::string& spec);

/// "0..7", "0,2,5", "1..3,9". UsageError when empty or malformed.
std::vector<std::size_t> parse_index_list(const std::string& spec);

/// One line of space-separated key=value pairs on stdout, starting with op=<name>.
class Summary {
public:
    explicit Summary(std::string_view op);
    Summary& add(std::string_view key, double value);
    Summary& add(std::string_view key, std::size_t value);
    Summary& add(std::string_view key, std::string_view value);
    Summary& add(std::string_view key, const char* value) { return add(key, std::string_view(value)); }
    std::string str() const;
    void print() const;

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

/// Adds N(0, sd²) noise drawn from mt19937_64(seed); identity when sd is 0.
SampledSignal with_noise(const SampledSignal& signal, double sd, std::uint64_t seed);

double rms(std::span<const double> x, std::span<const double> y);

}  // namespace sinlet::cli
