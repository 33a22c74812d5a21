// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "sinlet/error.hpp"

int main(int argc, char** argv) {
    CLI::App app{"sinlet: sinlet/coslet transforms, analysis and image coding"};
    app.require_subcommand(1);
    std::vector<sinlet::cli::Command> commands;
    sinlet::cli::add_signal_commands(app, commands);
    sinlet::cli::add_image_commands(app, commands);
    sinlet::cli::add_demo_command(app, commands);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help exits 0, every other parse failure is a usage error
        const int rc = app.exit(e);
        return rc == 0 ? 0 : sinlet::exit_code(sinlet::ErrorClass::Usage);
    }

    try {
        for (const auto& c : commands)
            if (c.app->parsed()) return c.run();
    } catch (const sinlet::Error& e) {
        std::cerr << "sinlet: " << e.what() << '\n';
        return sinlet::exit_code(e.error_class());
    } catch (const std::exception& e) {
        std::cerr << "sinlet: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
