#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Decide C3-symmetric isostaticity of planar bar-joint frameworks and emit certificates"};
    app.require_subcommand(1);

    c3rigid::cli::Options opt;
    std::string file;
    const auto common = [&](CLI::App* sub) {
        sub->add_option("file", file, "graph JSON document")->required();
        sub->add_flag("--json,!--no-json", opt.json, "emit the JSON report (default) or a one-line summary");
    };

    CLI::App* check = app.add_subcommand("check", "Laman counts and fixed-vertex scan");
    common(check);
    CLI::App* certify = app.add_subcommand("certify", "construction sequence and symmetric tree partition");
    common(certify);
    CLI::App* realize = app.add_subcommand("realize", "exact symmetric isostatic placement");
    common(realize);
    realize->add_option("--seed", opt.seed, "placement seed")->capture_default_str();
    realize->add_option("--method", opt.method, "generic or frame")
        ->check(CLI::IsMember({"generic", "frame"}))
        ->capture_default_str();
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force Laman check against the pebble game (n <= 14)");
    common(oracle);
    CLI::App* render = app.add_subcommand("render", "SVG drawing of a symmetric placement");
    common(render);
    render->add_option("--seed", opt.seed, "placement seed")->capture_default_str();
    render->add_option("--out", opt.out, "SVG output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : c3rigid::cli::kFailure;
    }

    CLI::App* chosen = app.get_subcommands().front();
    return c3rigid::cli::run_command(chosen->get_name(), file, opt, std::cout, std::cerr);
}
