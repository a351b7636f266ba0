#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wqed/params.hpp"
#include "wqed/scenario.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Waveguide-QED photon correlation calculator"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    int threads = -1;
    CLI::App* run = app.add_subcommand("run", "Execute a scenario config");
    run->add_option("config", config_path, "Path to the config file")->required();
    run->add_option("--out", out_dir, "Output directory (overrides [output] dir)");
    run->add_option("--threads", threads, "Worker threads (overrides config; 0 = auto)");

    CLI::App* schema = app.add_subcommand("schema", "Print the config schema");
    CLI::App* presets = app.add_subcommand("presets", "List bundled scenario configs");

    CLI11_PARSE(app, argc, argv);

    if (schema->parsed()) {
        std::cout << wqed::schema_text();
        return 0;
    }
    if (presets->parsed()) {
        for (const auto& [name, text] : wqed::presets())
            std::cout << "# --- " << name << " ---\n" << text << "\n";
        return 0;
    }

    try {
        wqed::ConfigMap cfg = wqed::parse_config_file(config_path);
        if (threads >= 0) cfg[""]["threads"] = std::to_string(threads);
        wqed::run_scenario_to_dir(cfg, out_dir);
    } catch (const wqed::InvalidParams& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const wqed::NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
