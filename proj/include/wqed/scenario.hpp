// Scenario runner: nested-section plain-text configs, named experiments, and
// CSV/JSON persistence with byte-stable formatting.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wqed {

// Parsed config: section name -> key -> raw value string. Top-level keys
// (before any [section] header) live under the empty section name.
using ConfigSection = std::map<std::string, std::string>;
using ConfigMap = std::map<std::string, ConfigSection>;

ConfigMap parse_config_text(const std::string& text);
ConfigMap parse_config_file(const std::string& path);

// Canonical serialization; parse_config_text(config_to_text(c)) == c.
std::string config_to_text(const ConfigMap& cfg);

// Human-readable description of every section, key, type, and default.
std::string schema_text();

// Bundled figure-scale configs: (name, config text) pairs.
std::vector<std::pair<std::string, std::string>> presets();

struct ScenarioResult {
    std::string csv;      // full result.csv contents
    std::string summary;  // full summary.json contents (includes config echo)
};

// Validates and executes the configured scenario. Throws InvalidParams on
// schema violations and NumericalFailure on numerical breakdown.
ScenarioResult run_scenario(const ConfigMap& cfg);

// Runs and persists result.csv / summary.json (and grid.bin when requested)
// into out_dir, creating it if needed. An empty out_dir uses [output] dir
// from the config, defaulting to "out".
ScenarioResult run_scenario_to_dir(const ConfigMap& cfg, const std::string& out_dir);

// Shortest 12-significant-digit decimal used for all persisted floats.
std::string format_number(double v);

// Sets the worker thread count; 0 picks the hardware default.
void apply_thread_count(int threads);

}  // namespace wqed
