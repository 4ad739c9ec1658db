// Named verification checks over the whole construction, executed in
// dependency order, with per-check thresholds, deterministic sampling and a
// machine-readable report.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "eqg/config.hpp"

namespace eqg {

struct CheckRecord {
    std::string name;
    std::string anchor;          // stable identity tag of the property tested
    std::string params_digest;   // hex digest of the effective parameters
    int samples = 0;
    double max_residual = 0.0;
    double threshold = 0.0;
    std::string verdict;         // "pass" | "fail" | "inconclusive"
    std::string notes;
};

// Check names in execution (dependency) order.
std::vector<std::string> all_check_names();

struct RunResult {
    nlohmann::ordered_json report;  // {config, calibration, checks, summary}
    int exit_code = 0;              // 0 all pass, 1 any fail, 2 inconclusive only
};

// Runs the checks selected by the config (all when the selection is empty) and
// assembles the report.  Unknown check names raise ConfigError.
RunResult run_checks(const RunConfig& cfg);

// Stable plain-text rendering of a report (no timestamps, fixed formatting).
std::string report_to_text(const nlohmann::ordered_json& report);

}  // namespace eqg
