// Run configuration for the verification tool: model parameters, seed, sample
// counts, check selection, and the two behavioural options (exchange-move
// reading and ordered-product variant).  Parsed from a key/value text file or
// from JSON with the same schema.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqg/params.hpp"

namespace eqg {

struct RunConfig {
    int n = 2;
    cplx tau{0.0, 0.8};
    cplx w{0.2137, 0.1129};
    std::vector<double> w_vec;          // empty -> rank default
    std::optional<cplx> delta0;         // absent -> w/n - z0
    cplx z0{0.0, 0.0};
    std::uint64_t seed = 1;
    int samples = 0;                    // 0 -> per-check defaults
    double tol_series = 1e-14;
    double tol_residual = 1e-9;
    std::vector<std::string> checks;    // empty -> all
    std::string three_term_reading = "generic-pair";  // or "literal"
    std::string cherednik_variant = "shifted";        // "plain", "shifted", "both"

    ModularParams params() const;       // validated model parameters
    void validate() const;              // throws ConfigError on bad fields
    nlohmann::ordered_json to_json() const;  // canonical echo for reports
};

// Invalid configuration content; the tool maps this to exit status 64.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Key/value text: one `key = value` per line, '#' comments, complex values as
// "re im" pairs, lists space- or comma-separated.  Files whose first non-space
// character is '{' are parsed as JSON with the same keys.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);
RunConfig config_from_json(const nlohmann::ordered_json& j);

}  // namespace eqg
