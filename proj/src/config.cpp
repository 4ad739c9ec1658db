#include "eqg/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace eqg {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& v) {
    std::string s = v;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

double parse_double(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad numeric value for '" + key + "': " + s);
    }
}

cplx parse_cplx(const std::string& v, const std::string& key) {
    auto parts = split_list(v);
    if (parts.size() == 1) return cplx(parse_double(parts[0], key), 0.0);
    if (parts.size() == 2)
        return cplx(parse_double(parts[0], key), parse_double(parts[1], key));
    throw ConfigError("complex value for '" + key + "' needs 're im', got: " + v);
}

cplx cplx_from_json(const nlohmann::ordered_json& j, const std::string& key) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2)
        return cplx(j.at(0).get<double>(), j.at(1).get<double>());
    throw ConfigError("complex value for '" + key + "' must be a number or [re, im]");
}

nlohmann::ordered_json cplx_to_json(cplx z) {
    return nlohmann::ordered_json::array({z.real(), z.imag()});
}

}  // namespace

ModularParams RunConfig::params() const {
    ModularParams p;
    p.n = n;
    p.tau = tau;
    p.w = w;
    p.w_vec = w_vec.empty() && n >= 2 && n <= 4 ? default_params(n).w_vec : w_vec;
    p.z0 = z0;
    p.delta0 = delta0 ? *delta0 : w / double(n) - z0;
    p.tol_series = tol_series;
    p.tol_residual = tol_residual;
    p.validate();
    return p;
}

void RunConfig::validate() const {
    try {
        params();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (samples < 0) throw ConfigError("samples must be >= 0");
    if (three_term_reading != "generic-pair" && three_term_reading != "literal")
        throw ConfigError("three_term_reading must be 'generic-pair' or 'literal'");
    if (cherednik_variant != "plain" && cherednik_variant != "shifted" &&
        cherednik_variant != "both")
        throw ConfigError("cherednik_variant must be 'plain', 'shifted' or 'both'");
}

nlohmann::ordered_json RunConfig::to_json() const {
    const ModularParams p = params();
    nlohmann::ordered_json j;
    j["n"] = n;
    j["tau"] = cplx_to_json(tau);
    j["w"] = cplx_to_json(w);
    j["w_vec"] = p.w_vec;
    j["delta0"] = cplx_to_json(p.delta0);
    j["z0"] = cplx_to_json(z0);
    j["seed"] = seed;
    j["samples"] = samples;
    j["tol_series"] = tol_series;
    j["tol_residual"] = tol_residual;
    j["checks"] = checks.empty() ? nlohmann::ordered_json::array({"all"})
                                 : nlohmann::ordered_json(checks);
    j["three_term_reading"] = three_term_reading;
    j["cherednik_variant"] = cherednik_variant;
    return j;
}

RunConfig config_from_json(const nlohmann::ordered_json& j) {
    RunConfig c;
    for (const auto& [key, val] : j.items()) {
        if (key == "n") c.n = val.get<int>();
        else if (key == "tau") c.tau = cplx_from_json(val, key);
        else if (key == "w") c.w = cplx_from_json(val, key);
        else if (key == "w_vec") c.w_vec = val.get<std::vector<double>>();
        else if (key == "delta0") c.delta0 = cplx_from_json(val, key);
        else if (key == "z0") c.z0 = cplx_from_json(val, key);
        else if (key == "seed") c.seed = val.get<std::uint64_t>();
        else if (key == "samples") c.samples = val.get<int>();
        else if (key == "tol_series") c.tol_series = val.get<double>();
        else if (key == "tol_residual") c.tol_residual = val.get<double>();
        else if (key == "checks") {
            c.checks = val.get<std::vector<std::string>>();
            if (c.checks.size() == 1 && c.checks[0] == "all") c.checks.clear();
        } else if (key == "three_term_reading") c.three_term_reading = val.get<std::string>();
        else if (key == "cherednik_variant") c.cherednik_variant = val.get<std::string>();
        else throw ConfigError("unknown config key: " + key);
    }
    c.validate();
    return c;
}

RunConfig parse_config_text(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::ordered_json j;
        try {
            j = nlohmann::ordered_json::parse(text);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("JSON parse error: ") + e.what());
        }
        return config_from_json(j);
    }

    RunConfig c;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (val.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty value for " + key);

        if (key == "n") c.n = (int)parse_double(val, key);
        else if (key == "tau") c.tau = parse_cplx(val, key);
        else if (key == "w") c.w = parse_cplx(val, key);
        else if (key == "w_vec") {
            c.w_vec.clear();
            for (const auto& t : split_list(val)) c.w_vec.push_back(parse_double(t, key));
        } else if (key == "delta0") c.delta0 = parse_cplx(val, key);
        else if (key == "z0") c.z0 = parse_cplx(val, key);
        else if (key == "seed") {
            try {
                c.seed = std::stoull(val);
            } catch (const std::exception&) {
                throw ConfigError("bad seed: " + val);
            }
        } else if (key == "samples") c.samples = (int)parse_double(val, key);
        else if (key == "tol_series") c.tol_series = parse_double(val, key);
        else if (key == "tol_residual") c.tol_residual = parse_double(val, key);
        else if (key == "checks") {
            c.checks = split_list(val);
            if (c.checks.size() == 1 && c.checks[0] == "all") c.checks.clear();
        } else if (key == "three_term_reading") c.three_term_reading = val;
        else if (key == "cherednik_variant") c.cherednik_variant = val;
        else throw ConfigError("line " + std::to_string(lineno) + ": unknown key " + key);
    }
    c.validate();
    return c;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str());
}

}  // namespace eqg
