// Command-line entry point: parses the run configuration, executes the
// selected verification checks in dependency order, and emits the report as
// JSON or text.  Exit codes: 0 all pass, 1 any failure, 2 inconclusive only,
// 64 bad configuration.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqg/checks.hpp"
#include "eqg/config.hpp"

int main(int argc, char** argv) {
    CLI::App app{"numerical verification suite for the elliptic operator construction"};

    std::string config_path, format = "json", out_path;
    std::vector<std::string> checks;
    int n = -1, samples = -1;
    unsigned long long seed = 0;
    bool seed_set = false, list_checks = false;
    double tol = -1.0;

    app.add_option("--config", config_path, "configuration file (key=value or JSON)");
    app.add_option("--n", n, "rank override (2, 3 or 4)");
    app.add_option("--seed", seed, "random stream seed override")
        ->each([&](const std::string&) { seed_set = true; });
    app.add_option("--samples", samples, "per-check sample count override (0 = defaults)");
    app.add_option("--tol", tol, "residual tolerance override");
    app.add_option("--check", checks, "run only the named check (repeatable)");
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", out_path, "write the report to this file instead of stdout");
    app.add_flag("--list-checks", list_checks, "print the known check names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    }

    if (list_checks) {
        for (const auto& name : eqg::all_check_names()) std::printf("%s\n", name.c_str());
        return 0;
    }

    eqg::RunResult result;
    try {
        eqg::RunConfig cfg;
        if (!config_path.empty()) cfg = eqg::parse_config_file(config_path);
        if (n > 0) cfg.n = n;
        if (seed_set) cfg.seed = seed;
        if (samples >= 0) cfg.samples = samples;
        if (tol > 0) cfg.tol_residual = tol;
        if (!checks.empty()) cfg.checks = checks;
        cfg.validate();
        result = eqg::run_checks(cfg);
    } catch (const eqg::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 64;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }

    const std::string body = format == "text" ? eqg::report_to_text(result.report)
                                              : result.report.dump(2) + "\n";
    if (out_path.empty()) {
        std::fputs(body.c_str(), stdout);
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
            return 1;
        }
        f << body;
    }
    return result.exit_code;
}
