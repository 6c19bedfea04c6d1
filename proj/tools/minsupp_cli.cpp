// Command-line front end: evaluate scenario files to reports (JSON or CSV).
//
// Exit codes: 0 all certificates pass; 1 any failure or vacuous hypothesis;
// 2 malformed input / usage error (diagnostic on stderr names the field).

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "minsupp/scenario.hpp"

namespace {

void emit(const nlohmann::json& report, const std::string& format, const std::string& out) {
    std::string text = format == "csv" ? minsupp::report_to_csv(report) : report.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output file: " + out);
        f << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"radial Sobolev-inequality certificate runner"};
    app.require_subcommand(1);

    std::string scenario_path, out_path, sweep_spec, format = "report";
    minsupp::RunOverrides ov;
    std::size_t grid = 0;
    double tol = -1.0;
    unsigned seed = 0;
    bool have_seed = false;

    auto add_common = [&](CLI::App* sub, bool need_scenario) {
        if (need_scenario)
            sub->add_option("--scenario", scenario_path, "scenario JSON file")->required();
        sub->add_option("--out", out_path, "write the report here instead of stdout");
        sub->add_option("--grid", grid, "override the grid size");
        sub->add_option("--tol", tol, "override the certificate tolerance");
        sub->add_option("--seed", seed, "override the RNG seed")
            ->each([&](const std::string&) { have_seed = true; });
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"report", "csv"}));
    };

    CLI::App* run = app.add_subcommand("run", "evaluate one scenario");
    add_common(run, true);

    CLI::App* sweep = app.add_subcommand("sweep", "evaluate a scenario over a parameter range");
    add_common(sweep, true);
    sweep->add_option("--sweep", sweep_spec, "param=v1,v2,... (overrides the scenario's sweep)");

    CLI::App* cat = app.add_subcommand("catalog", "list the named constructions");
    add_common(cat, false);

    CLI11_PARSE(app, argc, argv);

    if (grid > 0) ov.grid = grid;
    if (tol >= 0.0) ov.tol = tol;
    if (have_seed) ov.seed = seed;
    ov.sweep = sweep_spec;

    try {
        nlohmann::json report;
        if (cat->parsed()) {
            report = {{"version", minsupp::kVersion}, {"catalog", minsupp::catalog_report()},
                      {"all_pass", true}};
            emit(report, "report", out_path);
            return 0;
        }
        report = minsupp::run_scenario_file(scenario_path, ov);
        emit(report, format, out_path);
        return minsupp::report_exit_code(report);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
