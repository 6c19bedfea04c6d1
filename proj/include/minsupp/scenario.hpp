#pragma once

#include <string>

#include <json.hpp>

#include "minsupp/verify.hpp"

namespace minsupp {

inline constexpr const char* kVersion = "0.1.0";

/// Command-line overrides applied on top of a scenario file.
struct RunOverrides {
    std::optional<std::size_t> grid;
    std::optional<double> tol;
    std::optional<unsigned> seed;
    std::string sweep;  // "param=v1,v2,..." (empty: use the scenario's sweep)
};

/// Parse + evaluate a scenario (JSON object); returns the report (JSON).
/// Throws std::invalid_argument with a field diagnostic on malformed input.
nlohmann::json run_scenario(const nlohmann::json& scenario, const RunOverrides& ov = {});

nlohmann::json run_scenario_file(const std::string& path, const RunOverrides& ov = {});

/// CSV table for a report (one row per sweep point; 17 significant digits,
/// '.' decimal separator, LF line endings).
std::string report_to_csv(const nlohmann::json& report);

/// Stable, alphabetized catalog listing.
nlohmann::json catalog_report();

/// 0: every certificate passes; 1: any failure or vacuous hypothesis.
int report_exit_code(const nlohmann::json& report);

}  // namespace minsupp
