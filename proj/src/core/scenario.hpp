#pragma once

#include <map>
#include <optional>
#include <string>

#include "errors.hpp"

namespace pcapm {

struct Tolerances {
    double quad_abs = 1e-12;
    double quad_rel = 1e-12;
    double guard = 1e-6;
    double tol_mono_factor = 1e-7;
    double bound_tol_factor = 1e-4;
    double tol_ineq_factor = 1e-8;
    double eq_tol_factor = 1e-6;
    double h_tol = 1e-10;
    double adm_tol = 1e-6;
};

// Parsed scenario file: sectioned key = value text with '#' comments.
// Sections: [metric], [model], [coefficients], [grid], [tolerances],
// [outputs]; the exponent p sits at top level.
struct Scenario {
    std::string name = "scenario";
    double p = 2.0;

    std::string family;
    std::map<std::string, double> metric_params;

    // "value", "matched", "from-willmore", or "zero".
    std::string k_mode = "matched";
    double k_value = 0.0;

    std::string preset;
    std::optional<double> C1, C2;
    double C3 = 0.0;

    std::optional<double> t_min, t_max, t_max_factor;
    int grid_n = 256;
    std::string spacing = "log";

    Tolerances tol{};

    std::string csv_path = "scan.csv";
    std::string report_path = "report.json";
};

Scenario parse_scenario_text(const std::string& text, const std::string& name);
Scenario parse_scenario_file(const std::string& path);

}  // namespace pcapm
