#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inequalities.hpp"
#include "monotone.hpp"
#include "scenario.hpp"

namespace pcapm {

struct RunOptions {
    std::string out_dir = ".";
    int threads = 1;
    double tol_scale = 1.0;
    std::uint64_t seed = 20260814ull;
    bool write_files = true;
};

struct RunResult {
    bool pass = false;
    std::string summary_json;
    std::string human;
};

// Everything derived from a scenario: solved metric, model, coefficient
// choice, and the ADM mass when the extrapolation converges.
struct Workspace {
    PExponent params;
    RadialConformalMetric metric;
    CapacitarySolution sol;
    SchwarzschildModel model;
    CoefficientChoice choice;
    std::string k_mode;
    std::optional<double> adm_mass;
    std::string adm_note;
};

Workspace build_workspace(const Scenario& sc);

std::vector<double> scan_grid(const Scenario& sc, double r0);

// Serializes scan rows with a fixed header and %.17e cells, so equal scans
// produce byte-identical text.
std::string scan_to_csv(const ScanReport& report);

RunResult run_scan(const Scenario& sc, const RunOptions& opt);
RunResult run_inequalities(const Scenario& sc, const RunOptions& opt);

// Closed-form model background table over a log grid of radii.
std::string schwarzschild_table_csv(double p, double m, double r0, int n,
                                    double t_max_factor);

}  // namespace pcapm
