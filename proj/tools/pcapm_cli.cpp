#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "pcapm/pcapm.h"

namespace {

int exit_code_for(pcapm_status st) {
    switch (st) {
        case PCAPM_OK:
            return 0;
        case PCAPM_ERR_CONFIG:
        case PCAPM_ERR_IO:
        case PCAPM_ERR_INVALID_ARG:
            return 2;
        default:
            return 1;
    }
}

int report_error(pcapm_status st) {
    std::fprintf(stderr, "error: %s\n", pcapm_last_error());
    return exit_code_for(st);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-capacitary potentials, monotone quantity scans, and boundary "
                 "inequality checks on rotationally symmetric metrics"};
    app.require_subcommand(1);

    std::string config;
    std::string out_dir = ".";
    unsigned long long seed = 20260814ull;
    double tol_scale = 1.0;
    int threads = 1;

    CLI::App* scan = app.add_subcommand("scan", "Scan the monotone quantity F over "
                                                "level sets of a scenario");
    scan->add_option("--config", config, "Scenario config file")->required();
    scan->add_option("--out", out_dir, "Directory for the CSV and JSON report");
    scan->add_option("--seed", seed, "Seed recorded in reports");
    scan->add_option("--tol-scale", tol_scale, "Multiplier on verdict tolerances");
    scan->add_option("--threads", threads, "Worker threads for scan rows");

    CLI::App* ineq = app.add_subcommand(
        "inequalities", "Evaluate the boundary inequality battery of a scenario");
    ineq->add_option("--config", config, "Scenario config file")->required();
    ineq->add_option("--out", out_dir, "Directory for the JSON report");
    ineq->add_option("--seed", seed, "Seed recorded in reports");
    ineq->add_option("--tol-scale", tol_scale, "Multiplier on verdict tolerances");
    ineq->add_option("--threads", threads, "Worker threads");

    CLI::App* verify = app.add_subcommand(
        "verify", "Run the acceptance and invariant suite");
    bool verify_out_set = false;
    verify->add_option("--out", out_dir, "Directory for verify.json")
        ->each([&](const std::string&) { verify_out_set = true; });
    verify->add_option("--seed", seed, "Seed for the randomized checks");
    verify->add_option("--tol-scale", tol_scale, "Multiplier on verdict tolerances");
    verify->add_option("--threads", threads, "Worker threads for scan checks");

    CLI::App* table = app.add_subcommand(
        "schwarzschild-table", "Emit the closed-form background table as CSV");
    double p = 2.0, mass = 1.0, r0 = 1.0, t_max_factor = 1000.0;
    int n = 64;
    bool table_out_set = false;
    table->add_option("--p", p, "Exponent p in (1, 3)")->required();
    table->add_option("--mass", mass, "Background mass m")->required();
    table->add_option("--r0", r0, "Boundary radius r0 >= |m|/2")->required();
    table->add_option("--n", n, "Number of rows");
    table->add_option("--t-max-factor", t_max_factor, "Last radius as a multiple of r0");
    table->add_option("--out", out_dir, "Directory for schwarzschild.csv "
                                        "(default: print to stdout)")
        ->each([&](const std::string&) { table_out_set = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (scan->parsed() || ineq->parsed()) {
        char* human = nullptr;
        int pass = 0;
        pcapm_status st =
            scan->parsed()
                ? pcapm_run_scan_file(config.c_str(), out_dir.c_str(), threads,
                                      tol_scale, seed, &human, &pass)
                : pcapm_run_inequalities_file(config.c_str(), out_dir.c_str(), threads,
                                              tol_scale, seed, &human, &pass);
        if (st != PCAPM_OK) return report_error(st);
        std::fputs(human, stdout);
        pcapm_string_free(human);
        return pass ? 0 : 3;
    }

    if (verify->parsed()) {
        char* text = nullptr;
        int pass = 0;
        pcapm_status st = pcapm_verify(seed, tol_scale, threads,
                                       verify_out_set ? out_dir.c_str() : nullptr,
                                       &text, &pass);
        if (st != PCAPM_OK) return report_error(st);
        std::fputs(text, stdout);
        pcapm_string_free(text);
        std::printf("verify: %s\n", pass ? "PASS" : "FAIL");
        return pass ? 0 : 3;
    }

    if (table->parsed()) {
        char* csv = nullptr;
        pcapm_status st = pcapm_schwarzschild_table(p, mass, r0, n, t_max_factor, &csv);
        if (st != PCAPM_OK) return report_error(st);
        if (table_out_set) {
            std::error_code ec;
            std::filesystem::create_directories(out_dir, ec);
            std::string path = out_dir + "/schwarzschild.csv";
            std::ofstream f(path, std::ios::binary);
            if (!f) {
                std::fprintf(stderr, "error: cannot open %s for writing\n", path.c_str());
                pcapm_string_free(csv);
                return 2;
            }
            f << csv;
            std::printf("wrote %s\n", path.c_str());
        } else {
            std::fputs(csv, stdout);
        }
        pcapm_string_free(csv);
        return 0;
    }

    return 2;
}
