#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pcapm {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 20260814ull;
    double tol_scale = 1.0;
    int threads = 1;
    // When nonempty, verify.json with all check results lands here.
    std::string out_dir;
};

// Acceptance checks followed by invariant checks, in a fixed order so two
// runs with the same seed are comparable line by line.
std::vector<CheckResult> run_all_checks(const VerifyOptions& opt = {});

bool all_pass(const std::vector<CheckResult>& checks);

std::string checks_to_json(const std::vector<CheckResult>& checks,
                           const VerifyOptions& opt);

// One "PASS name: detail" line per check.
std::string checks_to_text(const std::vector<CheckResult>& checks);

}  // namespace pcapm
