// Acceptance and invariant battery: one PASS/FAIL line per check, nonzero
// exit when any check fails.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

#include "core/verify.hpp"

int main(int argc, char** argv) {
    pcapm::VerifyOptions opt;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        auto next = [&]() -> const char* {
            if (i + 1 >= argc) {
                std::fprintf(stderr, "error: missing value for %s\n", arg.c_str());
                std::exit(2);
            }
            return argv[++i];
        };
        if (arg == "--seed") {
            opt.seed = std::strtoull(next(), nullptr, 10);
        } else if (arg == "--tol-scale") {
            opt.tol_scale = std::strtod(next(), nullptr);
        } else if (arg == "--threads") {
            opt.threads = std::atoi(next());
        } else if (arg == "--out") {
            opt.out_dir = next();
        } else {
            std::fprintf(stderr, "error: unknown argument %s\n", arg.c_str());
            return 2;
        }
    }

    std::vector<pcapm::CheckResult> checks;
    try {
        checks = pcapm::run_all_checks(opt);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }

    std::fputs(pcapm::checks_to_text(checks).c_str(), stdout);
    int failed = 0;
    for (const auto& c : checks)
        if (!c.pass) ++failed;
    std::printf("%zu/%zu checks passed\n", checks.size() - failed, checks.size());
    return failed == 0 ? 0 : 1;
}
