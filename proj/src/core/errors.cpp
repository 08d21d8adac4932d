#include "errors.hpp"

#include <cmath>

namespace pcapm {

const char* errc_name(errc c) {
    switch (c) {
        case errc::ok: return "ok";
        case errc::invalid_arg: return "invalid-argument";
        case errc::domain: return "domain";
        case errc::guard: return "guard";
        case errc::quadrature: return "quadrature-failure";
        case errc::nonconvergent: return "nonconvergent";
        case errc::bracket: return "bracket-failure";
        case errc::inadmissible: return "inadmissible";
        case errc::not_minimal: return "not-minimal";
        case errc::positivity: return "positivity";
        case errc::config: return "config";
        case errc::io: return "io";
        case errc::nan_result: return "nan-result";
        case errc::internal: return "internal";
    }
    return "unknown";
}

void fail(errc code, const std::string& msg) {
    throw error(code, msg);
}

void require(bool cond, errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

double require_finite(double value, const std::string& what) {
    if (!std::isfinite(value)) fail(errc::nan_result, what + " is not finite");
    return value;
}

}  // namespace pcapm
