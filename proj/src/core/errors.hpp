#pragma once

#include <stdexcept>
#include <string>

namespace pcapm {

enum class errc {
    ok = 0,
    invalid_arg,
    domain,
    guard,
    quadrature,
    nonconvergent,
    bracket,
    inadmissible,
    not_minimal,
    positivity,
    config,
    io,
    nan_result,
    internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] void fail(errc code, const std::string& msg);

void require(bool cond, errc code, const std::string& msg);

double require_finite(double value, const std::string& what);

}  // namespace pcapm
