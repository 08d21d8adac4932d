#pragma once

#include "errors.hpp"

namespace pcapm {

// Exponent bundle for the p-Laplacian in three dimensions, restricted to
// 1 < p < 3 where the capacitary potential decays like r^{-a} with
// a = (3 - p) / (p - 1).
struct PExponent {
    double p;
    double a;

    static PExponent from_p(double p) {
        require(p > 1.0 && p < 3.0, errc::domain,
                "p must lie in (1, 3), got p=" + std::to_string(p));
        return PExponent{p, (3.0 - p) / (p - 1.0)};
    }

    static PExponent from_a(double a) {
        require(a > 0.0, errc::domain,
                "decay exponent a must be positive, got a=" + std::to_string(a));
        return PExponent{(3.0 + a) / (1.0 + a), a};
    }
};

}  // namespace pcapm
