#pragma once

#include <cmath>
#include <utility>

#include "core/errors.hpp"

namespace testutil {

// Runs fn and reports the pcapm error code it throws, or errc::ok if it
// returns normally.
template <class F>
pcapm::errc thrown_code(F&& fn) {
    try {
        std::forward<F>(fn)();
    } catch (const pcapm::error& e) {
        return e.code();
    }
    return pcapm::errc::ok;
}

inline bool rel_near(double got, double want, double tol) {
    return std::fabs(got - want) <= tol * std::fabs(want);
}

}  // namespace testutil
