#pragma once

#include <functional>

namespace pcapm::quad {

struct Options {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
};

// Double-exponential (tanh-sinh) integral of f over the finite interval
// [lo, hi]. The node distribution clusters at both endpoints, so integrands
// with algebraic endpoint behavior converge at machine accuracy. Throws a
// quadrature-failure error when the level-difference estimate stays far above
// the requested tolerance or the result is not finite.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const Options& opt = {});

// Integral of x^{q-1} g(x) over (0, x_max] for q > 0 with g bounded near 0.
// For q < 1 the integrable endpoint singularity is removed by the
// substitution x = y^{1/q} before handing the problem to `integrate`.
double power_kernel(double q, double x_max, const std::function<double(double)>& g,
                    const Options& opt = {});

// Integral of g over [t, infinity), mapped to a finite interval via s = 1/x.
// Requires t > 0 and g decaying fast enough that x^{-2} g(1/x) is integrable
// at x = 0.
double tail(const std::function<double(double)>& g, double t, const Options& opt = {});

// Non-adaptive 31-node Gauss rule for short smooth segments, used where the
// caller already controls the segment length.
double segment(const std::function<double(double)>& f, double lo, double hi);

}  // namespace pcapm::quad
