#pragma once

#include <vector>

#include "params.hpp"
#include "quadrature.hpp"
#include "radial_metric.hpp"
#include "schwarzschild.hpp"
#include "specfun.hpp"

namespace pcapm {

struct SolverOptions {
    int table_nodes = 2048;
    double table_span = 1e6;
    quad::Options quad{};
    bool check_metric = true;
};

struct AsymptoticDiagnostics {
    double slope_u = 0.0;        // log-log slope of 1 - u, expected -a
    double slope_grad = 0.0;     // log-log slope of u', expected -(a+1)
    double resid_u = 0.0;        // max deviation of the fit in log space
    double resid_grad = 0.0;
    double area_ratio = 0.0;     // area(r_max) / (4 pi r_max^2)
};

// Radial p-capacitary potential on {r >= r0} for the metric w^4 delta:
// u(r) = 1 - C * T(r) with T(r) the tail integral of s^{-a-1} w(s)^{-2a}
// and C = 1 / T(r0), so u(r0) = 0 and u -> 1 at infinity. T is tabulated on
// a log grid and corrected per query by a short Gauss segment, keeping each
// evaluation at quadrature accuracy.
class CapacitarySolution {
public:
    static CapacitarySolution solve(const RadialConformalMetric& metric, PExponent params,
                                    const SolverOptions& opt = {});

    const RadialConformalMetric& metric() const { return metric_; }
    const PExponent& params() const { return params_; }
    double a() const { return params_.a; }
    double p() const { return params_.p; }

    double cp() const { return cp_; }
    double cap_p() const;
    double norm_C() const { return cp_; }

    double u(double r) const;
    double u_prime(double r) const;
    // T(r) = integral of s^{-a-1} w(s)^{-2a} over [r, infinity).
    double tail_integral(double r) const;
    // 1 - u(r) without cancellation.
    double one_minus_u(double r) const;

    // Radius with u(r) = level, for level in [0, 1).
    double level_radius(double level) const;

    // Level-set data of the true potential at the radius where u equals the
    // model level f(t); requires the model to share this solution's cp.
    SurfaceData sample_level_surface(const SchwarzschildModel& model, double t) const;

    AsymptoticDiagnostics asymptotic_diagnostics() const;

private:
    CapacitarySolution(const RadialConformalMetric& metric, PExponent params);

    double integrand(double s) const;
    double radius_for_tail(double T_target) const;

    RadialConformalMetric metric_;
    PExponent params_;
    double cp_ = 0.0;
    quad::Options quad_{};
    std::vector<double> nodes_;
    std::vector<double> tails_;
};

}  // namespace pcapm
