#pragma once

#include <optional>
#include <vector>

#include "pcap_solver.hpp"
#include "specfun.hpp"

namespace pcapm {

// Coefficient triple (alpha, beta, gamma) attached to a model background,
// parametrized by the free constants C1, C2 and the additive constant C3
// which shifts the monotone quantity by 4 pi C3.
struct CoefficientChoice {
    SchwarzschildModel model;
    double C1 = 0.0;
    double C2 = 0.0;
    double C3 = 0.0;
};

struct Coefficients {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

struct MonotoneSample {
    double t = 0.0;
    Coefficients coef{};
    SurfaceData surface{};
    double F = 0.0;
    double F_alt = 0.0;
};

struct OdeResidual {
    double r1 = 0.0, r2 = 0.0, r3 = 0.0;
    double scale1 = 0.0, scale2 = 0.0, scale3 = 0.0;
};

struct ScanRow {
    double t = 0.0, level = 0.0, r = 0.0;
    double area = 0.0, H = 0.0, grad_u = 0.0;
    double int_H_grad = 0.0, int_grad_sq = 0.0, int_H_sq = 0.0;
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    double F = 0.0, dF_forward = 0.0;
};

struct ScanOptions {
    int threads = 1;
    double tol_mono_factor = 1e-7;
    double bound_tol_factor = 1e-4;
    // ADM mass of the solved metric when available; enables the limit bound.
    std::optional<double> adm_mass{};
};

struct ScanReport {
    std::vector<ScanRow> rows;
    double max_abs_F = 0.0;
    double max_forward_diff = 0.0;
    double tol_mono = 0.0;
    bool monotone_pass = false;
    double F_first = 0.0;
    double F_final = 0.0;
    bool bound_available = false;
    double adm_mass = 0.0;
    double limit_bound = 0.0;
    double bound_tol = 0.0;
    bool bound_pass = true;
};

// Closed-form solution of the coefficient ODE system for the given model and
// constants, valid on t >= r0. Dispatches to the m = 0 forms when k = 0.
Coefficients coefficients(const CoefficientChoice& choice, double t);

// m = 0 closed forms with r0 = (cp/a)^{1/a}:
// alpha = C2 t^{a+1} - C1/(a+1),
// beta  = C1 (2a+1) t^a / (a(a+1) cp) - C2 t^{2a+1} / cp,
// gamma = -C2 cp t - C1 cp t^{-a} / (a(a+1)) + C3.
Coefficients coefficients_k0(const PExponent& params, double cp, double C1, double C2,
                             double C3, double t);

// Central-difference residuals of the first-order system
// r1 = alpha' - (2a+1) eta f' alpha - a f' beta,
// r2 = beta' + (2a+1) eta^2 f' alpha,
// r3 = gamma' + f' alpha,
// with scale_i the sum of magnitudes of the combined terms.
OdeResidual ode_residual(const CoefficientChoice& choice, double t);

// Residual of the second-order equation satisfied by alpha alone:
// t^2 (1+x)^2 alpha'' + t (1+x)(-a + (a+2) x) alpha' - 2(2a+1) x alpha,
// x = m/2t, scaled by the magnitude sum of the three terms.
double alpha_ode2_residual(const CoefficientChoice& choice, double t);

// Same residual for the special solution t^{a+1} (1+x)^{2a+1} (1-x).
double alpha_special_residual(const SchwarzschildModel& model, double t);

// Exact admissibility predicate: C2 >= 0 and
// (C2 cp + C1 a/m) eta(r0) >= C1/m  (k != 0),
// C2 >= 0 and C1 <= 0               (k = 1),
// C2 >= 0 and C2 r0^{a+1} >= C1/(a+1)  (k = 0);
// cross-checked against the sign of alpha sampled on 400 grid points.
bool alpha_nonneg(const CoefficientChoice& choice);

// Monotone quantity at one level t together with the reformulated evaluation
// used as an internal cross-check. Requires an admissible choice.
MonotoneSample evaluate_F(const CapacitarySolution& sol, const CoefficientChoice& choice,
                          double t);

// F over an increasing grid of t values, with forward differences, the
// monotonicity verdict, and the limit bound -8 pi C2 cp (m_adm - m) when the
// ADM mass is supplied.
ScanReport monotonicity_scan(const CapacitarySolution& sol, const CoefficientChoice& choice,
                             const std::vector<double>& grid, const ScanOptions& opt = {});

}  // namespace pcapm
