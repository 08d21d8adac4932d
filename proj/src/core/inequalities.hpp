#pragma once

#include <string>
#include <utility>

#include "monotone.hpp"
#include "pcap_solver.hpp"

namespace pcapm {

struct InequalityInputs {
    double p = 0.0, a = 0.0, k = 0.0, m = 0.0, r0 = 0.0, cp = 0.0;
    double m_adm = 0.0;
    SurfaceData boundary{};
};

// Normalized to the orientation lhs <= rhs, so slack = rhs - lhs and
// slack >= 0 means the inequality holds.
struct InequalityReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool satisfied = false;
    bool equality = false;
    std::string note;
    InequalityInputs inputs{};
};

struct IneqOptions {
    double tol_ineq_factor = 1e-8;
    double eq_tol_factor = 1e-6;
    double h_tol = 1e-10;
    double guard = kGuardDefault;
};

// eta(r0) as a function of (a, k) alone:
// I_a(k) |k|^{-a} (1+k)^{2a-1} (1-k) for k != 0, and the limit 1/a at k = 0.
double boundary_eta(double a, double k);

// Unique k in (-1, 1] with 4k/(1+k)^2 = W, i.e. the root of
// W k^2 + (2W - 4) k + W = 0, evaluated in the cancellation-free form
// k = W / ((2 - W) + 2 sqrt(1 - W)).
double solve_k(double W, double guard = kGuardDefault);

// Boundary inequality pair for a general model with k in (-1, 1):
// the square-completion lower bound on
// 4pi - ((1+k)^2/(1-k)^2) eta(r0)^2 int|grad u|^2 and the ADM mass upper
// bound on the same expression. k = 0 uses the limit constants
// eta(r0) = 1/a and (1 - a eta(r0))/m -> 1/((a+1) r0).
std::pair<InequalityReport, InequalityReport> thm12_inequalities(
    const CapacitarySolution& sol, const SchwarzschildModel& model,
    const SurfaceData& boundary, const IneqOptions& opt = {});

// Boundary inequality pair for the minimal-boundary model k = 1:
// 4pi + 2 int H|grad u| - 2^{4a} I_a(1)^2 int|grad u|^2 >= 0 and
// 4pi(1+2a) - 2^{4a} I_a(1)^2 int|grad u|^2 <= 8pi a m_adm / m.
std::pair<InequalityReport, InequalityReport> thm11_inequalities(
    const CapacitarySolution& sol, const SchwarzschildModel& model,
    const SurfaceData& boundary, const IneqOptions& opt = {});

// Capacity-mass and capacity-area lower bounds with k recovered from the
// boundary Willmore deficit W = 1 - (1/16pi) int H^2.
std::pair<InequalityReport, InequalityReport> thm13_bounds(const CapacitarySolution& sol,
                                                           const SurfaceData& boundary,
                                                           const IneqOptions& opt = {});

// Same bounds specialized to a minimal boundary (|H| < h_tol gate):
// m_adm and sqrt(|Sigma|/16pi) both bounded below by 2 (I_a(1) cp)^{1/a}.
std::pair<InequalityReport, InequalityReport> thm14_bounds(const CapacitarySolution& sol,
                                                           const SurfaceData& boundary,
                                                           const IneqOptions& opt = {});

// F(r0) for the given admissible choice against the limit lower bound
// -8 pi C2 cp (m_adm - m).
InequalityReport corollary_reports(const CapacitarySolution& sol,
                                   const SchwarzschildModel& model,
                                   const CoefficientChoice& choice,
                                   const SurfaceData& boundary, const IneqOptions& opt = {});

// The two coefficient choices used to derive the boundary inequality pair:
// (C2=0, C1=-1) and the choice with alpha(r0) = 0, which is
// (C2=1/cp, C1 = m eta(r0)/(1 - a eta(r0))) for k != 0,1,
// (C2=1/cp, C1=0) for k = 1, and (C2=1/cp, C1=(a+1) r0 / a) for k = 0.
std::pair<CoefficientChoice, CoefficientChoice> thm12_proof_choices(
    const SchwarzschildModel& model);

}  // namespace pcapm
