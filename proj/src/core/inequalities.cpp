#include "inequalities.hpp"

#include <cmath>

namespace pcapm {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

InequalityInputs make_inputs(const SchwarzschildModel& model, const SurfaceData& boundary,
                             double m_adm) {
    InequalityInputs in;
    in.p = model.p();
    in.a = model.a();
    in.k = model.k();
    in.m = model.m();
    in.r0 = model.r0();
    in.cp = model.cp();
    in.m_adm = m_adm;
    in.boundary = boundary;
    return in;
}

InequalityReport make_report(std::string name, double lhs, double rhs,
                             const IneqOptions& opt, InequalityInputs inputs,
                             std::string note = {}) {
    InequalityReport rep;
    rep.name = std::move(name);
    rep.lhs = require_finite(lhs, rep.name + " lhs");
    rep.rhs = require_finite(rhs, rep.name + " rhs");
    rep.slack = rep.rhs - rep.lhs;
    double scale = std::max({std::fabs(rep.lhs), std::fabs(rep.rhs), 1.0});
    rep.satisfied = rep.slack >= -opt.tol_ineq_factor * scale;
    rep.equality = std::fabs(rep.slack) <= opt.eq_tol_factor * scale;
    rep.note = std::move(note);
    rep.inputs = inputs;
    return rep;
}

}  // namespace

double boundary_eta(double a, double k) {
    require(a > 0.0, errc::domain, "exponent a must be positive");
    if (k == 0.0) return 1.0 / a;
    return incomplete_I(a, k) * std::pow(std::fabs(k), -a) * std::pow(1.0 + k, 2.0 * a - 1.0) *
           (1.0 - k);
}

double solve_k(double W, double guard) {
    require(W <= 1.0, errc::domain,
            "Willmore deficit W=" + std::to_string(W) + " exceeds 1");
    if (W == 0.0) return 0.0;
    double k = W / ((2.0 - W) + 2.0 * std::sqrt(1.0 - W));
    require(k + 1.0 >= guard, errc::guard,
            "recovered k=" + std::to_string(k) + " is within the guard distance of -1");
    double resid = W * k * k + (2.0 * W - 4.0) * k + W;
    double scale = std::fabs(W) * (1.0 + k * k) + 4.0 * std::fabs(k) + 1.0;
    require(std::fabs(resid) <= 1e-12 * scale, errc::internal,
            "solve_k back-substitution residual " + std::to_string(resid));
    return k;
}

std::pair<InequalityReport, InequalityReport> thm12_inequalities(
    const CapacitarySolution& sol, const SchwarzschildModel& model,
    const SurfaceData& boundary, const IneqOptions& opt) {
    double k = model.k();
    require(k < 1.0, errc::domain,
            "boundary ratio k=1 has its own minimal-boundary evaluator");
    double a = model.a();
    double m = model.m();
    double r0 = model.r0();
    double m_adm = sol.metric().adm_mass();
    InequalityInputs inputs = make_inputs(model, boundary, m_adm);

    double eta0 = model.eta(r0);
    double pref = (k == 0.0) ? 1.0 / ((a + 1.0) * r0) : (1.0 - a * eta0) / m;
    double opk = 1.0 + k, omk = 1.0 - k;

    double main_expr =
        4.0 * kPi - (opk * opk) / (omk * omk) * eta0 * eta0 * boundary.int_grad_sq;
    double sq = 0.25 * boundary.int_H_sq - eta0 * boundary.int_H_grad +
                eta0 * eta0 * boundary.int_grad_sq;
    double inner =
        4.0 * kPi * (omk * omk) / (opk * opk) - 0.25 * boundary.int_H_sq + sq;
    double factor = opk * opk * r0 / eta0 * pref;

    std::string note;
    if (k < 0.0) note = "equality cannot occur for -1<k<0 (zero-area-singularity backgrounds)";

    InequalityReport lower =
        make_report("thm12.lower", factor * inner, main_expr, opt, inputs, note);
    InequalityReport upper = make_report("thm12.upper", main_expr,
                                         8.0 * kPi * a * (m_adm - m) * pref, opt, inputs, note);
    return {lower, upper};
}

std::pair<InequalityReport, InequalityReport> thm11_inequalities(
    const CapacitarySolution& sol, const SchwarzschildModel& model,
    const SurfaceData& boundary, const IneqOptions& opt) {
    require(model.k() == 1.0, errc::domain,
            "minimal-boundary inequalities require the k=1 model");
    double a = model.a();
    double m = model.m();
    double m_adm = sol.metric().adm_mass();
    InequalityInputs inputs = make_inputs(model, boundary, m_adm);

    double Ia1 = half_beta(a);
    double c = std::pow(2.0, 4.0 * a) * Ia1 * Ia1;
    double expr1 = 4.0 * kPi + 2.0 * boundary.int_H_grad - c * boundary.int_grad_sq;
    double expr2 = 4.0 * kPi * (1.0 + 2.0 * a) - c * boundary.int_grad_sq;

    InequalityReport lower = make_report("thm11.lower", 0.0, expr1, opt, inputs);
    InequalityReport upper =
        make_report("thm11.upper", expr2, 8.0 * kPi * a * m_adm / m, opt, inputs);
    return {lower, upper};
}

std::pair<InequalityReport, InequalityReport> thm13_bounds(const CapacitarySolution& sol,
                                                           const SurfaceData& boundary,
                                                           const IneqOptions& opt) {
    double a = sol.a();
    double cp = sol.cp();
    double W = 1.0 - boundary.int_H_sq / (16.0 * kPi);
    double k = solve_k(W, opt.guard);
    double m_adm = sol.metric().adm_mass();

    SchwarzschildModel model =
        (k == 0.0) ? SchwarzschildModel::from_capacity(sol.params(), cp, 0.0)
                   : SchwarzschildModel::from_capacity(sol.params(), cp, k, {}, opt.guard);
    InequalityInputs inputs = make_inputs(model, boundary, m_adm);

    double mass_bound, area_bound;
    if (k == 0.0) {
        mass_bound = 0.0;
        area_bound = 0.5 * std::pow(cp / a, 1.0 / a);
    } else {
        double base = std::pow(model.Ia_k() * cp, 1.0 / a);
        double sg = k > 0.0 ? 1.0 : -1.0;
        mass_bound = 2.0 * sg * base;
        area_bound = (1.0 + k) * (1.0 + k) / (2.0 * std::fabs(k)) * base;
    }
    InequalityReport mass = make_report("thm13.mass", mass_bound, m_adm, opt, inputs);
    InequalityReport area = make_report("thm13.area", area_bound,
                                        std::sqrt(boundary.area / (16.0 * kPi)), opt, inputs);
    return {mass, area};
}

std::pair<InequalityReport, InequalityReport> thm14_bounds(const CapacitarySolution& sol,
                                                           const SurfaceData& boundary,
                                                           const IneqOptions& opt) {
    require(std::fabs(boundary.H) < opt.h_tol, errc::not_minimal,
            "boundary mean curvature " + std::to_string(boundary.H) +
                " is not minimal within h_tol=" + std::to_string(opt.h_tol));
    double a = sol.a();
    double cp = sol.cp();
    double m_adm = sol.metric().adm_mass();
    SchwarzschildModel model = SchwarzschildModel::from_capacity(sol.params(), cp, 1.0);
    InequalityInputs inputs = make_inputs(model, boundary, m_adm);

    double bound = 2.0 * std::pow(half_beta(a) * cp, 1.0 / a);
    InequalityReport mass = make_report("thm14.mass", bound, m_adm, opt, inputs);
    InequalityReport area = make_report("thm14.area", bound,
                                        std::sqrt(boundary.area / (16.0 * kPi)), opt, inputs);
    return {mass, area};
}

InequalityReport corollary_reports(const CapacitarySolution& sol,
                                   const SchwarzschildModel& model,
                                   const CoefficientChoice& choice,
                                   const SurfaceData& boundary, const IneqOptions& opt) {
    require(alpha_nonneg(choice), errc::inadmissible,
            "coefficient choice violates the admissibility condition");
    double m_adm = sol.metric().adm_mass();
    InequalityInputs inputs = make_inputs(model, boundary, m_adm);

    Coefficients c = coefficients(choice, model.r0());
    double F_r0 = 4.0 * kPi * c.gamma + c.alpha * boundary.int_H_grad +
                  c.beta * boundary.int_grad_sq;
    double bound = -8.0 * kPi * choice.C2 * model.cp() * (m_adm - model.m());
    return make_report("corollary.flimit", bound, F_r0, opt, inputs);
}

std::pair<CoefficientChoice, CoefficientChoice> thm12_proof_choices(
    const SchwarzschildModel& model) {
    CoefficientChoice first{model, -1.0, 0.0, 0.0};
    CoefficientChoice second{model, 0.0, 1.0 / model.cp(), 0.0};
    double a = model.a();
    if (model.k() == 0.0) {
        second.C1 = (a + 1.0) * model.r0() / a;
    } else if (model.k() == 1.0) {
        second.C1 = 0.0;
    } else {
        double eta0 = model.eta(model.r0());
        second.C1 = model.m() * eta0 / (1.0 - a * eta0);
    }
    return {first, second};
}

}  // namespace pcapm
