#include "monotone.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"

namespace pcapm {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct CoeffParts {
    double x = 0.0;      // m / 2t
    double eta = 0.0;    // cp^{-1} t^a (1+x)^{2a-1} (1-x)
    double ratio = 0.0;  // I_a(m/2t) / I_a(k), or (cp/a) t^{-a} for k = 0
    double P = 0.0;      // cp^{-2} t^{2a} (1+x)^{4a}
    double Q = 0.0;      // C2 cp m/a + C1 ratio
};

CoeffParts coeff_parts(const SchwarzschildModel& model, double C1, double C2, double t) {
    double a = model.a();
    double cp = model.cp();
    double m = model.m();
    CoeffParts parts;
    parts.x = m / (2.0 * t);
    parts.eta = std::pow(t, a) * std::pow(1.0 + parts.x, 2.0 * a - 1.0) * (1.0 - parts.x) / cp;
    if (model.k() == 0.0)
        parts.ratio = (cp / a) * std::pow(t, -a);
    else
        parts.ratio = incomplete_I(a, parts.x, {}, 0.0) / model.Ia_k();
    parts.P = std::pow(t, 2.0 * a) * std::pow(1.0 + parts.x, 4.0 * a) / (cp * cp);
    parts.Q = C2 * cp * m / a + C1 * parts.ratio;
    return parts;
}

Coefficients assemble(const SchwarzschildModel& model, double C1, double C2, double C3,
                      double t, const CoeffParts& parts) {
    double a = model.a();
    double cp = model.cp();
    double m = model.m();
    Coefficients c;
    if (model.k() == 0.0) {
        c.alpha = C2 * std::pow(t, a + 1.0) - C1 / (a + 1.0);
    } else {
        double one_px = 1.0 + parts.x;
        c.alpha = t * one_px * one_px *
                  ((C2 * cp + C1 * (a / m) * parts.ratio) * parts.eta - C1 / m);
    }
    c.beta = -parts.eta * c.alpha + parts.Q * parts.P;
    c.gamma = -parts.eta * c.alpha / parts.P - parts.Q + C3;
    return c;
}

void check_t(const SchwarzschildModel& model, double t) {
    require(t >= model.r0() * (1.0 - 1e-12), errc::domain,
            "coefficients are defined for t >= r0=" + std::to_string(model.r0()));
}

// Predicate-only admissibility test, shared by evaluate_F so per-sample checks
// stay cheap; alpha_nonneg adds the sampled sign cross-check.
bool admissible_predicate(const CoefficientChoice& choice) {
    const SchwarzschildModel& model = choice.model;
    double a = model.a();
    double cp = model.cp();
    double m = model.m();
    double C1 = choice.C1, C2 = choice.C2;
    double c2_scale = std::fabs(C2) * cp + std::fabs(C1) + 1.0;
    if (C2 * cp < -1e-14 * c2_scale) return false;
    if (model.k() == 0.0) {
        double lhs = C2 * std::pow(model.r0(), a + 1.0);
        double rhs = C1 / (a + 1.0);
        return lhs - rhs >= -1e-12 * (std::fabs(lhs) + std::fabs(rhs) + 1e-300);
    }
    if (model.k() == 1.0) {
        return C1 <= 1e-14 * c2_scale;
    }
    double eta0 = model.eta(model.r0());
    double lhs = (C2 * cp + C1 * a / m) * eta0;
    double rhs = C1 / m;
    return lhs - rhs >= -1e-12 * (std::fabs(lhs) + std::fabs(rhs) + 1e-300);
}

MonotoneSample evaluate_F_unchecked(const CapacitarySolution& sol,
                                    const CoefficientChoice& choice, double t) {
    const SchwarzschildModel& model = choice.model;
    check_t(model, t);
    MonotoneSample s;
    s.t = t;
    s.surface = sol.sample_level_surface(model, t);
    CoeffParts parts = coeff_parts(model, choice.C1, choice.C2, t);
    s.coef = assemble(model, choice.C1, choice.C2, choice.C3, t, parts);

    s.F = 4.0 * kPi * s.coef.gamma + s.coef.alpha * s.surface.int_H_grad +
          s.coef.beta * s.surface.int_grad_sq;

    if (parts.eta == 0.0) {
        s.F_alt = s.F;
        return s;
    }
    double sq = s.surface.int_H_sq - 4.0 * parts.eta * s.surface.int_H_grad +
                4.0 * parts.eta * parts.eta * s.surface.int_grad_sq;
    double one_px = 1.0 + parts.x;
    double one_mx = 1.0 - parts.x;
    double geom = one_mx * one_mx / (one_px * one_px) - 1.0;
    double a_over_eta = s.coef.alpha / parts.eta;
    s.F_alt = -parts.Q * (4.0 * kPi - parts.P * s.surface.int_grad_sq) -
              0.25 * a_over_eta * sq - 0.25 * a_over_eta * (16.0 * kPi - s.surface.int_H_sq) -
              4.0 * kPi * a_over_eta * geom + 4.0 * kPi * choice.C3;
    return s;
}

}  // namespace

Coefficients coefficients(const CoefficientChoice& choice, double t) {
    check_t(choice.model, t);
    if (choice.model.k() == 0.0)
        return coefficients_k0(choice.model.params(), choice.model.cp(), choice.C1, choice.C2,
                               choice.C3, t);
    CoeffParts parts = coeff_parts(choice.model, choice.C1, choice.C2, t);
    Coefficients c = assemble(choice.model, choice.C1, choice.C2, choice.C3, t, parts);
    require_finite(c.alpha, "alpha");
    require_finite(c.beta, "beta");
    require_finite(c.gamma, "gamma");
    return c;
}

Coefficients coefficients_k0(const PExponent& params, double cp, double C1, double C2,
                             double C3, double t) {
    require(cp > 0.0, errc::domain, "capacity constant cp must be positive");
    double a = params.a;
    double r0 = std::pow(cp / a, 1.0 / a);
    require(t >= r0 * (1.0 - 1e-12), errc::domain,
            "coefficients are defined for t >= r0=" + std::to_string(r0));
    Coefficients c;
    c.alpha = C2 * std::pow(t, a + 1.0) - C1 / (a + 1.0);
    c.beta = C1 * (2.0 * a + 1.0) * std::pow(t, a) / (a * (a + 1.0) * cp) -
             C2 * std::pow(t, 2.0 * a + 1.0) / cp;
    c.gamma = -C2 * cp * t - C1 * cp * std::pow(t, -a) / (a * (a + 1.0)) + C3;
    return c;
}

OdeResidual ode_residual(const CoefficientChoice& choice, double t) {
    const SchwarzschildModel& model = choice.model;
    double h = std::max(1e-5 * t, 1e-7);
    require(t - h >= model.r0() * (1.0 - 1e-12), errc::domain,
            "residual stencil must stay inside [r0, infinity)");
    Coefficients cm = coefficients(choice, t - h);
    Coefficients c0 = coefficients(choice, t);
    Coefficients cpn = coefficients(choice, t + h);
    double da = (cpn.alpha - cm.alpha) / (2.0 * h);
    double db = (cpn.beta - cm.beta) / (2.0 * h);
    double dg = (cpn.gamma - cm.gamma) / (2.0 * h);

    double a = model.a();
    double eta = model.eta(t);
    double fp = model.level_derivative(t);

    OdeResidual r;
    double t1 = (2.0 * a + 1.0) * eta * fp * c0.alpha;
    double t2 = a * fp * c0.beta;
    r.r1 = da - t1 - t2;
    r.scale1 = std::fabs(da) + std::fabs(t1) + std::fabs(t2);
    double t3 = (2.0 * a + 1.0) * eta * eta * fp * c0.alpha;
    r.r2 = db + t3;
    r.scale2 = std::fabs(db) + std::fabs(t3);
    double t4 = fp * c0.alpha;
    r.r3 = dg + t4;
    r.scale3 = std::fabs(dg) + std::fabs(t4);
    return r;
}

namespace {

double ode2_residual_of(const std::function<double(double)>& alpha,
                        const SchwarzschildModel& model, double t) {
    double h = std::max(1e-3 * t, 1e-7);
    require(t - 2.0 * h >= model.r0() * (1.0 - 1e-12), errc::domain,
            "residual stencil must stay inside [r0, infinity)");
    double am2 = alpha(t - 2.0 * h), am = alpha(t - h), a0 = alpha(t);
    double ap = alpha(t + h), ap2 = alpha(t + 2.0 * h);
    double d1 = (am2 - 8.0 * am + 8.0 * ap - ap2) / (12.0 * h);
    double d2 = (-am2 + 16.0 * am - 30.0 * a0 + 16.0 * ap - ap2) / (12.0 * h * h);
    double a = model.a();
    double x = model.m() / (2.0 * t);
    double one_px = 1.0 + x;
    double t1 = t * t * one_px * one_px * d2;
    double t2 = t * one_px * (-a + (a + 2.0) * x) * d1;
    double t3 = -2.0 * (2.0 * a + 1.0) * x * a0;
    double scale = std::fabs(t1) + std::fabs(t2) + std::fabs(t3) + 1e-300;
    return (t1 + t2 + t3) / scale;
}

}  // namespace

double alpha_ode2_residual(const CoefficientChoice& choice, double t) {
    auto alpha = [&](double s) { return coefficients(choice, s).alpha; };
    return ode2_residual_of(alpha, choice.model, t);
}

double alpha_special_residual(const SchwarzschildModel& model, double t) {
    double a = model.a();
    double m = model.m();
    auto alpha = [a, m](double s) {
        double x = m / (2.0 * s);
        return std::pow(s, a + 1.0) * std::pow(1.0 + x, 2.0 * a + 1.0) * (1.0 - x);
    };
    return ode2_residual_of(alpha, model, t);
}

bool alpha_nonneg(const CoefficientChoice& choice) {
    const SchwarzschildModel& model = choice.model;
    bool pred = admissible_predicate(choice);

    const int n = 400;
    double r0 = model.r0();
    double ratio = std::pow(1e4, 1.0 / (n - 1));
    double t = r0;
    bool sampled_negative = false;
    for (int i = 0; i < n; ++i) {
        CoeffParts parts = coeff_parts(model, choice.C1, choice.C2, t);
        Coefficients c = assemble(model, choice.C1, choice.C2, choice.C3, t, parts);
        double scale;
        if (model.k() == 0.0) {
            scale = std::fabs(choice.C2) * std::pow(t, model.a() + 1.0) +
                    std::fabs(choice.C1) / (model.a() + 1.0);
        } else {
            double m = model.m();
            double pre = t * (1.0 + parts.x) * (1.0 + parts.x);
            scale = pre * (std::fabs((choice.C2 * model.cp() +
                                      choice.C1 * (model.a() / m) * parts.ratio) *
                                     parts.eta) +
                           std::fabs(choice.C1 / m));
        }
        if (c.alpha < -1e-10 * (scale + 1e-300)) {
            sampled_negative = true;
            break;
        }
        t *= ratio;
    }
    require(!(pred && sampled_negative), errc::internal,
            "admissibility predicate holds but sampled alpha is negative near t=" +
                std::to_string(t));
    return pred;
}

MonotoneSample evaluate_F(const CapacitarySolution& sol, const CoefficientChoice& choice,
                          double t) {
    require(admissible_predicate(choice), errc::inadmissible,
            "coefficient choice violates the admissibility condition");
    return evaluate_F_unchecked(sol, choice, t);
}

ScanReport monotonicity_scan(const CapacitarySolution& sol, const CoefficientChoice& choice,
                             const std::vector<double>& grid, const ScanOptions& opt) {
    require(!grid.empty(), errc::invalid_arg, "scan grid is empty");
    require(grid.front() >= choice.model.r0() * (1.0 - 1e-12), errc::domain,
            "scan grid must start at or above r0");
    for (size_t i = 1; i < grid.size(); ++i)
        require(grid[i] > grid[i - 1], errc::invalid_arg, "scan grid must be increasing");
    require(alpha_nonneg(choice), errc::inadmissible,
            "coefficient choice violates the admissibility condition");

    int n = static_cast<int>(grid.size());
    std::vector<MonotoneSample> samples(n);
    parallel_for(n, opt.threads, [&](int i) {
        samples[i] = evaluate_F_unchecked(sol, choice, grid[i]);
    });

    ScanReport rep;
    rep.rows.resize(n);
    for (int i = 0; i < n; ++i) {
        const MonotoneSample& s = samples[i];
        ScanRow& row = rep.rows[i];
        row.t = s.t;
        row.level = 1.0 - choice.model.one_minus_level(s.t);
        row.r = s.surface.r;
        row.area = s.surface.area;
        row.H = s.surface.H;
        row.grad_u = s.surface.grad_u;
        row.int_H_grad = s.surface.int_H_grad;
        row.int_grad_sq = s.surface.int_grad_sq;
        row.int_H_sq = s.surface.int_H_sq;
        row.alpha = s.coef.alpha;
        row.beta = s.coef.beta;
        row.gamma = s.coef.gamma;
        row.F = s.F;
        require_finite(row.F, "F at t=" + std::to_string(row.t));
        rep.max_abs_F = std::max(rep.max_abs_F, std::fabs(row.F));
    }
    for (int i = 0; i + 1 < n; ++i) {
        rep.rows[i].dF_forward = rep.rows[i + 1].F - rep.rows[i].F;
        rep.max_forward_diff = std::max(rep.max_forward_diff, rep.rows[i].dF_forward);
    }
    rep.tol_mono = opt.tol_mono_factor * (1.0 + rep.max_abs_F);
    rep.monotone_pass = rep.max_forward_diff <= rep.tol_mono;
    rep.F_first = rep.rows.front().F;
    rep.F_final = rep.rows.back().F;

    if (opt.adm_mass.has_value()) {
        rep.bound_available = true;
        rep.adm_mass = *opt.adm_mass;
        rep.limit_bound = -8.0 * kPi * choice.C2 * choice.model.cp() *
                          (rep.adm_mass - choice.model.m());
        rep.bound_tol = opt.bound_tol_factor * (1.0 + std::fabs(rep.limit_bound));
        rep.bound_pass = rep.F_final >= rep.limit_bound - rep.bound_tol;
    }
    return rep;
}

}  // namespace pcapm
