#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "inequalities.hpp"
#include "monotone.hpp"
#include "rng.hpp"
#include "runner.hpp"
#include "scenario.hpp"

namespace pcapm {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string g3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = lo * std::exp(step * i);
    g.front() = lo;
    g.back() = hi;
    return g;
}

SchwarzschildModel draw_model(Rng& rng) {
    double a = rng.uniform(0.3, 2.5);
    double cp = rng.uniform(0.3, 3.0);
    double sel = rng.uniform();
    double k;
    if (sel < 0.1)
        k = 0.0;
    else if (sel < 0.2)
        k = 1.0;
    else
        k = rng.uniform(-0.9, 0.995);
    return SchwarzschildModel::from_capacity(PExponent::from_a(a), cp, k);
}

// Boundary value of the admissibility threshold: alpha >= 0 on [r0, inf)
// iff C2 >= 0 and C2 cp >= C1 * xi_at_r0. Returns +inf at k = 1, where the
// condition degenerates to C1 <= 0.
double xi_at_r0(const SchwarzschildModel& model) {
    if (model.k() == 0.0) return model.a() / ((model.a() + 1.0) * model.r0());
    double eta0 = model.eta(model.r0());
    return (1.0 - model.a() * eta0) / (model.m() * eta0);
}

// Sign sampling of alpha on the same 400-point grid and with the same
// roundoff floor that alpha_nonneg uses for its internal cross-check.
bool sampled_alpha_nonneg(const CoefficientChoice& ch) {
    const SchwarzschildModel& model = ch.model;
    const int n = 400;
    double r0 = model.r0();
    double step = std::pow(1e4, 1.0 / (n - 1));
    double t = r0;
    for (int i = 0; i < n; ++i) {
        Coefficients c = coefficients(ch, t);
        double scale;
        if (model.k() == 0.0) {
            scale = std::fabs(ch.C2) * std::pow(t, model.a() + 1.0) +
                    std::fabs(ch.C1) / (model.a() + 1.0);
        } else {
            double m = model.m();
            double x = m / (2.0 * t);
            double ratio = model.one_minus_level(t);
            double pre = t * (1.0 + x) * (1.0 + x);
            scale = pre * (std::fabs((ch.C2 * model.cp() +
                                      ch.C1 * (model.a() / m) * ratio) *
                                     model.eta(t)) +
                           std::fabs(ch.C1 / m));
        }
        if (c.alpha < -1e-10 * (scale + 1e-300)) return false;
        t *= step;
    }
    return true;
}

CheckResult check_capacity_coupling(const VerifyOptions& opt) {
    double worst = 0.0;
    for (double p : {1.5, 2.0, 2.5})
        for (double m : {0.5, 1.0, 2.0})
            for (double f : {0.5, 1.0, 3.0}) {
                double r0 = f * m;
                PExponent params = PExponent::from_p(p);
                auto metric = RadialConformalMetric::schwarzschild(m, r0);
                auto sol = CapacitarySolution::solve(metric, params);
                double I = incomplete_I(params.a, m / (2.0 * r0));
                double rel =
                    std::fabs(m - 2.0 * std::pow(I * sol.cp(), 1.0 / params.a)) / m;
                worst = std::max(worst, rel);
            }
    bool pass = worst < 1e-8 * opt.tol_scale;
    return {"acceptance.01-capacity-coupling", pass,
            "27 backgrounds, max relative mass mismatch " + g3(worst)};
}

CheckResult check_p2_closed_form(const VerifyOptions& opt) {
    double worst = 0.0;
    struct Case {
        double m, r0;
    };
    for (Case c : {Case{1.0, 0.8}, Case{2.0, 1.0}, Case{-0.5, 1.0}}) {
        PExponent params = PExponent::from_p(2.0);
        auto metric = RadialConformalMetric::schwarzschild(c.m, c.r0);
        auto sol = CapacitarySolution::solve(metric, params);
        double c2 = c.r0 + 0.5 * c.m;
        worst = std::max(worst, std::fabs(sol.cp() - c2));
        for (int i = 0; i < 100; ++i) {
            double r = c.r0 * std::pow(1e4, i / 99.0);
            double expect = 1.0 - c2 / (r + 0.5 * c.m);
            worst = std::max(worst, std::fabs(sol.u(r) - expect));
        }
    }
    bool pass = worst < 1e-9 * opt.tol_scale;
    return {"acceptance.02-p2-closed-form", pass,
            "3 backgrounds x 100 radii, max absolute deviation " + g3(worst)};
}

CheckResult check_beta_identity(const VerifyOptions& opt) {
    double worst = 0.0;
    for (int i = 1; i <= 20; ++i) {
        double a = 0.2 + 7.8 * i / 20.0;
        worst = std::max(worst, std::fabs(beta_identity_residual(a)));
    }
    double exact = std::max(std::fabs(incomplete_I(1.0, 1.0) - 0.5),
                            std::fabs(incomplete_I(2.0, 1.0) - 1.0 / 12.0));
    bool pass = worst < 1e-9 * opt.tol_scale && exact < 1e-12 * opt.tol_scale;
    return {"acceptance.03-beta-identity", pass,
            "max residual " + g3(worst) + ", rational cases off by " + g3(exact)};
}

CheckResult check_ode_exactness(const VerifyOptions& opt) {
    Rng rng(opt.seed);
    double worst1 = 0.0, worst2 = 0.0;
    for (int i = 0; i < 1000; ++i) {
        SchwarzschildModel model = draw_model(rng);
        double C2 = rng.uniform(0.0, 2.0);
        double C1 = (model.k() == 1.0)
                        ? -rng.uniform(0.0, 3.0)
                        : C2 * model.cp() / xi_at_r0(model) - rng.uniform(0.0, 3.0);
        CoefficientChoice ch{model, C1, C2, rng.uniform(-1.0, 1.0)};
        double t = model.r0() * std::exp(rng.uniform(std::log(1.05), std::log(100.0)));
        OdeResidual res = ode_residual(ch, t);
        worst1 = std::max({worst1, std::fabs(res.r1) / (res.scale1 + 1e-300),
                           std::fabs(res.r2) / (res.scale2 + 1e-300),
                           std::fabs(res.r3) / (res.scale3 + 1e-300)});
        worst2 = std::max(worst2, std::fabs(alpha_ode2_residual(ch, t)));
        worst2 = std::max(worst2, std::fabs(alpha_special_residual(model, t)));
    }
    bool pass = worst1 < 1e-6 * opt.tol_scale && worst2 < 1e-5 * opt.tol_scale;
    return {"acceptance.04-ode-exactness", pass,
            "1000 samples, max scaled residuals: system " + g3(worst1) +
                ", second order " + g3(worst2)};
}

CheckResult check_alpha_criterion(const VerifyOptions& opt) {
    Rng rng(opt.seed + 1);
    int mismatches = 0, n_nonneg = 0, n_negative = 0;
    for (int i = 0; i < 200; ++i) {
        int mode = i % 4;
        SchwarzschildModel model =
            (mode == 2) ? SchwarzschildModel::from_capacity(
                              PExponent::from_a(rng.uniform(0.5, 2.0)),
                              rng.uniform(0.5, 2.0), rng.uniform(-0.5, 0.9))
                        : draw_model(rng);
        double cp = model.cp();
        double C1 = 0.0, C2 = 0.0;
        if (mode == 0) {
            C2 = rng.uniform(0.0, 2.0);
            C1 = (model.k() == 1.0) ? -rng.uniform(0.05, 3.0)
                                    : C2 * cp / xi_at_r0(model) - rng.uniform(0.05, 3.0);
        } else if (mode == 1) {
            C2 = rng.uniform(0.1, 2.0);
            C1 = (model.k() == 1.0) ? 0.0 : C2 * cp / xi_at_r0(model);
        } else if (mode == 2) {
            C2 = -rng.uniform(0.05, 2.0);
            C1 = rng.uniform(-2.0, 2.0);
        } else {
            C2 = rng.uniform(0.0, 2.0);
            double base = (model.k() == 1.0) ? 0.0 : C2 * cp / xi_at_r0(model);
            C1 = base + rng.uniform(0.1, 2.0) * std::max(1.0, std::fabs(base));
        }
        CoefficientChoice ch{model, C1, C2, 0.0};
        bool pred = false, pred_ok = true;
        try {
            pred = alpha_nonneg(ch);
        } catch (const error&) {
            pred_ok = false;
        }
        bool sampled = sampled_alpha_nonneg(ch);
        if (!pred_ok || pred != sampled) ++mismatches;
        (sampled ? n_nonneg : n_negative)++;
    }
    bool pass = mismatches == 0 && n_nonneg >= 50 && n_negative >= 50;
    return {"acceptance.05-alpha-criterion", pass,
            "200 choices (" + std::to_string(n_nonneg) + " nonnegative, " +
                std::to_string(n_negative) + " negative), " +
                std::to_string(mismatches) + " predicate/sampling mismatches"};
}

CheckResult check_background_rigidity(const VerifyOptions& opt) {
    double worst = 0.0;
    for (double p : {1.5, 2.0, 2.5})
        for (double k : {0.25, 0.5, 1.0}) {
            double m = 1.0, r0 = m / (2.0 * k);
            PExponent params = PExponent::from_p(p);
            auto metric = RadialConformalMetric::schwarzschild(m, r0);
            auto sol = CapacitarySolution::solve(metric, params);
            auto model = SchwarzschildModel::from_mass(params, m, r0);
            std::vector<CoefficientChoice> choices;
            if (k == 1.0) {
                choices.push_back({model, -1.0, 0.0, 0.0});
                choices.push_back({model, 0.0, 1.0 / model.cp(), 0.0});
            } else {
                auto pr = thm12_proof_choices(model);
                choices = {pr.first, pr.second};
            }
            std::vector<double> grid = log_grid(r0, 1000.0 * r0, 256);
            for (const CoefficientChoice& ch : choices) {
                ScanOptions sopt;
                sopt.threads = opt.threads;
                ScanReport rep = monotonicity_scan(sol, ch, grid, sopt);
                double scale = 4.0 * kPi * (std::fabs(coefficients(ch, r0).gamma) + 1.0);
                worst = std::max(worst, rep.max_abs_F / scale);
            }
        }
    bool pass = worst < 1e-7 * opt.tol_scale;
    return {"acceptance.06-background-rigidity", pass,
            "18 background scans, max scaled |F| " + g3(worst)};
}

CheckResult check_monotonicity(const VerifyOptions& opt) {
    PExponent params = PExponent::from_p(2.0);
    double worst_diff = 0.0;
    double worst_margin = 1e300;
    std::string first_fail;
    for (double b : {0.05, 0.1}) {
        auto metric = RadialConformalMetric::perturbed(1.0, b, 1.0);
        auto sol = CapacitarySolution::solve(metric, params);
        double adm = metric.adm_mass();
        SphereGeometry g0 = metric.sphere_geometry(metric.r0());
        double W = 1.0 - g0.area * g0.H * g0.H / (16.0 * kPi);
        auto model1 = SchwarzschildModel::from_capacity(params, sol.cp(), 1.0);
        auto modelw = SchwarzschildModel::from_capacity(params, sol.cp(), solve_k(W));
        auto prw = thm12_proof_choices(modelw);
        std::vector<std::pair<std::string, CoefficientChoice>> cases = {
            {"thm11-a", CoefficientChoice{model1, -1.0, 0.0, 0.0}},
            {"thm11-b", CoefficientChoice{model1, 0.0, 1.0 / model1.cp(), 0.0}},
            {"thm12-a", prw.first},
            {"thm12-b", prw.second},
        };
        for (const auto& [label, ch] : cases) {
            double mr0 = ch.model.r0();
            std::vector<double> grid = log_grid(mr0, 1000.0 * mr0, 256);
            ScanOptions sopt;
            sopt.threads = opt.threads;
            sopt.tol_mono_factor = 1e-7 * opt.tol_scale;
            sopt.bound_tol_factor = 1e-4 * opt.tol_scale;
            sopt.adm_mass = adm;
            ScanReport rep = monotonicity_scan(sol, ch, grid, sopt);
            if (!(rep.monotone_pass && rep.bound_available && rep.bound_pass) &&
                first_fail.empty())
                first_fail = label + " at b=" + g3(b);
            worst_diff =
                std::max(worst_diff, rep.max_forward_diff / (1.0 + rep.max_abs_F));
            worst_margin = std::min(worst_margin, rep.F_final - rep.limit_bound);
        }
    }
    bool pass = first_fail.empty();
    return {"acceptance.07-monotonicity", pass,
            pass ? "8 perturbed scans, max scaled forward diff " + g3(worst_diff) +
                       ", min limit margin " + g3(worst_margin)
                 : "first failing scan: " + first_fail};
}

CheckResult check_flat_degenerations(const VerifyOptions& opt) {
    double worst = 0.0;
    for (double p : {1.5, 2.0, 2.5}) {
        PExponent params = PExponent::from_p(p);
        auto metric = RadialConformalMetric::euclidean(1.0);
        auto sol = CapacitarySolution::solve(metric, params);
        auto model = SchwarzschildModel::from_capacity(params, sol.cp(), 0.0);
        double a = params.a, cp = model.cp();
        std::vector<CoefficientChoice> choices = {
            {model, 0.0, 1.0 / cp, 0.0},
            {model, -a * (a + 1.0) / cp, 0.0, 0.0},
        };
        std::vector<double> grid = log_grid(1.0, 1000.0, 128);
        for (const CoefficientChoice& ch : choices) {
            ScanOptions sopt;
            sopt.threads = opt.threads;
            ScanReport rep = monotonicity_scan(sol, ch, grid, sopt);
            worst = std::max(worst, rep.max_abs_F);
        }
    }
    bool pass = worst < 1e-9 * opt.tol_scale;
    return {"acceptance.08-flat-degenerations", pass,
            "6 flat scans, max |F| " + g3(worst)};
}

CheckResult check_equality_cases(const VerifyOptions& opt) {
    IneqOptions iopt;
    iopt.tol_ineq_factor = 1e-8 * opt.tol_scale;
    iopt.eq_tol_factor = 1e-6 * opt.tol_scale;
    std::vector<std::string> problems;
    auto expect = [&](const InequalityReport& rep, bool want_equality, const char* tag) {
        if (!rep.satisfied)
            problems.push_back(std::string(tag) + " " + rep.name + " unsatisfied");
        else if (want_equality && !rep.equality)
            problems.push_back(std::string(tag) + " " + rep.name +
                               " missed equality, slack " + g3(rep.slack));
        else if (!want_equality && !(rep.slack > 0.0 && !rep.equality))
            problems.push_back(std::string(tag) + " " + rep.name +
                               " slack not strictly positive: " + g3(rep.slack));
    };
    {
        PExponent params = PExponent::from_p(2.5);
        auto metric = RadialConformalMetric::schwarzschild(1.0, 1.0);
        auto sol = CapacitarySolution::solve(metric, params);
        auto model = SchwarzschildModel::from_mass(params, 1.0, 1.0);
        SurfaceData boundary = sol.sample_level_surface(model, model.r0());
        auto t12 = thm12_inequalities(sol, model, boundary, iopt);
        expect(t12.first, true, "matched");
        expect(t12.second, true, "matched");
        auto t13 = thm13_bounds(sol, boundary, iopt);
        expect(t13.first, true, "matched");
        expect(t13.second, true, "matched");
        expect(corollary_reports(sol, model, thm12_proof_choices(model).second, boundary,
                                 iopt),
               true, "matched");
    }
    {
        PExponent params = PExponent::from_p(1.5);
        auto metric = RadialConformalMetric::schwarzschild(1.0, 0.5);
        auto sol = CapacitarySolution::solve(metric, params);
        auto model = SchwarzschildModel::from_mass(params, 1.0, 0.5);
        SurfaceData boundary = sol.sample_level_surface(model, model.r0());
        auto t11 = thm11_inequalities(sol, model, boundary, iopt);
        expect(t11.first, true, "horizon");
        expect(t11.second, true, "horizon");
        auto t13 = thm13_bounds(sol, boundary, iopt);
        expect(t13.first, true, "horizon");
        expect(t13.second, true, "horizon");
        auto t14 = thm14_bounds(sol, boundary, iopt);
        expect(t14.first, true, "horizon");
        expect(t14.second, true, "horizon");
        expect(corollary_reports(sol, model, CoefficientChoice{model, -1.0, 0.0, 0.0},
                                 boundary, iopt),
               true, "horizon");
    }
    {
        PExponent params = PExponent::from_p(2.0);
        auto metric = RadialConformalMetric::perturbed(1.0, 0.1, 1.0);
        auto sol = CapacitarySolution::solve(metric, params);
        SphereGeometry g0 = metric.sphere_geometry(metric.r0());
        double W = 1.0 - g0.area * g0.H * g0.H / (16.0 * kPi);
        auto model = SchwarzschildModel::from_capacity(params, sol.cp(), solve_k(W));
        SurfaceData boundary = sol.sample_level_surface(model, model.r0());
        auto t12 = thm12_inequalities(sol, model, boundary, iopt);
        expect(t12.first, false, "deficit");
        expect(t12.second, false, "deficit");
        auto t13 = thm13_bounds(sol, boundary, iopt);
        expect(t13.first, false, "deficit");
        expect(t13.second, false, "deficit");
    }
    {
        double b = 0.1;
        PExponent params = PExponent::from_p(2.0);
        auto metric =
            RadialConformalMetric::perturbed(1.0 + 3.0 * b / std::exp(1.0), b, 1.0);
        auto sol = CapacitarySolution::solve(metric, params);
        auto model = SchwarzschildModel::from_capacity(params, sol.cp(), 1.0);
        SurfaceData boundary = sol.sample_level_surface(model, model.r0());
        auto t11 = thm11_inequalities(sol, model, boundary, iopt);
        expect(t11.first, false, "minimal");
        expect(t11.second, false, "minimal");
        auto t13 = thm13_bounds(sol, boundary, iopt);
        expect(t13.first, false, "minimal");
        expect(t13.second, false, "minimal");
        auto t14 = thm14_bounds(sol, boundary, iopt);
        expect(t14.first, false, "minimal");
        expect(t14.second, false, "minimal");
    }
    bool pass = problems.empty();
    std::string detail = "equality on matched backgrounds, strict slack on perturbed";
    if (!pass) {
        detail = std::to_string(problems.size()) + " problems; first: " + problems.front();
    }
    return {"acceptance.09-equality-cases", pass, detail};
}

CheckResult check_willmore_solve(const VerifyOptions& opt) {
    double worst = 0.0;
    for (int i = 1; i <= 100; ++i) {
        double W = -3.0 + 4.0 * i / 100.0;
        double k = solve_k(W);
        double resid = std::fabs(4.0 * k / ((1.0 + k) * (1.0 + k)) - W);
        worst = std::max(worst, resid / std::max(1.0, std::fabs(W)));
    }
    bool exact = solve_k(1.0) == 1.0;
    bool pass = worst < 1e-12 * opt.tol_scale && exact;
    return {"acceptance.10-willmore-solve", pass,
            "100 deficits, max back-substitution residual " + g3(worst) +
                (exact ? ", W=1 maps to k=1 exactly" : ", W=1 did not map to k=1")};
}

CheckResult check_asymptotics(const VerifyOptions& opt) {
    double worst_slope = 0.0;
    for (double p : {1.5, 2.0, 2.5}) {
        PExponent params = PExponent::from_p(p);
        std::vector<RadialConformalMetric> metrics = {
            RadialConformalMetric::schwarzschild(1.0, 1.0),
            RadialConformalMetric::euclidean(1.0),
            RadialConformalMetric::perturbed(1.0, 0.1, 1.0),
            RadialConformalMetric::power_decay(0.8, 0.4, 1.0),
        };
        for (const RadialConformalMetric& metric : metrics) {
            auto sol = CapacitarySolution::solve(metric, params);
            AsymptoticDiagnostics d = sol.asymptotic_diagnostics();
            worst_slope =
                std::max(worst_slope, std::fabs(d.slope_u + params.a) / params.a);
            worst_slope = std::max(worst_slope, std::fabs(d.slope_grad + params.a + 1.0) /
                                                    (params.a + 1.0));
        }
    }
    double worst_xi = 0.0;
    struct XiCase {
        double a, k, cp;
    };
    for (XiCase c : {XiCase{0.5, 0.5, 1.3}, XiCase{1.0, 1.0, 1.0},
                     XiCase{2.0, -0.3, 0.7}, XiCase{1.5, 0.0, 2.0}}) {
        auto model = SchwarzschildModel::from_capacity(PExponent::from_a(c.a), c.cp, c.k);
        double t = 1000.0 * model.r0();
        double lim = 1.0 / (c.a + 1.0);
        worst_xi = std::max(
            worst_xi, std::fabs(model.xi(t) * std::pow(t, c.a + 1.0) / c.cp - lim) / lim);
    }
    bool pass = worst_slope < 0.01 * opt.tol_scale && worst_xi < 0.005 * opt.tol_scale;
    return {"acceptance.11-asymptotics", pass,
            "12 potentials, max relative slope error " + g3(worst_slope) +
                "; max xi limit error " + g3(worst_xi)};
}

CheckResult check_determinism(const VerifyOptions&) {
    PExponent params = PExponent::from_p(2.2);
    auto metric = RadialConformalMetric::perturbed(1.0, 0.1, 1.0);
    auto sol = CapacitarySolution::solve(metric, params);
    SphereGeometry g0 = metric.sphere_geometry(metric.r0());
    double W = 1.0 - g0.area * g0.H * g0.H / (16.0 * kPi);
    auto model = SchwarzschildModel::from_capacity(params, sol.cp(), solve_k(W));
    CoefficientChoice ch = thm12_proof_choices(model).second;
    std::vector<double> grid = log_grid(model.r0(), 500.0 * model.r0(), 128);
    double adm = metric.adm_mass();
    auto run = [&](int threads) {
        ScanOptions sopt;
        sopt.threads = threads;
        sopt.adm_mass = adm;
        return monotonicity_scan(sol, ch, grid, sopt);
    };
    ScanReport rep1 = run(1);
    ScanReport rep4 = run(4);
    bool csv_same = scan_to_csv(rep1) == scan_to_csv(rep4);
    bool verdict_same = rep1.monotone_pass == rep4.monotone_pass &&
                        rep1.bound_pass == rep4.bound_pass &&
                        rep1.max_abs_F == rep4.max_abs_F &&
                        rep1.max_forward_diff == rep4.max_forward_diff;
    SurfaceData boundary = sol.sample_level_surface(model, model.r0());
    auto ia = thm12_inequalities(sol, model, boundary, {});
    auto ib = thm12_inequalities(sol, model, boundary, {});
    bool ineq_same = ia.first.lhs == ib.first.lhs && ia.first.rhs == ib.first.rhs &&
                     ia.second.lhs == ib.second.lhs && ia.second.rhs == ib.second.rhs;
    bool pass = csv_same && verdict_same && ineq_same;
    std::string detail = pass ? "1-thread and 4-thread scans byte-identical"
                              : std::string("mismatch:") + (csv_same ? "" : " csv") +
                                    (verdict_same ? "" : " verdict") +
                                    (ineq_same ? "" : " inequalities");
    return {"acceptance.12-determinism", pass, detail};
}

CheckResult check_coupling_roundtrip(const VerifyOptions& opt) {
    double worst = 0.0;
    struct Case {
        double p, m, r0;
    };
    for (Case c : {Case{1.7, 1.0, 0.9}, Case{2.4, -0.6, 1.2}, Case{1.5, 2.0, 1.0},
                   Case{2.0, 1.0, 5000.0}, Case{2.2, 0.0, 0.7}}) {
        PExponent params = PExponent::from_p(c.p);
        auto m1 = SchwarzschildModel::from_mass(params, c.m, c.r0);
        auto m2 = SchwarzschildModel::from_capacity(params, m1.cp(), m1.k());
        worst = std::max(worst, std::fabs(m2.m() - c.m) / std::max(std::fabs(c.m), 1.0));
        worst = std::max(worst, std::fabs(m2.r0() - c.r0) / c.r0);
    }
    bool pass = worst < 1e-10 * opt.tol_scale;
    return {"property.coupling-roundtrip", pass,
            "5 mass/capacity roundtrips, max relative error " + g3(worst)};
}

CheckResult check_level_consistency(const VerifyOptions& opt) {
    double worst_lvl = 0.0, worst_fd = 0.0;
    struct Case {
        double a, cp, k;
    };
    for (Case c : {Case{0.8, 1.1, 0.6}, Case{1.5, 2.0, -0.45}, Case{0.5, 1.1, 1.0}}) {
        auto model = SchwarzschildModel::from_capacity(PExponent::from_a(c.a), c.cp, c.k);
        double r0 = model.r0();
        for (double f : {1.0, 1.3, 4.0, 50.0}) {
            double t = f * r0;
            worst_lvl =
                std::max(worst_lvl, std::fabs(model.level(t) - model.level_by_quadrature(t)));
            if (f < 1.2) continue;
            double h = 1e-6 * t;
            double fd = (model.level(t + h) - model.level(t - h)) / (2.0 * h);
            worst_fd = std::max(worst_fd, std::fabs(fd - model.level_derivative(t)) /
                                              model.level_derivative(t));
        }
    }
    bool pass = worst_lvl < 1e-10 * opt.tol_scale && worst_fd < 1e-6 * opt.tol_scale;
    return {"property.level-consistency", pass,
            "quadrature route off by " + g3(worst_lvl) + ", derivative FD off by " +
                g3(worst_fd)};
}

CheckResult check_xi_identity(const VerifyOptions& opt) {
    double worst = 0.0;
    struct Case {
        double a, cp, k;
    };
    for (Case c : {Case{1.7, 1.0, 0.4}, Case{0.6, 1.0, -0.25}, Case{1.0, 1.3, 0.8}}) {
        auto model = SchwarzschildModel::from_capacity(PExponent::from_a(c.a), c.cp, c.k);
        for (double f : {1.05, 3.0, 20.0}) {
            double t = f * model.r0();
            double xi = model.xi(t);
            worst = std::max(worst, std::fabs(xi - model.xi_by_identity(t)) / xi);
        }
    }
    bool pass = worst < 1e-9 * opt.tol_scale;
    return {"property.xi-identity", pass,
            "quadrature vs identity route, max relative gap " + g3(worst)};
}

CheckResult check_surface_identities(const VerifyOptions& opt) {
    double worst = 0.0;
    struct Case {
        double a, cp, k;
    };
    for (Case c : {Case{0.7, 1.2, 0.8}, Case{1.3, 0.9, -0.5}, Case{1.0, 1.0, 1.0}}) {
        auto model = SchwarzschildModel::from_capacity(PExponent::from_a(c.a), c.cp, c.k);
        for (double t : log_grid(model.r0(), 100.0 * model.r0(), 9)) {
            SurfaceData s = schwarzschild_surface(model, t);
            double x = model.m() / (2.0 * t);
            double w = 1.0 + x;
            auto rel = [](double got, double want) {
                return std::fabs(got - want) /
                       (std::fabs(got) + std::fabs(want) + 1e-300);
            };
            worst = std::max(worst, rel(s.area, 4.0 * kPi * t * t * w * w * w * w));
            worst = std::max(worst, rel(s.H, 2.0 * model.eta(t) * s.grad_u));
            worst = std::max(worst, rel(s.int_H_sq, s.H * s.H * s.area));
            worst = std::max(worst, rel(s.int_grad_sq, s.grad_u * s.grad_u * s.area));
            worst = std::max(worst, rel(s.int_H_grad, s.H * s.grad_u * s.area));
        }
    }
    bool pass = worst < 1e-13 * opt.tol_scale;
    return {"property.surface-identities", pass,
            "closed-form surface data, max relative gap " + g3(worst)};
}

CheckResult check_capacity_identity(const VerifyOptions& opt) {
    double worst = 0.0;
    std::vector<RadialConformalMetric> metrics = {
        RadialConformalMetric::schwarzschild(1.0, 0.8),
        RadialConformalMetric::euclidean(1.0),
        RadialConformalMetric::perturbed(1.0, 0.1, 1.0),
        RadialConformalMetric::power_decay(0.8, 0.4, 1.0),
    };
    for (double p : {1.7, 2.3})
        for (const RadialConformalMetric& metric : metrics) {
            PExponent params = PExponent::from_p(p);
            auto sol = CapacitarySolution::solve(metric, params);
            double want = std::pow(sol.cp(), p - 1.0);
            for (double f : {1.0, 2.7, 31.0}) {
                double r = f * metric.r0();
                double w = metric.w(r);
                double grad = sol.u_prime(r) / (w * w);
                double got =
                    metric.sphere_geometry(r).area * std::pow(grad, p - 1.0) / (4.0 * kPi);
                worst = std::max(worst, std::fabs(got - want) / want);
            }
        }
    bool pass = worst < 1e-11 * opt.tol_scale;
    return {"property.capacity-identity", pass,
            "level-set capacity integral constant to " + g3(worst) + " relative"};
}

CheckResult check_level_radius_roundtrip(const VerifyOptions& opt) {
    double worst = 0.0;
    bool boundary_exact = true;
    std::vector<RadialConformalMetric> metrics = {
        RadialConformalMetric::schwarzschild(1.0, 1.0),
        RadialConformalMetric::perturbed(1.0, 0.1, 1.0),
        RadialConformalMetric::power_decay(0.8, 0.4, 1.0),
    };
    for (const RadialConformalMetric& metric : metrics) {
        PExponent params = PExponent::from_p(2.1);
        auto sol = CapacitarySolution::solve(metric, params);
        boundary_exact = boundary_exact && sol.level_radius(0.0) == metric.r0();
        for (double r : log_grid(metric.r0(), 1e4 * metric.r0(), 7)) {
            double back = sol.level_radius(sol.u(r));
            worst = std::max(worst, std::fabs(back - r) / r);
        }
    }
    bool pass = worst < 1e-11 * opt.tol_scale && boundary_exact;
    return {"property.level-radius-roundtrip", pass,
            "max relative roundtrip error " + g3(worst) +
                (boundary_exact ? ", boundary level exact" : ", boundary level off")};
}

CheckResult check_F_reformulation(const VerifyOptions& opt) {
    PExponent params = PExponent::from_p(1.8);
    auto metric = RadialConformalMetric::perturbed(1.0, 0.1, 1.0);
    auto sol = CapacitarySolution::solve(metric, params);
    SphereGeometry g0 = metric.sphere_geometry(metric.r0());
    double W = 1.0 - g0.area * g0.H * g0.H / (16.0 * kPi);
    auto model = SchwarzschildModel::from_capacity(params, sol.cp(), solve_k(W));
    CoefficientChoice ch = thm12_proof_choices(model).second;
    double worst = 0.0;
    for (double t : log_grid(model.r0(), 200.0 * model.r0(), 12)) {
        MonotoneSample s = evaluate_F(sol, ch, t);
        worst = std::max(worst, std::fabs(s.F - s.F_alt) / (1.0 + std::fabs(s.F)));
    }
    bool pass = worst < 1e-8 * opt.tol_scale;
    return {"property.F-reformulation", pass,
            "direct vs completed-square evaluation, max scaled gap " + g3(worst)};
}

CheckResult check_prefactor_sign(const VerifyOptions& opt) {
    (void)opt;
    int bad = 0;
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) {
            double a = 0.25 + 2.75 * i / 19.0;
            double k = -0.9 + 1.85 * j / 19.0;
            if (k == 0.0) continue;
            if ((1.0 - a * boundary_eta(a, k)) * k <= 0.0) ++bad;
        }
    bool pass = bad == 0;
    return {"property.prefactor-sign", pass,
            "(1 - a eta(r0)) carries the sign of the mass on a 20x20 grid, " +
                std::to_string(bad) + " exceptions"};
}

CheckResult check_minimal_consistency(const VerifyOptions& opt) {
    double b = 0.1;
    PExponent params = PExponent::from_p(2.0);
    auto metric = RadialConformalMetric::perturbed(1.0 + 3.0 * b / std::exp(1.0), b, 1.0);
    auto sol = CapacitarySolution::solve(metric, params);
    auto model = SchwarzschildModel::from_capacity(params, sol.cp(), 1.0);
    SurfaceData boundary = sol.sample_level_surface(model, model.r0());
    auto t13 = thm13_bounds(sol, boundary, {});
    auto t14 = thm14_bounds(sol, boundary, {});
    auto rel = [](double x, double y) {
        return std::fabs(x - y) / (std::fabs(x) + std::fabs(y) + 1e-300);
    };
    double worst = std::max({rel(t13.first.lhs, t14.first.lhs),
                             rel(t13.first.rhs, t14.first.rhs),
                             rel(t13.second.lhs, t14.second.lhs),
                             rel(t13.second.rhs, t14.second.rhs)});
    bool pass = worst < 1e-10 * opt.tol_scale;
    return {"property.minimal-consistency", pass,
            "deficit route agrees with minimal-boundary route to " + g3(worst)};
}

CheckResult check_error_codes(const VerifyOptions& opt) {
    (void)opt;
    std::vector<std::string> wrong;
    auto expect = [&](errc code, const char* what, const std::function<void()>& fn) {
        try {
            fn();
            wrong.push_back(std::string(what) + ": no error");
        } catch (const error& e) {
            if (e.code() != code)
                wrong.push_back(std::string(what) + ": got " + errc_name(e.code()));
        }
    };
    expect(errc::domain, "p out of range", [] { PExponent::from_p(3.0); });
    expect(errc::guard, "k at the guard", [] { incomplete_I(0.5, -0.9999999); });
    expect(errc::domain, "deficit above 1", [] { solve_k(1.5); });
    expect(errc::domain, "boundary inside horizon",
           [] { RadialConformalMetric::schwarzschild(1.0, 0.4); });
    expect(errc::config, "scenario without metric",
           [] { parse_scenario_text("p = 2\n", "bad"); });
    {
        PExponent params = PExponent::from_p(2.0);
        auto metric = RadialConformalMetric::schwarzschild(1.0, 1.0);
        auto sol = CapacitarySolution::solve(metric, params);
        auto model = SchwarzschildModel::from_mass(params, 1.0, 1.0);
        SurfaceData boundary = sol.sample_level_surface(model, model.r0());
        expect(errc::not_minimal, "minimal bounds on a non-minimal boundary",
               [&] { thm14_bounds(sol, boundary, {}); });
        expect(errc::inadmissible, "negative C2",
               [&] { evaluate_F(sol, CoefficientChoice{model, 0.0, -1.0, 0.0}, 2.0); });
    }
    bool pass = wrong.empty();
    return {"property.error-codes", pass,
            pass ? "7 failure paths raise the documented codes"
                 : "unexpected: " + wrong.front()};
}

}  // namespace

std::vector<CheckResult> run_all_checks(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    auto guarded = [&](const char* name, const std::function<CheckResult()>& fn) {
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            out.push_back({name, false, std::string("exception: ") + e.what()});
        }
    };
    guarded("acceptance.01-capacity-coupling", [&] { return check_capacity_coupling(opt); });
    guarded("acceptance.02-p2-closed-form", [&] { return check_p2_closed_form(opt); });
    guarded("acceptance.03-beta-identity", [&] { return check_beta_identity(opt); });
    guarded("acceptance.04-ode-exactness", [&] { return check_ode_exactness(opt); });
    guarded("acceptance.05-alpha-criterion", [&] { return check_alpha_criterion(opt); });
    guarded("acceptance.06-background-rigidity",
            [&] { return check_background_rigidity(opt); });
    guarded("acceptance.07-monotonicity", [&] { return check_monotonicity(opt); });
    guarded("acceptance.08-flat-degenerations",
            [&] { return check_flat_degenerations(opt); });
    guarded("acceptance.09-equality-cases", [&] { return check_equality_cases(opt); });
    guarded("acceptance.10-willmore-solve", [&] { return check_willmore_solve(opt); });
    guarded("acceptance.11-asymptotics", [&] { return check_asymptotics(opt); });
    guarded("acceptance.12-determinism", [&] { return check_determinism(opt); });
    guarded("property.coupling-roundtrip", [&] { return check_coupling_roundtrip(opt); });
    guarded("property.level-consistency", [&] { return check_level_consistency(opt); });
    guarded("property.xi-identity", [&] { return check_xi_identity(opt); });
    guarded("property.surface-identities", [&] { return check_surface_identities(opt); });
    guarded("property.capacity-identity", [&] { return check_capacity_identity(opt); });
    guarded("property.level-radius-roundtrip",
            [&] { return check_level_radius_roundtrip(opt); });
    guarded("property.F-reformulation", [&] { return check_F_reformulation(opt); });
    guarded("property.prefactor-sign", [&] { return check_prefactor_sign(opt); });
    guarded("property.minimal-consistency",
            [&] { return check_minimal_consistency(opt); });
    guarded("property.error-codes", [&] { return check_error_codes(opt); });

    if (!opt.out_dir.empty()) {
        namespace fs = std::filesystem;
        std::error_code ec;
        fs::create_directories(opt.out_dir, ec);
        if (ec) fail(errc::io, "cannot create directory " + opt.out_dir);
        fs::path path = fs::path(opt.out_dir) / "verify.json";
        std::ofstream f(path, std::ios::binary);
        if (!f) fail(errc::io, "cannot open " + path.string() + " for writing");
        f << checks_to_json(out, opt);
        if (!f) fail(errc::io, "failed writing " + path.string());
    }
    return out;
}

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string checks_to_json(const std::vector<CheckResult>& checks,
                           const VerifyOptions& opt) {
    nlohmann::ordered_json j;
    j["seed"] = opt.seed;
    j["tol_scale"] = opt.tol_scale;
    j["threads"] = opt.threads;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const CheckResult& c : checks)
        list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = list;
    j["pass"] = all_pass(checks);
    return j.dump(2) + "\n";
}

std::string checks_to_text(const std::vector<CheckResult>& checks) {
    std::string out;
    for (const CheckResult& c : checks)
        out += std::string(c.pass ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
    return out;
}

}  // namespace pcapm
