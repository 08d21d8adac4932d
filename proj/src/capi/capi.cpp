#include "pcapm/pcapm.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "../core/errors.hpp"
#include "../core/inequalities.hpp"
#include "../core/monotone.hpp"
#include "../core/runner.hpp"
#include "../core/scenario.hpp"
#include "../core/verify.hpp"

struct pcapm_metric {
    pcapm::RadialConformalMetric impl;
};

struct pcapm_model {
    pcapm::SchwarzschildModel impl;
};

struct pcapm_solution {
    pcapm::CapacitarySolution impl;
};

namespace {

thread_local std::string g_last_error;

pcapm_status map_code(pcapm::errc code) {
    using pcapm::errc;
    switch (code) {
        case errc::ok: return PCAPM_OK;
        case errc::invalid_arg: return PCAPM_ERR_INVALID_ARG;
        case errc::domain: return PCAPM_ERR_DOMAIN;
        case errc::guard: return PCAPM_ERR_GUARD;
        case errc::quadrature: return PCAPM_ERR_QUADRATURE;
        case errc::nonconvergent: return PCAPM_ERR_NONCONVERGENT;
        case errc::bracket: return PCAPM_ERR_BRACKET;
        case errc::inadmissible: return PCAPM_ERR_INADMISSIBLE;
        case errc::not_minimal: return PCAPM_ERR_NOT_MINIMAL;
        case errc::positivity: return PCAPM_ERR_POSITIVITY;
        case errc::config: return PCAPM_ERR_CONFIG;
        case errc::io: return PCAPM_ERR_IO;
        case errc::nan_result: return PCAPM_ERR_NAN;
        case errc::internal: return PCAPM_ERR_INTERNAL;
    }
    return PCAPM_ERR_INTERNAL;
}

template <class F>
pcapm_status guarded(F&& fn) {
    try {
        fn();
        return PCAPM_OK;
    } catch (const pcapm::error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PCAPM_ERR_INTERNAL;
    }
}

pcapm_status arg_error(const char* msg) {
    g_last_error = msg;
    return PCAPM_ERR_INVALID_ARG;
}

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    pcapm::require(p != nullptr, pcapm::errc::internal, "allocation failure");
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

}  // namespace

extern "C" {

const char* pcapm_version(void) { return "0.1.0"; }

const char* pcapm_last_error(void) { return g_last_error.c_str(); }

void pcapm_string_free(char* s) { std::free(s); }

pcapm_status pcapm_metric_schwarzschild(double m, double r0, pcapm_metric** out) {
    if (!out) return arg_error("out handle is NULL");
    return guarded([&] {
        *out = new pcapm_metric{pcapm::RadialConformalMetric::schwarzschild(m, r0)};
    });
}

pcapm_status pcapm_metric_euclidean(double r0, pcapm_metric** out) {
    if (!out) return arg_error("out handle is NULL");
    return guarded(
        [&] { *out = new pcapm_metric{pcapm::RadialConformalMetric::euclidean(r0)}; });
}

pcapm_status pcapm_metric_perturbed(double A, double b, double r0, pcapm_metric** out) {
    if (!out) return arg_error("out handle is NULL");
    return guarded([&] {
        *out = new pcapm_metric{pcapm::RadialConformalMetric::perturbed(A, b, r0)};
    });
}

pcapm_status pcapm_metric_power(double c, double s, double r0, pcapm_metric** out) {
    if (!out) return arg_error("out handle is NULL");
    return guarded([&] {
        *out = new pcapm_metric{pcapm::RadialConformalMetric::power_decay(c, s, r0)};
    });
}

void pcapm_metric_free(pcapm_metric* metric) { delete metric; }

pcapm_status pcapm_metric_w(const pcapm_metric* metric, double r, double* out) {
    if (!metric || !out) return arg_error("metric or out is NULL");
    return guarded([&] { *out = metric->impl.w(r); });
}

pcapm_status pcapm_metric_scalar_curvature(const pcapm_metric* metric, double r,
                                           double* out) {
    if (!metric || !out) return arg_error("metric or out is NULL");
    return guarded([&] { *out = metric->impl.scalar_curvature(r); });
}

pcapm_status pcapm_metric_adm_mass(const pcapm_metric* metric, double* out) {
    if (!metric || !out) return arg_error("metric or out is NULL");
    return guarded([&] { *out = metric->impl.adm_mass(); });
}

pcapm_status pcapm_solve(const pcapm_metric* metric, double p, pcapm_solution** out) {
    if (!metric || !out) return arg_error("metric or out is NULL");
    return guarded([&] {
        *out = new pcapm_solution{pcapm::CapacitarySolution::solve(
            metric->impl, pcapm::PExponent::from_p(p))};
    });
}

void pcapm_solution_free(pcapm_solution* sol) { delete sol; }

pcapm_status pcapm_solution_cp(const pcapm_solution* sol, double* out) {
    if (!sol || !out) return arg_error("solution or out is NULL");
    return guarded([&] { *out = sol->impl.cp(); });
}

pcapm_status pcapm_solution_cap(const pcapm_solution* sol, double* out) {
    if (!sol || !out) return arg_error("solution or out is NULL");
    return guarded([&] { *out = sol->impl.cap_p(); });
}

pcapm_status pcapm_solution_u(const pcapm_solution* sol, double r, double* out) {
    if (!sol || !out) return arg_error("solution or out is NULL");
    return guarded([&] { *out = sol->impl.u(r); });
}

pcapm_status pcapm_solution_u_prime(const pcapm_solution* sol, double r, double* out) {
    if (!sol || !out) return arg_error("solution or out is NULL");
    return guarded([&] { *out = sol->impl.u_prime(r); });
}

pcapm_status pcapm_solution_level_radius(const pcapm_solution* sol, double level,
                                         double* out) {
    if (!sol || !out) return arg_error("solution or out is NULL");
    return guarded([&] { *out = sol->impl.level_radius(level); });
}

pcapm_status pcapm_model_from_mass(double p, double m, double r0, pcapm_model** out) {
    if (!out) return arg_error("out handle is NULL");
    return guarded([&] {
        *out = new pcapm_model{pcapm::SchwarzschildModel::from_mass(
            pcapm::PExponent::from_p(p), m, r0)};
    });
}

pcapm_status pcapm_model_from_capacity(double p, double cp, double k,
                                       pcapm_model** out) {
    if (!out) return arg_error("out handle is NULL");
    return guarded([&] {
        *out = new pcapm_model{pcapm::SchwarzschildModel::from_capacity(
            pcapm::PExponent::from_p(p), cp, k)};
    });
}

void pcapm_model_free(pcapm_model* model) { delete model; }

pcapm_status pcapm_model_params(const pcapm_model* model, double* k, double* m,
                                double* r0, double* cp) {
    if (!model) return arg_error("model is NULL");
    if (k) *k = model->impl.k();
    if (m) *m = model->impl.m();
    if (r0) *r0 = model->impl.r0();
    if (cp) *cp = model->impl.cp();
    return PCAPM_OK;
}

pcapm_status pcapm_model_level(const pcapm_model* model, double t, double* out) {
    if (!model || !out) return arg_error("model or out is NULL");
    return guarded([&] { *out = model->impl.level(t); });
}

pcapm_status pcapm_model_eta(const pcapm_model* model, double t, double* out) {
    if (!model || !out) return arg_error("model or out is NULL");
    return guarded([&] { *out = model->impl.eta(t); });
}

pcapm_status pcapm_model_xi(const pcapm_model* model, double t, double* out) {
    if (!model || !out) return arg_error("model or out is NULL");
    return guarded([&] { *out = model->impl.xi(t); });
}

pcapm_status pcapm_coefficients(const pcapm_model* model, double C1, double C2,
                                double C3, double t, double* alpha, double* beta,
                                double* gamma) {
    if (!model) return arg_error("model is NULL");
    return guarded([&] {
        pcapm::Coefficients c =
            pcapm::coefficients(pcapm::CoefficientChoice{model->impl, C1, C2, C3}, t);
        if (alpha) *alpha = c.alpha;
        if (beta) *beta = c.beta;
        if (gamma) *gamma = c.gamma;
    });
}

pcapm_status pcapm_alpha_nonneg(const pcapm_model* model, double C1, double C2,
                                int* out) {
    if (!model || !out) return arg_error("model or out is NULL");
    return guarded([&] {
        *out = pcapm::alpha_nonneg(pcapm::CoefficientChoice{model->impl, C1, C2, 0.0})
                   ? 1
                   : 0;
    });
}

pcapm_status pcapm_monotone_F(const pcapm_solution* sol, const pcapm_model* model,
                              double C1, double C2, double C3, double t, double* out) {
    if (!sol || !model || !out) return arg_error("solution, model, or out is NULL");
    return guarded([&] {
        *out = pcapm::evaluate_F(sol->impl,
                                 pcapm::CoefficientChoice{model->impl, C1, C2, C3}, t)
                   .F;
    });
}

pcapm_status pcapm_run_scan_file(const char* config_path, const char* out_dir,
                                 int threads, double tol_scale,
                                 unsigned long long seed, char** human, int* pass) {
    if (!config_path) return arg_error("config path is NULL");
    return guarded([&] {
        pcapm::Scenario sc = pcapm::parse_scenario_file(config_path);
        pcapm::RunOptions opt;
        opt.out_dir = out_dir ? out_dir : ".";
        opt.threads = threads;
        opt.tol_scale = tol_scale;
        opt.seed = seed;
        pcapm::RunResult res = pcapm::run_scan(sc, opt);
        if (human) *human = dup_string(res.human);
        if (pass) *pass = res.pass ? 1 : 0;
    });
}

pcapm_status pcapm_run_inequalities_file(const char* config_path, const char* out_dir,
                                         int threads, double tol_scale,
                                         unsigned long long seed, char** human,
                                         int* pass) {
    if (!config_path) return arg_error("config path is NULL");
    return guarded([&] {
        pcapm::Scenario sc = pcapm::parse_scenario_file(config_path);
        pcapm::RunOptions opt;
        opt.out_dir = out_dir ? out_dir : ".";
        opt.threads = threads;
        opt.tol_scale = tol_scale;
        opt.seed = seed;
        pcapm::RunResult res = pcapm::run_inequalities(sc, opt);
        if (human) *human = dup_string(res.human);
        if (pass) *pass = res.pass ? 1 : 0;
    });
}

pcapm_status pcapm_verify(unsigned long long seed, double tol_scale, int threads,
                          const char* out_dir, char** text, int* pass) {
    return guarded([&] {
        pcapm::VerifyOptions opt;
        opt.seed = seed;
        opt.tol_scale = tol_scale;
        opt.threads = threads;
        if (out_dir) opt.out_dir = out_dir;
        std::vector<pcapm::CheckResult> checks = pcapm::run_all_checks(opt);
        if (text) *text = dup_string(pcapm::checks_to_text(checks));
        if (pass) *pass = pcapm::all_pass(checks) ? 1 : 0;
    });
}

pcapm_status pcapm_schwarzschild_table(double p, double m, double r0, int n,
                                       double t_max_factor, char** csv) {
    if (!csv) return arg_error("csv out is NULL");
    return guarded(
        [&] { *csv = dup_string(pcapm::schwarzschild_table_csv(p, m, r0, n, t_max_factor)); });
}

}  // extern "C"
