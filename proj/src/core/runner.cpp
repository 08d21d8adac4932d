#include "runner.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pcapm {

namespace {

using json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17e", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double metric_param(const Scenario& sc, const char* key) {
    auto it = sc.metric_params.find(key);
    if (it == sc.metric_params.end())
        fail(errc::config,
             sc.name + ": [metric] family '" + sc.family + "' requires parameter '" + key + "'");
    return it->second;
}

void reject_unknown_params(const Scenario& sc, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : sc.metric_params) {
        (void)value;
        bool ok = false;
        for (const char* k : allowed)
            if (key == k) ok = true;
        if (!ok)
            fail(errc::config, sc.name + ": [metric] unknown parameter '" + key +
                                   "' for family '" + sc.family + "'");
    }
}

RadialConformalMetric build_metric(const Scenario& sc) {
    if (sc.family == "schwarzschild") {
        reject_unknown_params(sc, {"m", "r0"});
        return RadialConformalMetric::schwarzschild(metric_param(sc, "m"),
                                                    metric_param(sc, "r0"));
    }
    if (sc.family == "euclidean") {
        reject_unknown_params(sc, {"r0"});
        return RadialConformalMetric::euclidean(metric_param(sc, "r0"));
    }
    if (sc.family == "perturbed") {
        reject_unknown_params(sc, {"A", "b", "r0"});
        return RadialConformalMetric::perturbed(metric_param(sc, "A"), metric_param(sc, "b"),
                                                metric_param(sc, "r0"));
    }
    if (sc.family == "power") {
        reject_unknown_params(sc, {"c", "s", "r0"});
        return RadialConformalMetric::power_decay(metric_param(sc, "c"),
                                                  metric_param(sc, "s"),
                                                  metric_param(sc, "r0"));
    }
    fail(errc::config, sc.name + ": [metric] unknown family '" + sc.family + "'");
}

CoefficientChoice resolve_preset(const Scenario& sc, const SchwarzschildModel& model) {
    const std::string& preset = sc.preset;
    double a = model.a();
    double cp = model.cp();
    auto need_k = [&](bool ok, const char* what) {
        if (!ok)
            fail(errc::config, sc.name + ": preset '" + preset + "' requires " + what +
                                   ", but the resolved model has k=" +
                                   std::to_string(model.k()));
    };
    CoefficientChoice choice{model, 0.0, 0.0, sc.C3};
    if (preset == "AMMO") {
        need_k(model.k() == 0.0, "k = 0");
        choice.C2 = 1.0 / cp;
    } else if (preset == "HMT") {
        need_k(model.k() == 0.0, "k = 0");
        choice.C1 = -a * (a + 1.0) / cp;
    } else if (preset == "thm11-a") {
        need_k(model.k() == 1.0, "k = 1");
        choice.C1 = -1.0;
    } else if (preset == "thm11-b") {
        need_k(model.k() == 1.0, "k = 1");
        choice.C2 = 1.0 / cp;
    } else if (preset == "thm12-a") {
        need_k(model.k() != 1.0, "k in (-1, 1)");
        choice = thm12_proof_choices(model).first;
        choice.C3 = sc.C3;
    } else if (preset == "thm12-b") {
        need_k(model.k() != 1.0, "k in (-1, 1)");
        choice = thm12_proof_choices(model).second;
        choice.C3 = sc.C3;
    } else {
        fail(errc::config, sc.name + ": unknown preset '" + preset + "'");
    }
    return choice;
}

json inputs_json(const InequalityInputs& in) {
    json j;
    j["p"] = in.p;
    j["a"] = in.a;
    j["k"] = in.k;
    j["m"] = in.m;
    j["r0"] = in.r0;
    j["cp"] = in.cp;
    j["m_adm"] = in.m_adm;
    j["area"] = in.boundary.area;
    j["H"] = in.boundary.H;
    j["int_H_grad"] = in.boundary.int_H_grad;
    j["int_grad_sq"] = in.boundary.int_grad_sq;
    j["int_H_sq"] = in.boundary.int_H_sq;
    return j;
}

json report_json(const InequalityReport& rep) {
    json j;
    j["name"] = rep.name;
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["slack"] = rep.slack;
    j["satisfied"] = rep.satisfied;
    j["equality"] = rep.equality;
    if (!rep.note.empty()) j["note"] = rep.note;
    j["inputs"] = inputs_json(rep.inputs);
    return j;
}

json scenario_json(const Scenario& sc) {
    json j;
    j["name"] = sc.name;
    j["p"] = sc.p;
    j["family"] = sc.family;
    json params;
    for (const auto& [key, value] : sc.metric_params) params[key] = value;
    j["metric_params"] = params;
    j["k"] = sc.k_mode == "value" ? json(sc.k_value) : json(sc.k_mode);
    if (!sc.preset.empty()) j["preset"] = sc.preset;
    return j;
}

void write_text(const std::string& dir, const std::string& rel, const std::string& text) {
    namespace fs = std::filesystem;
    fs::path path = fs::path(dir) / rel;
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
        if (ec) fail(errc::io, "cannot create directory " + path.parent_path().string());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io, "cannot open " + path.string() + " for writing");
    out << text;
    if (!out) fail(errc::io, "failed writing " + path.string());
}

}  // namespace

Workspace build_workspace(const Scenario& sc) {
    PExponent params = PExponent::from_p(sc.p);
    RadialConformalMetric metric = build_metric(sc);

    SolverOptions sopt;
    sopt.quad.abs_tol = sc.tol.quad_abs;
    sopt.quad.rel_tol = sc.tol.quad_rel;
    CapacitarySolution sol = CapacitarySolution::solve(metric, params, sopt);

    quad::Options mq{sc.tol.quad_abs, sc.tol.quad_rel};
    SchwarzschildModel model = [&]() {
        if (sc.k_mode == "matched") {
            if (sc.family != "schwarzschild")
                fail(errc::config, sc.name + ": k = matched requires the schwarzschild family");
            return SchwarzschildModel::from_mass(params, metric_param(sc, "m"),
                                                 metric_param(sc, "r0"), mq, sc.tol.guard);
        }
        double k = 0.0;
        if (sc.k_mode == "zero") {
            k = 0.0;
        } else if (sc.k_mode == "from-willmore") {
            SphereGeometry g = metric.sphere_geometry(metric.r0());
            double W = 1.0 - g.area * g.H * g.H / (16.0 * 3.141592653589793238462643383279502884);
            k = solve_k(W, sc.tol.guard);
        } else {
            k = sc.k_value;
        }
        return SchwarzschildModel::from_capacity(params, sol.cp(), k, mq, sc.tol.guard);
    }();

    CoefficientChoice choice{model, 0.0, 0.0, sc.C3};
    if (!sc.preset.empty()) {
        choice = resolve_preset(sc, model);
    } else {
        choice.C1 = sc.C1.value_or(0.0);
        choice.C2 = sc.C2.value_or(0.0);
    }

    std::optional<double> adm;
    std::string adm_note;
    try {
        AdmOptions aopt;
        aopt.tol = sc.tol.adm_tol;
        adm = metric.adm_mass(aopt);
    } catch (const error& e) {
        if (e.code() != errc::nonconvergent) throw;
        adm_note = e.what();
    }

    return Workspace{params, metric,  std::move(sol), model,
                     choice, sc.k_mode, adm,          adm_note};
}

std::vector<double> scan_grid(const Scenario& sc, double r0) {
    double t_min = sc.t_min.value_or(r0);
    double t_max = sc.t_max.value_or(sc.t_max_factor.value_or(1000.0) * r0);
    if (t_min < r0 * (1.0 - 1e-12))
        fail(errc::config, sc.name + ": [grid] t_min=" + std::to_string(t_min) +
                               " is below r0=" + std::to_string(r0));
    if (!(t_max > t_min))
        fail(errc::config, sc.name + ": [grid] t_max must exceed t_min");
    int n = sc.grid_n;
    std::vector<double> grid(n);
    if (sc.spacing == "log") {
        double ratio = std::log(t_max / t_min) / (n - 1);
        for (int i = 0; i < n; ++i) grid[i] = t_min * std::exp(ratio * i);
    } else {
        double step = (t_max - t_min) / (n - 1);
        for (int i = 0; i < n; ++i) grid[i] = t_min + step * i;
    }
    grid.front() = t_min;
    grid.back() = t_max;
    return grid;
}

std::string scan_to_csv(const ScanReport& report) {
    std::string out =
        "t,level,r,area,H,grad_u,int_H_grad,int_grad_sq,int_H_sq,alpha,beta,gamma,F,"
        "dF_forward\n";
    for (const ScanRow& row : report.rows) {
        out += fmt(row.t) + ',' + fmt(row.level) + ',' + fmt(row.r) + ',' + fmt(row.area) +
               ',' + fmt(row.H) + ',' + fmt(row.grad_u) + ',' + fmt(row.int_H_grad) + ',' +
               fmt(row.int_grad_sq) + ',' + fmt(row.int_H_sq) + ',' + fmt(row.alpha) + ',' +
               fmt(row.beta) + ',' + fmt(row.gamma) + ',' + fmt(row.F) + ',' +
               fmt(row.dF_forward) + '\n';
    }
    return out;
}

RunResult run_scan(const Scenario& sc, const RunOptions& opt) {
    Workspace ws = build_workspace(sc);
    std::vector<double> grid = scan_grid(sc, ws.model.r0());

    ScanOptions sopt;
    sopt.threads = opt.threads;
    sopt.tol_mono_factor = sc.tol.tol_mono_factor * opt.tol_scale;
    sopt.bound_tol_factor = sc.tol.bound_tol_factor * opt.tol_scale;
    sopt.adm_mass = ws.adm_mass;
    ScanReport report = monotonicity_scan(ws.sol, ws.choice, grid, sopt);

    bool pass = report.monotone_pass && report.bound_pass;

    json j;
    j["scenario"] = scenario_json(sc);
    j["solution"] = {{"p", ws.params.p},
                     {"a", ws.params.a},
                     {"cp", ws.sol.cp()},
                     {"cap_p", ws.sol.cap_p()}};
    j["model"] = {{"k", ws.model.k()},
                  {"m", ws.model.m()},
                  {"r0", ws.model.r0()},
                  {"Ia_k", ws.model.Ia_k()}};
    j["choice"] = {{"C1", ws.choice.C1}, {"C2", ws.choice.C2}, {"C3", ws.choice.C3}};
    json scan;
    scan["n"] = static_cast<int>(report.rows.size());
    scan["t_min"] = grid.front();
    scan["t_max"] = grid.back();
    scan["max_abs_F"] = report.max_abs_F;
    scan["max_forward_diff"] = report.max_forward_diff;
    scan["tol_mono"] = report.tol_mono;
    scan["monotone_pass"] = report.monotone_pass;
    scan["F_first"] = report.F_first;
    scan["F_final"] = report.F_final;
    scan["bound_available"] = report.bound_available;
    if (report.bound_available) {
        scan["adm_mass"] = report.adm_mass;
        scan["limit_bound"] = report.limit_bound;
        scan["bound_tol"] = report.bound_tol;
        scan["bound_pass"] = report.bound_pass;
    } else if (!ws.adm_note.empty()) {
        scan["adm_note"] = ws.adm_note;
    }
    j["scan"] = scan;
    j["verdict"] = pass ? "PASS" : "FAIL";

    if (opt.write_files) {
        write_text(opt.out_dir, sc.csv_path, scan_to_csv(report));
        write_text(opt.out_dir, sc.report_path, j.dump(2) + "\n");
    }

    std::ostringstream human;
    human << "scenario " << sc.name << ": p=" << fmt_short(sc.p) << " family=" << sc.family
          << " k=" << fmt_short(ws.model.k()) << " (" << ws.k_mode << ")\n";
    human << "model: m=" << fmt_short(ws.model.m()) << " r0=" << fmt_short(ws.model.r0())
          << " cp=" << fmt_short(ws.sol.cp()) << " cap_p=" << fmt_short(ws.sol.cap_p())
          << "\n";
    human << "choice: C1=" << fmt_short(ws.choice.C1) << " C2=" << fmt_short(ws.choice.C2)
          << " C3=" << fmt_short(ws.choice.C3);
    if (!sc.preset.empty()) human << " (preset " << sc.preset << ")";
    human << "\n";
    human << "scan: n=" << report.rows.size() << " t in [" << fmt_short(grid.front()) << ", "
          << fmt_short(grid.back()) << "]\n";
    human << "monotone: " << (report.monotone_pass ? "PASS" : "FAIL")
          << " (max forward diff " << fmt_short(report.max_forward_diff) << ", tol "
          << fmt_short(report.tol_mono) << ")\n";
    if (report.bound_available) {
        human << "limit: F(t_max)=" << fmt_short(report.F_final) << " bound="
              << fmt_short(report.limit_bound) << " "
              << (report.bound_pass ? "PASS" : "FAIL") << "\n";
    } else {
        human << "limit: bound unavailable (" << ws.adm_note << ")\n";
    }
    human << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";

    return RunResult{pass, j.dump(2) + "\n", human.str()};
}

RunResult run_inequalities(const Scenario& sc, const RunOptions& opt) {
    Workspace ws = build_workspace(sc);
    SurfaceData boundary = ws.sol.sample_level_surface(ws.model, ws.model.r0());

    IneqOptions iopt;
    iopt.tol_ineq_factor = sc.tol.tol_ineq_factor * opt.tol_scale;
    iopt.eq_tol_factor = sc.tol.eq_tol_factor * opt.tol_scale;
    iopt.h_tol = sc.tol.h_tol;
    iopt.guard = sc.tol.guard;

    std::vector<InequalityReport> reports;
    std::vector<std::string> skipped;
    if (ws.model.k() == 1.0) {
        auto pair = thm11_inequalities(ws.sol, ws.model, boundary, iopt);
        reports.push_back(pair.first);
        reports.push_back(pair.second);
        skipped.push_back("thm12.*: resolved model has k=1");
    } else {
        auto pair = thm12_inequalities(ws.sol, ws.model, boundary, iopt);
        reports.push_back(pair.first);
        reports.push_back(pair.second);
        skipped.push_back("thm11.*: resolved model has k!=1");
    }
    {
        auto pair = thm13_bounds(ws.sol, boundary, iopt);
        reports.push_back(pair.first);
        reports.push_back(pair.second);
    }
    if (std::fabs(boundary.H) < iopt.h_tol) {
        auto pair = thm14_bounds(ws.sol, boundary, iopt);
        reports.push_back(pair.first);
        reports.push_back(pair.second);
    } else {
        skipped.push_back("thm14.*: boundary is not minimal (H=" + fmt_short(boundary.H) +
                          ")");
    }
    reports.push_back(corollary_reports(ws.sol, ws.model, ws.choice, boundary, iopt));

    bool pass = true;
    for (const auto& rep : reports) pass = pass && rep.satisfied;

    json j;
    j["scenario"] = scenario_json(sc);
    j["solution"] = {{"p", ws.params.p},
                     {"a", ws.params.a},
                     {"cp", ws.sol.cp()},
                     {"cap_p", ws.sol.cap_p()}};
    j["model"] = {{"k", ws.model.k()},
                  {"m", ws.model.m()},
                  {"r0", ws.model.r0()},
                  {"Ia_k", ws.model.Ia_k()}};
    json list = json::array();
    for (const auto& rep : reports) list.push_back(report_json(rep));
    j["inequalities"] = list;
    if (!skipped.empty()) j["skipped"] = skipped;
    j["verdict"] = pass ? "PASS" : "FAIL";

    if (opt.write_files) write_text(opt.out_dir, sc.report_path, j.dump(2) + "\n");

    std::ostringstream human;
    human << "scenario " << sc.name << ": p=" << fmt_short(sc.p) << " family=" << sc.family
          << " k=" << fmt_short(ws.model.k()) << " (" << ws.k_mode << ")\n";
    for (const auto& rep : reports) {
        human << (rep.satisfied ? "PASS " : "FAIL ") << rep.name
              << ": lhs=" << fmt_short(rep.lhs) << " rhs=" << fmt_short(rep.rhs)
              << " slack=" << fmt_short(rep.slack)
              << (rep.equality ? " (equality)" : "") << "\n";
    }
    for (const auto& s : skipped) human << "skip " << s << "\n";
    human << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";

    return RunResult{pass, j.dump(2) + "\n", human.str()};
}

std::string schwarzschild_table_csv(double p, double m, double r0, int n,
                                    double t_max_factor) {
    require(n >= 2, errc::invalid_arg, "table needs at least 2 rows");
    require(t_max_factor > 1.0, errc::invalid_arg, "t_max_factor must exceed 1");
    PExponent params = PExponent::from_p(p);
    SchwarzschildModel model = SchwarzschildModel::from_mass(params, m, r0);

    std::string out;
    out += "# p=" + fmt(p) + "\n";
    out += "# a=" + fmt(params.a) + "\n";
    out += "# m=" + fmt(model.m()) + "\n";
    out += "# r0=" + fmt(model.r0()) + "\n";
    out += "# k=" + fmt(model.k()) + "\n";
    out += "# cp=" + fmt(model.cp()) + "\n";
    out += "# cap_p=" + fmt(model.cap_p()) + "\n";
    out += "r,u,u_prime,eta,area,H,grad_u,int_H_grad,int_grad_sq,int_H_sq\n";
    double ratio = std::log(t_max_factor) / (n - 1);
    for (int i = 0; i < n; ++i) {
        double r = r0 * std::exp(ratio * i);
        if (i == 0) r = r0;
        SurfaceData s = schwarzschild_surface(model, r);
        out += fmt(r) + ',' + fmt(model.level(r)) + ',' + fmt(model.level_derivative(r)) +
               ',' + fmt(model.eta(r)) + ',' + fmt(s.area) + ',' + fmt(s.H) + ',' +
               fmt(s.grad_u) + ',' + fmt(s.int_H_grad) + ',' + fmt(s.int_grad_sq) + ',' +
               fmt(s.int_H_sq) + '\n';
    }
    return out;
}

}  // namespace pcapm
