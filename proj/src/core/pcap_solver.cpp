#include "pcap_solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace pcapm {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

CapacitarySolution::CapacitarySolution(const RadialConformalMetric& metric, PExponent params)
    : metric_(metric), params_(params) {}

double CapacitarySolution::integrand(double s) const {
    double a = params_.a;
    return std::pow(s, -a - 1.0) * std::pow(metric_.w(s), -2.0 * a);
}

CapacitarySolution CapacitarySolution::solve(const RadialConformalMetric& metric,
                                             PExponent params, const SolverOptions& opt) {
    require(opt.table_nodes >= 16, errc::invalid_arg, "solver table needs at least 16 nodes");
    require(opt.table_span > 1.0, errc::invalid_arg, "solver table span must exceed 1");
    if (opt.check_metric) metric.check_admissible();

    CapacitarySolution sol(metric, params);
    sol.quad_ = opt.quad;

    int n = opt.table_nodes;
    double r0 = metric.r0();
    double ratio = std::pow(opt.table_span, 1.0 / (n - 1));
    sol.nodes_.resize(n);
    for (int i = 0; i < n; ++i) sol.nodes_[i] = r0 * std::pow(ratio, i);
    sol.nodes_.front() = r0;

    auto g = [&sol](double s) { return sol.integrand(s); };
    double a = params.a;
    auto w_of_inv = [&](double x) { return std::pow(metric.w(1.0 / x), -2.0 * a); };
    double tail_last = quad::power_kernel(a, 1.0 / sol.nodes_.back(), w_of_inv, opt.quad);

    sol.tails_.assign(n, 0.0);
    sol.tails_.back() = tail_last;
    double sum = tail_last;
    double comp = 0.0;
    for (int i = n - 2; i >= 0; --i) {
        double seg = quad::integrate(g, sol.nodes_[i], sol.nodes_[i + 1], opt.quad);
        double y = seg - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        sol.tails_[i] = sum;
    }
    require(sol.tails_.front() > 0.0, errc::quadrature, "tail integral is not positive");
    sol.cp_ = 1.0 / sol.tails_.front();
    require_finite(sol.cp_, "capacity constant");
    return sol;
}

double CapacitarySolution::cap_p() const {
    return 4.0 * kPi * std::pow(cp_, params_.p - 1.0);
}

double CapacitarySolution::tail_integral(double r) const {
    double r0 = metric_.r0();
    require(r >= r0 * (1.0 - 1e-12), errc::domain,
            "potential is defined for r >= r0=" + std::to_string(r0));
    r = std::max(r, r0);
    if (r == r0) return tails_.front();
    if (r >= nodes_.back()) {
        double a = params_.a;
        auto w_of_inv = [&](double x) { return std::pow(metric_.w(1.0 / x), -2.0 * a); };
        return quad::power_kernel(a, 1.0 / r, w_of_inv, quad_);
    }
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), r);
    size_t j = static_cast<size_t>(it - nodes_.begin());
    j = std::min(std::max<size_t>(j, 1), nodes_.size() - 1);
    auto g = [this](double s) { return integrand(s); };
    return tails_[j] + quad::segment(g, r, nodes_[j]);
}

double CapacitarySolution::one_minus_u(double r) const {
    return tail_integral(r) / tails_.front();
}

double CapacitarySolution::u(double r) const {
    return 1.0 - one_minus_u(r);
}

double CapacitarySolution::u_prime(double r) const {
    double r0 = metric_.r0();
    require(r >= r0 * (1.0 - 1e-12), errc::domain,
            "potential is defined for r >= r0=" + std::to_string(r0));
    return cp_ * integrand(std::max(r, r0));
}

double CapacitarySolution::radius_for_tail(double T_target) const {
    double r0 = metric_.r0();
    if (T_target >= tails_.front()) return r0;

    double lo, hi;
    if (T_target >= tails_.back()) {
        auto it = std::lower_bound(tails_.begin(), tails_.end(), T_target,
                                   std::greater<double>());
        size_t j = static_cast<size_t>(it - tails_.begin());
        j = std::min(std::max<size_t>(j, 1), tails_.size() - 1);
        lo = nodes_[j - 1];
        hi = nodes_[j];
    } else {
        lo = nodes_.back();
        hi = 2.0 * lo;
        while (tail_integral(hi) > T_target) {
            lo = hi;
            hi *= 2.0;
            require(hi <= 1e18 * r0, errc::bracket,
                    "level is too close to 1 to bracket a radius");
        }
    }

    double r = std::sqrt(lo * hi);
    double tol = 1e-15 * T_target + 1e-300;
    double prev_abs = std::numeric_limits<double>::infinity();
    int stale = 0;
    for (int iter = 0; iter < 200; ++iter) {
        double phi = tail_integral(r) - T_target;
        if (std::fabs(phi) <= tol) return r;
        if (phi > 0.0)
            lo = r;
        else
            hi = r;
        if (hi - lo <= 8.0 * std::numeric_limits<double>::epsilon() * r) return r;
        if (std::fabs(phi) > 0.5 * prev_abs) ++stale;
        prev_abs = std::fabs(phi);
        double next = r + phi / integrand(r);
        if (stale >= 3 || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
        r = next;
    }
    fail(errc::nonconvergent, "level radius iteration did not converge");
}

double CapacitarySolution::level_radius(double level) const {
    require(level >= 0.0 && level < 1.0, errc::domain,
            "level must lie in [0, 1), got " + std::to_string(level));
    return radius_for_tail((1.0 - level) * tails_.front());
}

SurfaceData CapacitarySolution::sample_level_surface(const SchwarzschildModel& model,
                                                     double t) const {
    require(std::fabs(model.cp() - cp_) <= 1e-9 * std::max(cp_, model.cp()),
            errc::invalid_arg,
            "model capacity constant " + std::to_string(model.cp()) +
                " does not match the solution's " + std::to_string(cp_));
    double one_minus = model.one_minus_level(t);
    double r = radius_for_tail(one_minus * tails_.front());

    double a = params_.a;
    double ww = metric_.w(r);
    SphereGeometry sg = metric_.sphere_geometry(r);
    SurfaceData s;
    s.r = r;
    s.area = sg.area;
    s.H = sg.H;
    s.grad_u = cp_ * std::pow(r, -a - 1.0) * std::pow(ww, -2.0 * a - 2.0);
    s.int_H_grad = s.area * s.H * s.grad_u;
    s.int_grad_sq = s.area * s.grad_u * s.grad_u;
    s.int_H_sq = s.area * s.H * s.H;
    return s;
}

AsymptoticDiagnostics CapacitarySolution::asymptotic_diagnostics() const {
    const int n = 48;
    double r0 = metric_.r0();
    double lo = 1e4 * r0;
    double hi = 0.999 * nodes_.back();
    double lr = std::log(hi / lo) / (n - 1);

    double sx = 0, sxx = 0, su = 0, sxu = 0, sg = 0, sxg = 0;
    std::vector<double> xs(n), us(n), gs(n);
    for (int i = 0; i < n; ++i) {
        double r = lo * std::exp(lr * i);
        double x = std::log(r);
        xs[i] = x;
        us[i] = std::log(one_minus_u(r));
        gs[i] = std::log(u_prime(r));
        sx += x;
        sxx += x * x;
        su += us[i];
        sxu += x * us[i];
        sg += gs[i];
        sxg += x * gs[i];
    }
    double det = n * sxx - sx * sx;
    AsymptoticDiagnostics d;
    d.slope_u = (n * sxu - sx * su) / det;
    d.slope_grad = (n * sxg - sx * sg) / det;
    double bu = (su - d.slope_u * sx) / n;
    double bg = (sg - d.slope_grad * sx) / n;
    for (int i = 0; i < n; ++i) {
        d.resid_u = std::max(d.resid_u, std::fabs(us[i] - bu - d.slope_u * xs[i]));
        d.resid_grad = std::max(d.resid_grad, std::fabs(gs[i] - bg - d.slope_grad * xs[i]));
    }
    double rmax = hi;
    double ww = metric_.w(rmax);
    d.area_ratio = std::pow(ww, 4.0);
    return d;
}

}  // namespace pcapm
