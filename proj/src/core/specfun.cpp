#include "specfun.hpp"

#include <cmath>

namespace pcapm {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

void check_k_range(double k, double guard) {
    require(k > -1.0 && k <= 1.0, errc::domain,
            "boundary ratio k must lie in (-1, 1], got k=" + std::to_string(k));
    require(k + 1.0 >= guard, errc::guard,
            "boundary ratio k=" + std::to_string(k) + " is within the guard distance " +
                std::to_string(guard) + " of -1");
}

}  // namespace

double incomplete_I(double a, double k, const quad::Options& opt, double guard) {
    require(a > 0.0, errc::domain, "exponent a must be positive");
    check_k_range(k, guard);
    if (k == 0.0) return 0.0;
    double sg = sgn(k);
    double K = std::fabs(k);
    auto g = [a, sg](double s) { return std::pow(1.0 + sg * s, -2.0 * a); };
    return require_finite(quad::power_kernel(a, K, g, opt), "incomplete integral");
}

double half_beta(double a) {
    require(a > 0.0, errc::domain, "exponent a must be positive");
    return 0.5 * std::exp(2.0 * std::lgamma(a) - std::lgamma(2.0 * a));
}

double beta_identity_residual(double a, const quad::Options& opt) {
    return incomplete_I(a, 1.0, opt) - half_beta(a);
}

SchwarzschildModel SchwarzschildModel::from_capacity(PExponent params, double cp, double k,
                                                     const quad::Options& opt, double guard) {
    require(cp > 0.0, errc::domain, "capacity constant cp must be positive");
    check_k_range(k, guard);
    SchwarzschildModel mod;
    mod.params_ = params;
    mod.cp_ = cp;
    mod.k_ = k;
    mod.guard_ = guard;
    double a = params.a;
    if (k == 0.0) {
        mod.m_ = 0.0;
        mod.Ia_k_ = 0.0;
        mod.r0_ = std::pow(cp / a, 1.0 / a);
    } else {
        mod.Ia_k_ = incomplete_I(a, k, opt, guard);
        mod.m_ = 2.0 * sgn(k) * std::pow(mod.Ia_k_ * cp, 1.0 / a);
        mod.r0_ = mod.m_ / (2.0 * k);
    }
    require_finite(mod.m_, "model mass");
    require_finite(mod.r0_, "model boundary radius");
    return mod;
}

SchwarzschildModel SchwarzschildModel::from_mass(PExponent params, double m, double r0,
                                                 const quad::Options& opt, double guard) {
    require(r0 > 0.0, errc::domain, "boundary radius r0 must be positive");
    double k = m / (2.0 * r0);
    require(k <= 1.0, errc::domain,
            "mass m=" + std::to_string(m) + " exceeds the horizon bound 2 r0");
    check_k_range(k, guard);
    SchwarzschildModel mod;
    mod.params_ = params;
    mod.m_ = m;
    mod.r0_ = r0;
    mod.k_ = k;
    mod.guard_ = guard;
    double a = params.a;
    if (m == 0.0) {
        mod.Ia_k_ = 0.0;
        mod.cp_ = a * std::pow(r0, a);
    } else {
        mod.Ia_k_ = incomplete_I(a, k, opt, guard);
        mod.cp_ = std::pow(std::fabs(m) / 2.0, a) / mod.Ia_k_;
    }
    require_finite(mod.cp_, "capacity constant");
    return mod;
}

double SchwarzschildModel::cap_p() const {
    return 4.0 * kPi * std::pow(cp_, params_.p - 1.0);
}

double SchwarzschildModel::eta_unchecked(double t) const {
    double a = params_.a;
    double x = m_ / (2.0 * t);
    return std::pow(t, a) * std::pow(1.0 + x, 2.0 * a - 1.0) * (1.0 - x) / cp_;
}

double SchwarzschildModel::eta(double t) const {
    require(t >= r0_ * (1.0 - 1e-12), errc::domain,
            "eta is defined for t >= r0=" + std::to_string(r0_));
    return require_finite(eta_unchecked(t), "eta");
}

double SchwarzschildModel::one_minus_level(double t) const {
    require(t >= r0_ * (1.0 - 1e-12), errc::domain,
            "level is defined for t >= r0=" + std::to_string(r0_));
    double a = params_.a;
    if (k_ == 0.0) return (cp_ / a) * std::pow(t, -a);
    return incomplete_I(a, m_ / (2.0 * t), {}, 0.0) / Ia_k_;
}

double SchwarzschildModel::level(double t) const {
    return 1.0 - one_minus_level(t);
}

double SchwarzschildModel::level_by_quadrature(double t, const quad::Options& opt) const {
    require(t >= r0_ * (1.0 - 1e-12), errc::domain,
            "level is defined for t >= r0=" + std::to_string(r0_));
    double a = params_.a;
    double half_m = 0.5 * m_;
    auto g = [a, half_m](double x) { return std::pow(1.0 + half_m * x, -2.0 * a); };
    return 1.0 - cp_ * quad::power_kernel(a, 1.0 / t, g, opt);
}

double SchwarzschildModel::level_derivative(double t) const {
    require(t >= r0_ * (1.0 - 1e-12), errc::domain,
            "level derivative is defined for t >= r0=" + std::to_string(r0_));
    double a = params_.a;
    double x = m_ / (2.0 * t);
    return cp_ * std::pow(t, -a - 1.0) * std::pow(1.0 + x, -2.0 * a);
}

double SchwarzschildModel::xi(double t, const quad::Options& opt) const {
    require(t > 0.5 * std::fabs(m_), errc::domain,
            "xi is defined for t > |m|/2=" + std::to_string(0.5 * std::fabs(m_)));
    double a = params_.a;
    double half_m = 0.5 * m_;
    auto g = [a, half_m](double x) {
        double base = 1.0 + half_m * x;
        double diff = 1.0 - half_m * x;
        return std::pow(base, -2.0 * a) / (diff * diff);
    };
    return require_finite(cp_ * quad::power_kernel(a + 1.0, 1.0 / t, g, opt), "xi");
}

double SchwarzschildModel::xi_by_identity(double t) const {
    require(m_ != 0.0, errc::domain, "xi identity requires nonzero mass");
    require(t > 0.5 * std::fabs(m_), errc::domain,
            "xi is defined for t > |m|/2=" + std::to_string(0.5 * std::fabs(m_)));
    double a = params_.a;
    double ratio = incomplete_I(a, m_ / (2.0 * t), {}, 0.0) / Ia_k_;
    return (1.0 / eta_unchecked(t) - a * ratio) / m_;
}

}  // namespace pcapm
