#include "radial_metric.hpp"

#include <cmath>
#include <limits>

namespace pcapm {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

RadialConformalMetric::RadialConformalMetric(Family f, double p1, double p2, double r0)
    : family_(f), p1_(p1), p2_(p2), r0_(r0) {
    require(r0 > 0.0, errc::domain, "boundary radius r0 must be positive");
}

RadialConformalMetric RadialConformalMetric::schwarzschild(double m, double r0) {
    RadialConformalMetric g(Family::schwarzschild, m, 0.0, r0);
    require(r0 >= 0.5 * std::fabs(m) * (1.0 - 1e-12), errc::domain,
            "boundary radius must satisfy r0 >= |m|/2 for the model family");
    return g;
}

RadialConformalMetric RadialConformalMetric::euclidean(double r0) {
    return RadialConformalMetric(Family::euclidean, 0.0, 0.0, r0);
}

RadialConformalMetric RadialConformalMetric::perturbed(double A, double b, double r0) {
    require(A >= 0.0, errc::domain, "perturbed family needs A >= 0");
    require(b >= 0.0, errc::domain,
            "perturbed family needs b >= 0 to keep the scalar curvature nonnegative");
    require(b <= A * std::exp(r0), errc::domain,
            "perturbed family needs b <= A e^{r0} to keep w positive");
    return RadialConformalMetric(Family::perturbed, A, b, r0);
}

RadialConformalMetric RadialConformalMetric::power_decay(double c, double s, double r0) {
    require(c > 0.0, errc::domain, "power family needs c > 0");
    require(s > 0.0 && s < 1.0, errc::domain, "power family needs 0 < s < 1");
    return RadialConformalMetric(Family::power, c, s, r0);
}

const char* RadialConformalMetric::family_name() const {
    switch (family_) {
        case Family::schwarzschild: return "schwarzschild";
        case Family::euclidean: return "euclidean";
        case Family::perturbed: return "perturbed";
        case Family::power: return "power";
    }
    return "unknown";
}

double RadialConformalMetric::decay_tau() const {
    return family_ == Family::power ? p2_ : 1.0;
}

void RadialConformalMetric::check_r(double r) const {
    require(r >= r0_ * (1.0 - 1e-12), errc::domain,
            "metric is defined for r >= r0=" + std::to_string(r0_));
}

double RadialConformalMetric::w(double r) const {
    check_r(r);
    switch (family_) {
        case Family::schwarzschild: return 1.0 + 0.5 * p1_ / r;
        case Family::euclidean: return 1.0;
        case Family::perturbed: return 1.0 + p1_ / r - p2_ * std::exp(-r) / r;
        case Family::power: return 1.0 + p1_ * std::pow(r, -p2_);
    }
    return 1.0;
}

double RadialConformalMetric::dw(double r) const {
    check_r(r);
    switch (family_) {
        case Family::schwarzschild: return -0.5 * p1_ / (r * r);
        case Family::euclidean: return 0.0;
        case Family::perturbed:
            return -p1_ / (r * r) + p2_ * std::exp(-r) * (1.0 / r + 1.0 / (r * r));
        case Family::power: return -p1_ * p2_ * std::pow(r, -p2_ - 1.0);
    }
    return 0.0;
}

double RadialConformalMetric::d2w(double r) const {
    check_r(r);
    switch (family_) {
        case Family::schwarzschild: return p1_ / (r * r * r);
        case Family::euclidean: return 0.0;
        case Family::perturbed:
            return 2.0 * p1_ / (r * r * r) -
                   p2_ * std::exp(-r) * (1.0 / r + 2.0 / (r * r) + 2.0 / (r * r * r));
        case Family::power: return p1_ * p2_ * (p2_ + 1.0) * std::pow(r, -p2_ - 2.0);
    }
    return 0.0;
}

double RadialConformalMetric::scalar_curvature(double r) const {
    double ww = w(r);
    require(ww > 0.0, errc::positivity,
            "conformal factor vanishes at r=" + std::to_string(r));
    return -8.0 * std::pow(ww, -5.0) * (d2w(r) + 2.0 * dw(r) / r);
}

SphereGeometry RadialConformalMetric::sphere_geometry(double r) const {
    double ww = w(r);
    require(ww > 0.0, errc::positivity,
            "conformal factor vanishes at r=" + std::to_string(r));
    SphereGeometry g;
    g.area = 4.0 * kPi * r * r * std::pow(ww, 4.0);
    g.H = std::pow(ww, -3.0) * (2.0 * ww / r + 4.0 * dw(r));
    return g;
}

double RadialConformalMetric::adm_mass(const AdmOptions& opt) const {
    auto phi = [this](double r) { return 2.0 * r * (w(r) - 1.0); };
    auto extrapolate = [&](double R) {
        double p1 = phi(R), p2 = phi(2.0 * R), p3 = phi(4.0 * R);
        double d1 = p1 - p2, d2 = p2 - p3;
        double scale = std::fabs(p3) + 1.0;
        // phi = 2r(w - 1) carries rounding noise that grows with r, so the
        // settle test needs a radius-proportional floor on top of the
        // relative one.
        double floor_abs = 1e3 * std::numeric_limits<double>::epsilon() * R;
        if (std::fabs(d2) <= 1e-13 * scale + floor_abs) {
            require(std::fabs(d1) <= 1e-10 * scale + 8.0 * floor_abs, errc::nonconvergent,
                    "mass samples did not settle between R and 4R");
            return p3;
        }
        double ratio = d1 / d2;
        require(ratio > 1.0001, errc::nonconvergent,
                "mass samples are not converging (ratio " + std::to_string(ratio) + ")");
        double q = std::log2(ratio);
        return p3 - (p2 - p3) / (std::pow(2.0, q) - 1.0);
    };
    double R = opt.R > 0.0 ? opt.R : 2e4 * std::max(r0_, 1.0);
    double L1 = extrapolate(R);
    double L2 = extrapolate(2.0 * R);
    require(std::fabs(L1 - L2) <= opt.tol * (1.0 + std::fabs(L2)), errc::nonconvergent,
            "mass extrapolations at R and 2R disagree: " + std::to_string(L1) + " vs " +
                std::to_string(L2));
    return require_finite(L2, "ADM mass");
}

void RadialConformalMetric::check_admissible(int grid_n, double span) const {
    require(grid_n >= 2, errc::invalid_arg, "admissibility grid needs at least 2 points");
    double ratio = std::pow(span, 1.0 / (grid_n - 1));
    double r = r0_;
    for (int i = 0; i < grid_n; ++i) {
        double ww = w(r);
        require(ww > 0.0, errc::positivity,
                "conformal factor is nonpositive at r=" + std::to_string(r));
        double R = scalar_curvature(r);
        require(R >= -1e-12, errc::inadmissible,
                "scalar curvature is negative at r=" + std::to_string(r) + ": R=" +
                    std::to_string(R));
        r *= ratio;
    }
}

}  // namespace pcapm
