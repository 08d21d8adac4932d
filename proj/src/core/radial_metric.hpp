#pragma once

#include <string>

#include "errors.hpp"

namespace pcapm {

struct SphereGeometry {
    double area = 0.0;
    double H = 0.0;
};

struct AdmOptions {
    // Innermost sample radius; the extrapolation uses {R, 2R, 4R} and repeats
    // at {2R, 4R, 8R} for a consistency check. Zero means 2e4 * max(r0, 1).
    double R = 0.0;
    double tol = 1e-6;
};

// Conformally flat rotationally symmetric exterior metric w(r)^4 * delta on
// {r >= r0}, with w > 0, w -> 1 at infinity, and nonnegative scalar
// curvature enforced as an admissibility check.
class RadialConformalMetric {
public:
    enum class Family { schwarzschild, euclidean, perturbed, power };

    static RadialConformalMetric schwarzschild(double m, double r0);
    static RadialConformalMetric euclidean(double r0);
    // w = 1 + A/r - b e^{-r}/r with A >= 0 and 0 <= b <= A e^{r0};
    // superharmonic perturbation with ADM mass exactly 2A.
    static RadialConformalMetric perturbed(double A, double b, double r0);
    // w = 1 + c r^{-s} with c > 0, 0 < s < 1; nonnegative scalar curvature
    // but divergent mass, exercising the nonconvergent error path.
    static RadialConformalMetric power_decay(double c, double s, double r0);

    Family family() const { return family_; }
    const char* family_name() const;
    double r0() const { return r0_; }
    // Decay rate tau of w - 1 ~ c r^{-tau}.
    double decay_tau() const;

    double w(double r) const;
    double dw(double r) const;
    double d2w(double r) const;

    // R = -8 w^{-5} (w'' + 2 w'/r).
    double scalar_curvature(double r) const;

    // Area and mean curvature of the coordinate sphere of radius r.
    SphereGeometry sphere_geometry(double r) const;

    // Richardson-extrapolated ADM mass from phi(r) = 2r (w(r) - 1); throws a
    // nonconvergent error when the extrapolation does not settle.
    double adm_mass(const AdmOptions& opt = {}) const;

    // Positivity of w and nonnegativity of the scalar curvature on a log grid
    // over [r0, span * r0]; throws positivity or inadmissible errors.
    void check_admissible(int grid_n = 400, double span = 1e4) const;

private:
    RadialConformalMetric(Family f, double p1, double p2, double r0);

    void check_r(double r) const;

    Family family_;
    double p1_ = 0.0;
    double p2_ = 0.0;
    double r0_ = 0.0;
};

}  // namespace pcapm
