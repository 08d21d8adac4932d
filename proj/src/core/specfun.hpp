#pragma once

#include "params.hpp"
#include "quadrature.hpp"

namespace pcapm {

// Default guard distance kept between k and the excluded endpoint -1.
inline constexpr double kGuardDefault = 1e-6;

// I_a(k) = integral of s^{a-1} (1 + sgn(k) s)^{-2a} over (0, |k|],
// defined for a > 0 and -1 < k <= 1, with I_a(0) = 0.
double incomplete_I(double a, double k, const quad::Options& opt = {},
                    double guard = kGuardDefault);

// Closed form B(a, a) / 2 via log-gamma; equals I_a(1).
double half_beta(double a);

// incomplete_I(a, 1) - half_beta(a), which vanishes identically.
double beta_identity_residual(double a, const quad::Options& opt = {});

// Rotationally symmetric model background of mass m whose boundary sphere
// sits at isotropic radius r0, carrying the exponent bundle and the derived
// capacity constant cp. The boundary ratio is k = m / (2 r0) in (-1, 1].
class SchwarzschildModel {
public:
    static SchwarzschildModel from_capacity(PExponent params, double cp, double k,
                                            const quad::Options& opt = {},
                                            double guard = kGuardDefault);
    static SchwarzschildModel from_mass(PExponent params, double m, double r0,
                                        const quad::Options& opt = {},
                                        double guard = kGuardDefault);

    const PExponent& params() const { return params_; }
    double a() const { return params_.a; }
    double p() const { return params_.p; }
    double k() const { return k_; }
    double m() const { return m_; }
    double r0() const { return r0_; }
    double cp() const { return cp_; }
    double cap_p() const;
    double Ia_k() const { return Ia_k_; }

    // eta(t) = cp^{-1} t^a (1 + m/2t)^{2a-1} (1 - m/2t) for t >= r0.
    double eta(double t) const;

    // Level value u = f(t) of the model potential at radius t >= r0.
    double level(double t) const;

    // 1 - f(t), computed without cancellation; equals I_a(m/2t)/I_a(k) for
    // k != 0 and (cp/a) t^{-a} for k = 0.
    double one_minus_level(double t) const;

    // f(t) recomputed through the tail quadrature route instead of the
    // incomplete integral ratio; used for cross-checks.
    double level_by_quadrature(double t, const quad::Options& opt = {}) const;

    // f'(t) = cp t^{-a-1} (1 + m/2t)^{-2a}.
    double level_derivative(double t) const;

    // xi(t) = cp * integral of s^{-a-2} (1 + m/2s)^{-2a} (1 - m/2s)^{-2}
    // over [t, infinity), for t > |m|/2.
    double xi(double t, const quad::Options& opt = {}) const;

    // Same quantity through the identity
    // xi = (1/m) eta^{-1} - (a/m) I_a(m/2t)/I_a(k), valid for m != 0.
    double xi_by_identity(double t) const;

private:
    SchwarzschildModel() = default;

    double eta_unchecked(double t) const;

    PExponent params_{};
    double k_ = 0.0;
    double m_ = 0.0;
    double r0_ = 0.0;
    double cp_ = 0.0;
    double Ia_k_ = 0.0;
    double guard_ = kGuardDefault;
};

}  // namespace pcapm
