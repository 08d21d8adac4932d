#pragma once

#include "specfun.hpp"

namespace pcapm {

// Exact per-sphere data for the model background: geometry of the coordinate
// sphere of isotropic radius r together with the capacitary potential's
// gradient and the three surface integrals entering the monotone quantity.
struct SurfaceData {
    double r = 0.0;
    double area = 0.0;
    double H = 0.0;
    double grad_u = 0.0;
    double int_H_grad = 0.0;
    double int_grad_sq = 0.0;
    double int_H_sq = 0.0;
};

// Model potential u(r) = f(r); identical to model.level but named for the
// role it plays as the exact capacitary potential of the background.
double schwarzschild_u(const SchwarzschildModel& model, double r);

// Closed-form surface data on the sphere of radius r >= r0.
SurfaceData schwarzschild_surface(const SchwarzschildModel& model, double r);

}  // namespace pcapm
