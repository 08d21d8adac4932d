#include "schwarzschild.hpp"

#include <cmath>

namespace pcapm {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double schwarzschild_u(const SchwarzschildModel& model, double r) {
    return model.level(r);
}

SurfaceData schwarzschild_surface(const SchwarzschildModel& model, double r) {
    require(r >= model.r0() * (1.0 - 1e-12), errc::domain,
            "surface data is defined for r >= r0=" + std::to_string(model.r0()));
    double a = model.a();
    double x = model.m() / (2.0 * r);
    double w = 1.0 + x;
    SurfaceData s;
    s.r = r;
    s.area = 4.0 * kPi * r * r * std::pow(w, 4.0);
    s.H = (2.0 / r) * std::pow(w, -3.0) * (1.0 - x);
    s.grad_u = model.cp() * std::pow(r, -a - 1.0) * std::pow(w, -2.0 * a - 2.0);
    s.int_H_grad = s.area * s.H * s.grad_u;
    s.int_grad_sq = s.area * s.grad_u * s.grad_u;
    s.int_H_sq = s.area * s.H * s.H;
    return s;
}

}  // namespace pcapm
