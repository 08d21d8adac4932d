#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/schwarzschild.hpp"
#include "test_util.hpp"

using namespace pcapm;
using testutil::thrown_code;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("surface data matches the closed forms") {
    auto model = SchwarzschildModel::from_mass(PExponent::from_p(2.5), 1.0, 1.0);
    const double a = model.a();
    const double cp = model.cp();
    for (double r : {1.0, 1.7, 4.0, 250.0}) {
        CAPTURE(r);
        auto s = schwarzschild_surface(model, r);
        double x = model.m() / (2.0 * r);
        double w = 1.0 + x;
        CHECK(s.r == r);
        CHECK(s.area == doctest::Approx(4.0 * kPi * r * r * std::pow(w, 4)).epsilon(1e-14));
        CHECK(s.H == doctest::Approx(2.0 * (1.0 - x) / (r * w * w * w)).epsilon(1e-14));
        CHECK(s.grad_u ==
              doctest::Approx(cp * std::pow(r, -a - 1.0) * std::pow(w, -2.0 * a - 2.0))
                  .epsilon(1e-13));
        CHECK(s.int_H_sq == doctest::Approx(s.H * s.H * s.area).epsilon(1e-14));
        CHECK(s.int_grad_sq == doctest::Approx(s.grad_u * s.grad_u * s.area).epsilon(1e-14));
        CHECK(s.int_H_grad == doctest::Approx(s.H * s.grad_u * s.area).epsilon(1e-14));
        CHECK(s.H == doctest::Approx(2.0 * model.eta(r) * s.grad_u).epsilon(1e-13));
    }
}

TEST_CASE("willmore integral depends only on x = m/2r") {
    auto model = SchwarzschildModel::from_mass(PExponent::from_p(1.7), 0.8, 0.6);
    for (double r : {0.6, 1.1, 9.0}) {
        CAPTURE(r);
        auto s = schwarzschild_surface(model, r);
        double x = model.m() / (2.0 * r);
        double want = 16.0 * kPi * std::pow(1.0 - x, 2) / std::pow(1.0 + x, 2);
        CHECK(s.int_H_sq == doctest::Approx(want).epsilon(1e-13));
    }
}

TEST_CASE("horizon boundary is minimal with area 64 pi r0^2") {
    auto model = SchwarzschildModel::from_capacity(PExponent::from_a(1.5), 1.0, 1.0);
    auto s = schwarzschild_surface(model, model.r0());
    CHECK(std::fabs(s.H) < 1e-14 / model.r0());
    CHECK(s.area == doctest::Approx(64.0 * kPi * model.r0() * model.r0()).epsilon(1e-14));
    CHECK(s.int_H_sq < 1e-20);
}

TEST_CASE("potential equals the model level") {
    auto model = SchwarzschildModel::from_mass(PExponent::from_p(2.2), -0.5, 1.0);
    for (double r : {1.0, 2.5, 80.0}) {
        CAPTURE(r);
        CHECK(schwarzschild_u(model, r) == doctest::Approx(model.level(r)).epsilon(1e-14));
    }
}

TEST_CASE("surface radius below the boundary is rejected") {
    auto model = SchwarzschildModel::from_mass(PExponent::from_p(2.0), 1.0, 1.0);
    CHECK(thrown_code([&] { schwarzschild_surface(model, 0.5); }) == errc::domain);
}
