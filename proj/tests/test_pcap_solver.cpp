#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/pcap_solver.hpp"
#include "core/schwarzschild.hpp"
#include "test_util.hpp"

using namespace pcapm;
using testutil::thrown_code;

TEST_CASE("euclidean potential is exactly the power law") {
    auto metric = RadialConformalMetric::euclidean(1.0);
    for (double p : {1.5, 2.0, 2.6}) {
        CAPTURE(p);
        auto sol = CapacitarySolution::solve(metric, PExponent::from_p(p));
        double a = sol.a();
        CHECK(sol.cp() == doctest::Approx(a).epsilon(1e-12));
        for (double r : {1.0, 3.0, 100.0}) {
            CAPTURE(r);
            CHECK(sol.u(r) == doctest::Approx(1.0 - std::pow(r, -a)).epsilon(1e-11));
            CHECK(sol.u_prime(r) ==
                  doctest::Approx(a * std::pow(r, -a - 1.0)).epsilon(1e-11));
        }
    }
}

TEST_CASE("p = 2 potential on schwarzschild has the isotropic closed form") {
    auto metric = RadialConformalMetric::schwarzschild(1.0, 0.8);
    auto sol = CapacitarySolution::solve(metric, PExponent::from_p(2.0));
    double c2 = 0.8 + 0.5;
    CHECK(sol.cp() == doctest::Approx(c2).epsilon(1e-12));
    for (double r : {0.8, 1.0, 2.0, 40.0}) {
        CAPTURE(r);
        CHECK(sol.u(r) == doctest::Approx(1.0 - c2 / (r + 0.5)).epsilon(1e-11));
    }
    CHECK(sol.tail_integral(2.0) == doctest::Approx(1.0 / 2.5).epsilon(1e-11));
}

TEST_CASE("capacity constant for a fractional exponent background") {
    auto metric = RadialConformalMetric::schwarzschild(1.0, 1.0);
    auto sol = CapacitarySolution::solve(metric, PExponent::from_p(2.5));
    CHECK(sol.cp() == doctest::Approx(0.3576847705358353747451).epsilon(1e-12));
    // The potential agrees with the model background built from the same data.
    auto model = SchwarzschildModel::from_mass(sol.params(), 1.0, 1.0);
    for (double r : {1.0, 2.5, 30.0}) {
        CAPTURE(r);
        CHECK(sol.u(r) == doctest::Approx(model.level(r)).epsilon(1e-11));
    }
}

TEST_CASE("perturbed metric capacity and potential reference values") {
    auto metric = RadialConformalMetric::perturbed(1.0, 0.1, 1.0);
    struct Case {
        double p, cp, u5;
    };
    const Case cases[] = {
        {1.5, 57.4810165526750223576, 0.9319804666285986751973},
        {2.0, 1.983481967474371926848, 0.6694111463654890368253},
        {2.5, 0.3768531115326227289556, 0.3590115361213970314083},
    };
    for (const auto& c : cases) {
        CAPTURE(c.p);
        auto sol = CapacitarySolution::solve(metric, PExponent::from_p(c.p));
        CHECK(sol.cp() == doctest::Approx(c.cp).epsilon(1e-11));
        CHECK(sol.u(5.0) == doctest::Approx(c.u5).epsilon(1e-11));
        CHECK(sol.u(1.0) == 0.0);
        CHECK(sol.one_minus_u(5.0) + sol.u(5.0) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("capacity identity holds at every radius") {
    auto metric = RadialConformalMetric::perturbed(1.0, 0.1, 1.0);
    auto sol = CapacitarySolution::solve(metric, PExponent::from_p(2.3));
    constexpr double kPi = 3.141592653589793238462643383279502884;
    for (double r : {1.0, 2.4, 66.0}) {
        CAPTURE(r);
        double w = metric.w(r);
        double area = 4.0 * kPi * r * r * std::pow(w, 4);
        double grad = sol.u_prime(r) / (w * w);
        double lhs = area * std::pow(grad, sol.p() - 1.0);
        CHECK(lhs == doctest::Approx(sol.cap_p()).epsilon(1e-11));
    }
}

TEST_CASE("level radius inverts the potential") {
    auto metric = RadialConformalMetric::perturbed(1.0, 0.05, 1.0);
    auto sol = CapacitarySolution::solve(metric, PExponent::from_p(2.2));
    CHECK(sol.level_radius(0.0) == metric.r0());
    for (double f : {1.5, 12.0, 3000.0}) {
        double r = f * metric.r0();
        CAPTURE(r);
        CHECK(sol.level_radius(sol.u(r)) == doctest::Approx(r).epsilon(1e-10));
    }
    // A level this close to 1 pushes the inversion beyond the cached table.
    double r_far = sol.level_radius(1.0 - 1e-9);
    CHECK(sol.one_minus_u(r_far) == doctest::Approx(1e-9).epsilon(1e-8));
}

TEST_CASE("level surface sampling matches the background closed forms") {
    auto metric = RadialConformalMetric::schwarzschild(1.0, 1.0);
    auto sol = CapacitarySolution::solve(metric, PExponent::from_p(2.5));
    auto model = SchwarzschildModel::from_mass(sol.params(), 1.0, 1.0);
    for (double t : {1.0, 3.0, 90.0}) {
        CAPTURE(t);
        auto s = sol.sample_level_surface(model, t);
        auto want = schwarzschild_surface(model, t);
        CHECK(s.r == doctest::Approx(want.r).epsilon(1e-10));
        CHECK(s.area == doctest::Approx(want.area).epsilon(1e-9));
        CHECK(s.H == doctest::Approx(want.H).epsilon(1e-9));
        CHECK(s.grad_u == doctest::Approx(want.grad_u).epsilon(1e-9));
    }
    // A model with a different capacity does not describe these level sets.
    auto wrong = SchwarzschildModel::from_capacity(sol.params(), 1.001 * sol.cp(), 0.5);
    CHECK(thrown_code([&] { sol.sample_level_surface(wrong, 2.0); }) == errc::invalid_arg);
}

TEST_CASE("asymptotic diagnostics recover the decay exponents") {
    auto metric = RadialConformalMetric::perturbed(1.0, 0.1, 1.0);
    auto sol = CapacitarySolution::solve(metric, PExponent::from_p(2.0));
    auto diag = sol.asymptotic_diagnostics();
    double a = sol.a();
    CHECK(std::fabs(diag.slope_u + a) < 0.01 * a);
    CHECK(std::fabs(diag.slope_grad + (a + 1.0)) < 0.01 * (a + 1.0));
    CHECK(diag.area_ratio == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("solver argument validation") {
    auto metric = RadialConformalMetric::euclidean(1.0);
    auto sol = CapacitarySolution::solve(metric, PExponent::from_p(2.0));
    CHECK(thrown_code([&] { sol.u(0.5); }) == errc::domain);
    CHECK(thrown_code([&] { sol.level_radius(1.0); }) == errc::domain);
    CHECK(thrown_code([&] { sol.level_radius(-0.1); }) == errc::domain);

    SolverOptions opt;
    opt.table_nodes = 4;
    CHECK(thrown_code([&] {
        CapacitarySolution::solve(metric, PExponent::from_p(2.0), opt);
    }) == errc::invalid_arg);
}
