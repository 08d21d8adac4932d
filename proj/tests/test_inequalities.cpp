#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/inequalities.hpp"
#include "test_util.hpp"

using namespace pcapm;
using testutil::thrown_code;

namespace {

struct Matched {
    CapacitarySolution sol;
    SchwarzschildModel model;
    SurfaceData boundary;
};

Matched matched_background(double p, double m, double r0) {
    auto metric = RadialConformalMetric::schwarzschild(m, r0);
    auto sol = CapacitarySolution::solve(metric, PExponent::from_p(p));
    auto model = SchwarzschildModel::from_mass(sol.params(), m, r0);
    auto boundary = sol.sample_level_surface(model, model.r0());
    return {std::move(sol), std::move(model), boundary};
}

}  // namespace

TEST_CASE("willmore ratio inversion") {
    CHECK(solve_k(0.75) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(solve_k(-1.25) == doctest::Approx(-0.2).epsilon(1e-14));
    CHECK(solve_k(0.999225) == doctest::Approx(0.94583037491225678).epsilon(1e-14));
    CHECK(solve_k(1.0) == 1.0);
    CHECK(solve_k(0.0) == 0.0);
    for (double W : {-2.0, -0.3, 0.5, 0.96}) {
        CAPTURE(W);
        double k = solve_k(W);
        CHECK(4.0 * k / ((1.0 + k) * (1.0 + k)) == doctest::Approx(W).epsilon(1e-13));
    }
    CHECK(thrown_code([] { solve_k(1.5); }) == errc::domain);
    CHECK(thrown_code([] { solve_k(-1e13); }) == errc::guard);
}

TEST_CASE("boundary eta closed form") {
    auto model = SchwarzschildModel::from_capacity(PExponent::from_a(1.5), 1.3, 0.6);
    CHECK(boundary_eta(1.5, 0.6) ==
          doctest::Approx(model.eta(model.r0())).epsilon(1e-12));
    auto neg = SchwarzschildModel::from_capacity(PExponent::from_a(0.75), 2.0, -0.45);
    CHECK(boundary_eta(0.75, -0.45) ==
          doctest::Approx(neg.eta(neg.r0())).epsilon(1e-12));
    CHECK(boundary_eta(2.0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(boundary_eta(0.7, 1.0) == 0.0);
}

TEST_CASE("prefactor 1 - a eta(r0) carries the sign of k") {
    for (double a : {0.3, 1.0, 2.5}) {
        for (double k : {-0.8, -0.2, 0.3, 0.9}) {
            CAPTURE(a);
            CAPTURE(k);
            CHECK((1.0 - a * boundary_eta(a, k)) * k > 0.0);
        }
    }
}

TEST_CASE("boundary inequalities are equalities on the matched background") {
    auto mb = matched_background(2.2, 1.0, 1.0);
    auto pair12 = thm12_inequalities(mb.sol, mb.model, mb.boundary);
    CHECK(pair12.first.name == "thm12.lower");
    CHECK(pair12.second.name == "thm12.upper");
    for (const auto& rep : {pair12.first, pair12.second}) {
        CAPTURE(rep.name);
        CHECK(rep.satisfied);
        CHECK(rep.equality);
        CHECK(rep.note.empty());
        CHECK(rep.inputs.m_adm == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(rep.inputs.k == doctest::Approx(0.5).epsilon(1e-12));
    }

    auto pair13 = thm13_bounds(mb.sol, mb.boundary);
    CHECK(pair13.first.name == "thm13.mass");
    CHECK(pair13.second.name == "thm13.area");
    CHECK(pair13.first.equality);
    CHECK(pair13.second.equality);
    CHECK(pair13.first.rhs == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("negative mass background carries the rigidity caveat") {
    auto mb = matched_background(2.0, -0.5, 1.0);
    auto pair12 = thm12_inequalities(mb.sol, mb.model, mb.boundary);
    CHECK(pair12.first.satisfied);
    CHECK(pair12.first.equality);
    CHECK(pair12.first.note ==
          "equality cannot occur for -1<k<0 (zero-area-singularity backgrounds)");
    CHECK(pair12.second.note == pair12.first.note);
}

TEST_CASE("horizon inequalities on the matched background") {
    auto mb = matched_background(1.5, 1.0, 0.5);
    auto pair11 = thm11_inequalities(mb.sol, mb.model, mb.boundary);
    CHECK(pair11.first.name == "thm11.lower");
    CHECK(pair11.second.name == "thm11.upper");
    CHECK(pair11.first.equality);
    CHECK(pair11.second.equality);

    auto pair14 = thm14_bounds(mb.sol, mb.boundary);
    CHECK(pair14.first.name == "thm14.mass");
    CHECK(pair14.second.name == "thm14.area");
    CHECK(pair14.first.equality);
    CHECK(pair14.second.equality);
    // The mass bound 2 (I_a(1) cp)^{1/a} equals m on the matched background.
    CHECK(pair14.first.lhs ==
          doctest::Approx(2.0 * std::pow(half_beta(mb.sol.a()) * mb.sol.cp(),
                                         1.0 / mb.sol.a()))
              .epsilon(1e-12));
    CHECK(pair14.first.lhs == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(pair14.first.rhs == doctest::Approx(1.0).epsilon(1e-8));

    // The k < 1 pair refuses a horizon model and vice versa.
    CHECK(thrown_code([&] { thm12_inequalities(mb.sol, mb.model, mb.boundary); }) ==
          errc::domain);
    auto off = matched_background(2.0, 1.0, 1.0);
    CHECK(thrown_code([&] { thm11_inequalities(off.sol, off.model, off.boundary); }) ==
          errc::domain);
    CHECK(thrown_code([&] { thm14_bounds(off.sol, off.boundary); }) == errc::not_minimal);
}

TEST_CASE("strict slack on a curved metric") {
    auto metric = RadialConformalMetric::perturbed(1.0, 0.1, 1.0);
    auto sol = CapacitarySolution::solve(metric, PExponent::from_p(2.0));
    auto boundary = [&] {
        auto geom = metric.sphere_geometry(metric.r0());
        SurfaceData s{};
        s.r = metric.r0();
        s.area = geom.area;
        s.H = geom.H;
        s.grad_u = sol.u_prime(metric.r0()) / std::pow(metric.w(metric.r0()), 2);
        s.int_H_grad = s.H * s.grad_u * s.area;
        s.int_grad_sq = s.grad_u * s.grad_u * s.area;
        s.int_H_sq = s.H * s.H * s.area;
        return s;
    }();
    constexpr double kPi = 3.141592653589793238462643383279502884;
    double W = 1.0 - boundary.int_H_sq / (16.0 * kPi);
    auto model = SchwarzschildModel::from_capacity(sol.params(), sol.cp(), solve_k(W));

    auto pair12 = thm12_inequalities(sol, model, boundary);
    for (const auto& rep : {pair12.first, pair12.second}) {
        CAPTURE(rep.name);
        CHECK(rep.satisfied);
        CHECK_FALSE(rep.equality);
        CHECK(rep.slack > 0.0);
    }
    auto pair13 = thm13_bounds(sol, boundary);
    CHECK(pair13.first.slack > 0.0);
    CHECK_FALSE(pair13.first.equality);
    // The mass bound certifies a positive lower bound below the ADM mass 2A.
    CHECK(pair13.first.lhs > 0.0);
    CHECK(pair13.first.lhs < 2.0);
}

TEST_CASE("limit bound report for admissible choices") {
    auto mb = matched_background(1.5, 1.0, 0.5);
    CoefficientChoice ch{mb.model, -1.0, 0.0, 0.0};
    auto rep = corollary_reports(mb.sol, mb.model, ch, mb.boundary);
    CHECK(rep.name == "corollary.flimit");
    CHECK(rep.satisfied);
    CHECK(rep.equality);

    CoefficientChoice bad{mb.model, 1.0, 0.0, 0.0};
    CHECK(thrown_code([&] {
        corollary_reports(mb.sol, mb.model, bad, mb.boundary);
    }) == errc::inadmissible);
}

TEST_CASE("proof choices bracket the boundary inequality") {
    SUBCASE("generic k") {
        auto model = SchwarzschildModel::from_capacity(PExponent::from_a(1.5), 1.3, 0.6);
        auto [first, second] = thm12_proof_choices(model);
        CHECK(first.C1 == -1.0);
        CHECK(first.C2 == 0.0);
        CHECK(second.C2 == doctest::Approx(1.0 / model.cp()).epsilon(1e-15));
        auto c = coefficients(second, model.r0());
        CHECK(std::fabs(c.alpha) < 1e-10 * (1.0 + std::fabs(second.C1)));
        CHECK(alpha_nonneg(first));
        CHECK(alpha_nonneg(second));
    }
    SUBCASE("k = 0") {
        auto model = SchwarzschildModel::from_capacity(PExponent::from_a(1.2), 0.9, 0.0);
        auto [first, second] = thm12_proof_choices(model);
        double r0 = model.r0();
        CHECK(second.C1 ==
              doctest::Approx((model.a() + 1.0) * r0 / model.a()).epsilon(1e-14));
        auto c = coefficients(second, r0);
        CHECK(std::fabs(c.alpha) < 1e-12 * r0 / model.a());
        (void)first;
    }
    SUBCASE("k = 1") {
        auto model = SchwarzschildModel::from_capacity(PExponent::from_a(0.5), 1.1, 1.0);
        auto [first, second] = thm12_proof_choices(model);
        CHECK(second.C1 == 0.0);
        auto c = coefficients(second, model.r0());
        CHECK(std::fabs(c.alpha) == 0.0);
        (void)first;
    }
}
