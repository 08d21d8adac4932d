#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "core/monotone.hpp"
#include "test_util.hpp"

using namespace pcapm;
using testutil::thrown_code;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = lo * std::pow(hi / lo, double(i) / double(n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}
}  // namespace

TEST_CASE("coefficients against reference values") {
    SUBCASE("positive k") {
        auto model = SchwarzschildModel::from_capacity(PExponent::from_a(1.5), 1.3, 0.6);
        CoefficientChoice ch{model, -0.7, 0.4, 0.1};
        auto c = coefficients(ch, 4.0 * model.r0());
        CHECK(c.alpha == doctest::Approx(4.117048435728879029242).epsilon(1e-12));
        CHECK(c.beta == doctest::Approx(-9.972434330793134631311).epsilon(1e-12));
        CHECK(c.gamma == doctest::Approx(-0.82410234740027123398).epsilon(1e-12));
    }
    SUBCASE("negative k") {
        auto model = SchwarzschildModel::from_capacity(PExponent::from_a(0.75), 2.0, -0.45);
        CoefficientChoice ch{model, 0.3, 1.1, 0.0};
        auto c = coefficients(ch, 3.0 * model.r0());
        CHECK(c.alpha == doctest::Approx(137.2461176433420176706).epsilon(1e-12));
        CHECK(c.beta == doctest::Approx(-839.8920933864365487021).epsilon(1e-12));
        CHECK(c.gamma == doctest::Approx(-37.33599021650864883454).epsilon(1e-12));
    }
    SUBCASE("k = 1") {
        auto model = SchwarzschildModel::from_capacity(PExponent::from_a(0.5), 1.1, 1.0);
        CoefficientChoice ch{model, -0.25, 0.6, 0.0};
        auto c = coefficients(ch, 5.0 * model.r0());
        CHECK(c.alpha == doctest::Approx(40.08837999538444546339).epsilon(1e-12));
        CHECK(c.beta == doctest::Approx(25.0001776045451750855).epsilon(1e-12));
        CHECK(c.gamma == doctest::Approx(-14.088763017640262541).epsilon(1e-12));
    }
}

TEST_CASE("horizon endpoint values") {
    auto model = SchwarzschildModel::from_capacity(PExponent::from_a(0.5), 1.1, 1.0);
    CoefficientChoice ch{model, -0.25, 0.6, 0.3};
    double r0 = model.r0();
    double a = model.a();
    auto c = coefficients(ch, r0);
    // At t = r0 with k = 1: eta = 0 and the level ratio is 1, so
    // alpha = -2 C1, beta = Q 2^{4a} I_a(1)^2, gamma = -Q + C3.
    double Q = ch.C2 * model.cp() * model.m() / a + ch.C1;
    CHECK(c.alpha == doctest::Approx(-2.0 * ch.C1).epsilon(1e-13));
    CHECK(c.beta ==
          doctest::Approx(Q * std::pow(2.0, 4.0 * a) * half_beta(a) * half_beta(a))
              .epsilon(1e-12));
    CHECK(c.gamma == doctest::Approx(-Q + ch.C3).epsilon(1e-12));
}

TEST_CASE("flat background closed forms") {
    auto params = PExponent::from_a(1.2);
    auto model = SchwarzschildModel::from_capacity(params, 0.9, 0.0);
    double a = params.a;
    double cp = model.cp();

    SUBCASE("general k = 0 expressions") {
        CoefficientChoice ch{model, -0.3, 0.7, 0.2};
        for (double t : {1.0, 2.0, 9.0}) {
            CAPTURE(t);
            auto c = coefficients(ch, t);
            auto c0 = coefficients_k0(params, cp, ch.C1, ch.C2, ch.C3, t);
            CHECK(c.alpha == c0.alpha);
            CHECK(c.beta == c0.beta);
            CHECK(c.gamma == c0.gamma);
            CHECK(c.alpha ==
                  doctest::Approx(0.7 * std::pow(t, a + 1.0) + 0.3 / (a + 1.0))
                      .epsilon(1e-14));
        }
    }
    SUBCASE("harmonic-type choice has power-law gamma") {
        CoefficientChoice ch{model, -a * (a + 1.0) / cp, 0.0, 0.0};
        for (double t : {1.0, 3.5, 20.0}) {
            CAPTURE(t);
            auto c = coefficients(ch, t);
            CHECK(c.alpha == doctest::Approx(a / cp).epsilon(1e-14));
            CHECK(c.gamma == doctest::Approx(std::pow(t, -a)).epsilon(1e-13));
        }
    }
}

TEST_CASE("coefficients solve the transport system") {
    auto modelA = SchwarzschildModel::from_capacity(PExponent::from_a(1.5), 1.3, 0.6);
    auto modelB = SchwarzschildModel::from_capacity(PExponent::from_a(0.75), 2.0, -0.45);
    CoefficientChoice choices[] = {
        {modelA, -0.7, 0.4, 0.1},
        {modelB, 0.3, 1.1, 0.0},
    };
    for (const auto& ch : choices) {
        for (double f : {1.3, 2.0, 12.0}) {
            double t = f * ch.model.r0();
            CAPTURE(t);
            auto res = ode_residual(ch, t);
            CHECK(std::fabs(res.r1) <= 1e-6 * (res.scale1 + 1e-300));
            CHECK(std::fabs(res.r2) <= 1e-6 * (res.scale2 + 1e-300));
            CHECK(std::fabs(res.r3) <= 1e-6 * (res.scale3 + 1e-300));
            CHECK(std::fabs(alpha_ode2_residual(ch, t)) < 1e-5);
            CHECK(std::fabs(alpha_special_residual(ch.model, t)) < 1e-5);
        }
    }
}

TEST_CASE("admissibility predicate") {
    auto flat = SchwarzschildModel::from_capacity(PExponent::from_a(1.2), 0.9, 0.0);
    double cp = flat.cp();
    double a = flat.a();
    CHECK(alpha_nonneg({flat, 0.0, 1.0 / cp, 0.0}));
    CHECK(alpha_nonneg({flat, -a * (a + 1.0) / cp, 0.0, 0.0}));
    CHECK_FALSE(alpha_nonneg({flat, 0.0, -1.0, 0.0}));
    // C2 r0^{a+1} < C1/(a+1) makes alpha negative far out.
    double r0 = flat.r0();
    double c1_bound = (a + 1.0) * 1e-3 * std::pow(r0, a + 1.0);
    CHECK(alpha_nonneg({flat, 0.5 * c1_bound, 1e-3, 0.0}));
    CHECK_FALSE(alpha_nonneg({flat, 2.0 * c1_bound, 1e-3, 0.0}));

    auto horizon = SchwarzschildModel::from_capacity(PExponent::from_a(0.5), 1.1, 1.0);
    CHECK(alpha_nonneg({horizon, -0.25, 0.6, 0.0}));
    CHECK(alpha_nonneg({horizon, 0.0, 0.0, 0.0}));
    CHECK_FALSE(alpha_nonneg({horizon, 0.25, 0.6, 0.0}));

    auto tilted = SchwarzschildModel::from_capacity(PExponent::from_a(1.5), 1.3, 0.6);
    double xi0 = tilted.xi(tilted.r0());
    double bound = 0.4 * tilted.cp() / xi0;
    CHECK(alpha_nonneg({tilted, bound, 0.4, 0.0}));
    CHECK_FALSE(alpha_nonneg({tilted, bound * 1.01, 0.4, 0.0}));
}

TEST_CASE("monotone quantity vanishes on the matched background") {
    auto metric = RadialConformalMetric::schwarzschild(1.0, 1.0);
    auto sol = CapacitarySolution::solve(metric, PExponent::from_p(2.5));
    auto model = SchwarzschildModel::from_mass(sol.params(), 1.0, 1.0);
    CoefficientChoice ch{model, -1.0, 0.0, 0.0};
    for (double t : {1.0, 2.0, 35.0}) {
        CAPTURE(t);
        auto s = evaluate_F(sol, ch, t);
        double scale = 4.0 * kPi * (std::fabs(s.coef.gamma) + 1.0);
        CHECK(std::fabs(s.F) < 1e-8 * scale);
        CHECK(std::fabs(s.F_alt - s.F) < 1e-8 * scale);
    }
}

TEST_CASE("inadmissible choices are rejected") {
    auto metric = RadialConformalMetric::euclidean(1.0);
    auto sol = CapacitarySolution::solve(metric, PExponent::from_p(2.0));
    auto model = SchwarzschildModel::from_capacity(sol.params(), sol.cp(), 0.0);
    CHECK(thrown_code([&] { evaluate_F(sol, {model, 0.0, -1.0, 0.0}, 2.0); }) ==
          errc::inadmissible);
    CHECK(thrown_code([&] {
        monotonicity_scan(sol, {model, 0.0, -1.0, 0.0}, log_grid(1.0, 10.0, 8));
    }) == errc::inadmissible);
}

TEST_CASE("scan on the flat background") {
    auto metric = RadialConformalMetric::euclidean(1.0);
    auto sol = CapacitarySolution::solve(metric, PExponent::from_p(2.0));
    auto model = SchwarzschildModel::from_capacity(sol.params(), sol.cp(), 0.0);
    CoefficientChoice ch{model, 0.0, 1.0 / sol.cp(), 0.0};

    ScanOptions opt;
    opt.adm_mass = 0.0;
    auto report = monotonicity_scan(sol, ch, log_grid(1.0, 1000.0, 32), opt);
    CHECK(report.rows.size() == 32);
    CHECK(report.max_abs_F < 1e-9);
    CHECK(report.monotone_pass);
    CHECK(report.bound_available);
    CHECK(report.limit_bound == 0.0);
    CHECK(report.bound_pass);
    CHECK(report.rows.back().dF_forward == 0.0);
    for (size_t i = 1; i < report.rows.size(); ++i) {
        CHECK(report.rows[i].t > report.rows[i - 1].t);
        CHECK(report.rows[i].level > report.rows[i - 1].level);
    }
    CHECK(report.rows.front().r == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("scan rejects bad grids") {
    auto metric = RadialConformalMetric::euclidean(1.0);
    auto sol = CapacitarySolution::solve(metric, PExponent::from_p(2.0));
    auto model = SchwarzschildModel::from_capacity(sol.params(), sol.cp(), 0.0);
    CoefficientChoice ch{model, 0.0, 1.0 / sol.cp(), 0.0};
    CHECK(thrown_code([&] {
        monotonicity_scan(sol, ch, {2.0, 1.5, 3.0});
    }) == errc::invalid_arg);
    CHECK(thrown_code([&] { monotonicity_scan(sol, ch, {}); }) == errc::invalid_arg);
    CHECK(thrown_code([&] { monotonicity_scan(sol, ch, {0.5, 2.0}); }) == errc::domain);
}

TEST_CASE("scan results are independent of the thread count") {
    auto metric = RadialConformalMetric::perturbed(1.0, 0.1, 1.0);
    auto sol = CapacitarySolution::solve(metric, PExponent::from_p(2.0));
    auto model = SchwarzschildModel::from_capacity(sol.params(), sol.cp(), 1.0);
    CoefficientChoice ch{model, -1.0, 0.0, 0.0};
    auto grid = log_grid(1.0, 200.0, 24);

    ScanOptions o1, o4;
    o1.threads = 1;
    o4.threads = 4;
    auto r1 = monotonicity_scan(sol, ch, grid, o1);
    auto r4 = monotonicity_scan(sol, ch, grid, o4);
    REQUIRE(r1.rows.size() == r4.rows.size());
    for (size_t i = 0; i < r1.rows.size(); ++i) {
        CHECK(r1.rows[i].F == r4.rows[i].F);
        CHECK(r1.rows[i].alpha == r4.rows[i].alpha);
    }
    CHECK(r1.max_abs_F == r4.max_abs_F);
    CHECK(r1.monotone_pass == r4.monotone_pass);
}
