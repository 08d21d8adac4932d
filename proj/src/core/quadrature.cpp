#include "quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace pcapm::quad {

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const Options& opt) {
    require(std::isfinite(lo) && std::isfinite(hi), errc::invalid_arg,
            "integration endpoints must be finite");
    require(lo <= hi, errc::invalid_arg, "integration interval is reversed");
    if (lo == hi) return 0.0;

    thread_local boost::math::quadrature::tanh_sinh<double> rule(15);
    double err = 0.0;
    double L1 = 0.0;
    double val;
    try {
        val = rule.integrate(f, lo, hi, opt.rel_tol, &err, &L1);
    } catch (const std::exception& e) {
        fail(errc::quadrature, std::string("tanh-sinh evaluation failed: ") + e.what());
    }
    if (!std::isfinite(val)) fail(errc::quadrature, "integral is not finite");
    // The rule reports the level difference on its internal unit interval and
    // the L1 norm in value units; rescale before comparing.
    double err_abs = err * 0.5 * (hi - lo);
    double budget = opt.abs_tol + opt.rel_tol * std::max(std::fabs(val), L1);
    if (err_abs > 1e4 * budget && err_abs > 1e-9 * (1.0 + L1)) {
        std::ostringstream msg;
        msg << "error estimate " << err_abs << " exceeds tolerance for value " << val;
        fail(errc::quadrature, msg.str());
    }
    return val;
}

double power_kernel(double q, double x_max, const std::function<double(double)>& g,
                    const Options& opt) {
    require(q > 0.0, errc::domain, "power kernel exponent must be positive");
    require(x_max >= 0.0, errc::domain, "power kernel upper limit must be nonnegative");
    if (x_max == 0.0) return 0.0;

    if (q >= 1.0) {
        auto f = [&](double x) { return std::pow(x, q - 1.0) * g(x); };
        return integrate(f, 0.0, x_max, opt);
    }
    double inv_q = 1.0 / q;
    auto f = [&](double y) { return inv_q * g(std::pow(y, inv_q)); };
    return integrate(f, 0.0, std::pow(x_max, q), opt);
}

double tail(const std::function<double(double)>& g, double t, const Options& opt) {
    require(t > 0.0, errc::domain, "tail integral needs a positive lower limit");
    auto f = [&](double x) {
        if (x == 0.0) return 0.0;
        return g(1.0 / x) / (x * x);
    };
    return integrate(f, 0.0, 1.0 / t, opt);
}

double segment(const std::function<double(double)>& f, double lo, double hi) {
    using rule = boost::math::quadrature::gauss<double, 31>;
    if (lo == hi) return 0.0;
    return rule::integrate(f, lo, hi);
}

}  // namespace pcapm::quad
