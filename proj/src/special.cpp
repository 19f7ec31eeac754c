#include "gnse/special.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "gnse/errors.hpp"

namespace gnse {

double beta_function(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw ArgumentError("beta_function: arguments must be > 0");
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double beta_kernel_constant(double c, double d) {
    if (!(c >= 0.0 && c < 1.0 && d >= 0.0 && d < 1.0))
        throw ArgumentError("beta_kernel_constant: need 0 <= c,d < 1");
    return std::max(beta_function(1.0 - c, 1.0 - d), std::tgamma(1.0 - c));
}

namespace {

using boost::math::quadrature::gauss_kronrod;

double integrate(const std::function<double(double)>& f, double a, double b) {
    if (!(b > a)) return 0.0;
    return gauss_kronrod<double, 61>::integrate(f, a, b, 12, 1e-13);
}

}  // namespace

double beta_kernel_integral(double b, double c, double d, double t) {
    if (!(t > 0.0)) throw ArgumentError("beta_kernel_integral: t must be > 0");
    if (!(b >= 0.0)) throw ArgumentError("beta_kernel_integral: b must be >= 0");
    if (!(c >= 0.0 && c < 1.0 && d >= 0.0 && d < 1.0))
        throw ArgumentError("beta_kernel_integral: need 0 <= c,d < 1");

    const double binv = (b == 0.0) ? std::numeric_limits<double>::infinity() : 1.0 / b;
    auto smin = [&](double s) { return std::min(s, binv); };
    auto kern = [&](double s) {
        return std::exp(-b * (t - s)) * std::pow(t - s, -c) * std::pow(smin(s), -d);
    };

    // Split [0,t] at the midpoint and at the kink s = 1/b when interior.
    std::vector<double> cuts{0.0, 0.5 * t, t};
    if (binv < t) cuts.push_back(binv);
    std::sort(cuts.begin(), cuts.end());

    double total = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        if (lo == 0.0 && d > 0.0) {
            // s = v^{1/(1-d)} removes the s^{-d} endpoint singularity.
            const double e = 1.0 / (1.0 - d);
            const double vhi = std::pow(hi, 1.0 - d);
            total += integrate(
                [&](double v) {
                    const double s = std::pow(v, e);
                    return e * std::exp(-b * (t - s)) * std::pow(t - s, -c) *
                           std::pow(smin(s) / s, -d);
                },
                0.0, vhi);
        } else if (hi == t && c > 0.0) {
            // t - s = w^{1/(1-c)} removes the (t-s)^{-c} endpoint singularity.
            const double e = 1.0 / (1.0 - c);
            const double whi = std::pow(t - lo, 1.0 - c);
            total += integrate(
                [&](double w) {
                    const double s = t - std::pow(w, e);
                    return e * std::exp(-b * (t - s)) * std::pow(smin(s), -d);
                },
                0.0, whi);
        } else {
            total += integrate(kern, lo, hi);
        }
    }
    return total;
}

}  // namespace gnse
