#include "gnse/semigroup.hpp"

#include <cmath>
#include <limits>

#include "gnse/spectral_ops.hpp"

namespace gnse {

namespace {

SmoothingEstimateReport make_report(double lhs, double rhs, double constant) {
    SmoothingEstimateReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.constant_used = constant;
    r.ratio = rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    r.passed = r.ratio <= 1.0 + 1e-12;
    return r;
}

}  // namespace

double heat_smoothing_constant(double beta) {
    return beta == 0.0 ? 1.0 : std::pow(beta / (2.0 * M_E), 0.5 * beta);
}

double algebra_constant(double gamma) { return std::pow(2.0, std::max(gamma, 1.0)); }

SmoothingEstimateReport check_heat_smoothing(const SpectralField& u, double lambda, double sigma,
                                             double beta, double t) {
    if (!(t > 0.0)) throw ArgumentError("check_heat_smoothing: t must be > 0");
    if (beta < 0.0) throw ArgumentError("check_heat_smoothing: beta must be >= 0");
    const double nu = u.params().nu;
    const double lhs =
        std::pow(nu * t, 0.5 * beta) * gevrey_norm(heat_propagate(u, t), GevreyWeight(lambda, sigma + beta));
    const double c = heat_smoothing_constant(beta);
    const double rhs = c * gevrey_norm(u, GevreyWeight(lambda, sigma));
    return make_report(lhs, rhs, c);
}

SmoothingEstimateReport check_schedule_absorption(const SpectralField& u, double s, double t,
                                                  double sigma) {
    if (!(s >= 0.0) || !(s < t)) throw ArgumentError("check_schedule_absorption: need 0 <= s < t");
    const double nu = u.params().nu;
    const double lam_t = std::sqrt(nu * t), lam_s = std::sqrt(nu * s);
    const double lhs = gevrey_norm(heat_propagate(u, t - s), GevreyWeight(lam_t, sigma));
    const double c = std::exp(0.5);
    const double rhs = c * gevrey_norm(heat_propagate(u, t - s, 0.5), GevreyWeight(lam_s, sigma));
    return make_report(lhs, rhs, c);
}

SmoothingEstimateReport check_algebra_bound(const SpectralField& u, const SpectralField& v,
                                            double lambda, double gamma) {
    if (gamma < 0.0) throw ArgumentError("check_algebra_bound: gamma must be >= 0");
    const double kappa0 = u.params().kappa0;
    const ScalarBox conv = abs_convolution(u, v, 2 * u.K());
    const double lhs = scalar_gevrey_norm(conv, kappa0, GevreyWeight(lambda, gamma));
    const double c = algebra_constant(gamma);
    const double rhs = c * std::pow(kappa0, -gamma) * gevrey_norm(u, GevreyWeight(lambda, gamma)) *
                       gevrey_norm(v, GevreyWeight(lambda, gamma));
    return make_report(lhs, rhs, c);
}

SmoothingEstimateReport check_heat_bilinear(const SpectralField& u, const SpectralField& v,
                                            double lambda, double gamma, double delta, double t) {
    if (!(t > 0.0)) throw ArgumentError("check_heat_bilinear: t must be > 0");
    if (gamma < 0.0) throw ArgumentError("check_heat_bilinear: gamma must be >= 0");
    const double nu = u.params().nu, kappa0 = u.params().kappa0;
    const SpectralField b = bilinear_fft(u, v);
    const double lhs = gevrey_norm(heat_propagate(b, t), GevreyWeight(lambda, delta));

    const double excess = 1.0 + delta - gamma;
    const double a = std::max(0.0, 0.5 * excess);
    const double c = algebra_constant(gamma) * (a > 0.0 ? std::pow(excess / (2.0 * M_E), a) : 1.0);
    const double rhs = c * std::pow(kappa0, 1.0 + delta - 2.0 * gamma) *
                       std::pow(nu * kappa0 * kappa0 * t, -a) *
                       gevrey_norm(u, GevreyWeight(lambda, gamma)) *
                       gevrey_norm(v, GevreyWeight(lambda, gamma));
    return make_report(lhs, rhs, c);
}

}  // namespace gnse
