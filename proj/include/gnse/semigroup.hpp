#pragma once

#include "gnse/field.hpp"
#include "gnse/norms.hpp"

namespace gnse {

// One verified instance of a smoothing/algebra estimate.  These are proved
// inequalities with explicit constants; ratio > 1 (beyond rounding slack)
// means an implementation bug, never a "failed experiment".
struct SmoothingEstimateReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double constant_used = 0.0;
    double ratio = 0.0;  // lhs / rhs
    bool passed = false;
};

// (nu t)^{beta/2} ||e^{-nu t A} u||_{lambda,sigma+beta} <= (beta/2e)^{beta/2} ||u||_{lambda,sigma}.
// The constant is the exact supremum of x^{beta/2} e^{-x}; single modes with
// nu t kappa0^2 |k|^2 = beta/2 attain it.
SmoothingEstimateReport check_heat_smoothing(const SpectralField& u, double lambda, double sigma,
                                             double beta, double t);

// ||e^{-nu(t-s)A} u||_{lambda(t),sigma} <= e^{1/2} ||e^{-(nu/2)(t-s)A} u||_{lambda(s),sigma}
// for the schedule lambda(t) = sqrt(nu t): half the dissipation absorbs the
// growth of the Gevrey weight.
SmoothingEstimateReport check_schedule_absorption(const SpectralField& u, double s, double t,
                                                  double sigma);

// || |u|*|v| ||_{lambda,gamma} <= 2^{max(gamma,1)} kappa0^{-gamma}
//     ||u||_{lambda,gamma} ||v||_{lambda,gamma}
// (convolution algebra; |k|^gamma <= 2^{max(gamma-1,0)}(|l|^gamma + |k-l|^gamma)
// plus the gamma->0 norm comparison on mean-zero sequences).
SmoothingEstimateReport check_algebra_bound(const SpectralField& u, const SpectralField& v,
                                            double lambda, double gamma);

// ||e^{-nu t A} B[u,v]||_{lambda,delta} <= C_alg(gamma) ((1+delta-gamma)/2e)^{a}
//     kappa0^{1+delta-2gamma} (nu kappa0^2 t)^{-a} ||u||_{lambda,gamma} ||v||_{lambda,gamma},
// a = max{0, (1+delta-gamma)/2}: the Duhamel kernel beats the derivative loss.
SmoothingEstimateReport check_heat_bilinear(const SpectralField& u, const SpectralField& v,
                                            double lambda, double gamma, double delta, double t);

// Exact algebra constant 2^{max(gamma,1)}.
double algebra_constant(double gamma);

// Exact smoothing constant (beta/2e)^{beta/2}.
double heat_smoothing_constant(double beta);

}  // namespace gnse
