#pragma once

#include "gnse/field.hpp"
#include "gnse/forcing.hpp"
#include "gnse/spectral_ops.hpp"

namespace gnse {

// Exponential weight pair (lambda, sigma) of the Gevrey norm
//   ||u||_{lambda,sigma} = kappa0^sigma sum_k e^{lambda kappa0 |k|} |k|^sigma |u(k)|.
// lambda carries units of length; finiteness at lambda gives modal decay
// e^{-lambda kappa0 |k|}, i.e. an analyticity radius of at least lambda.
struct GevreyWeight {
    double lambda = 0.0;
    double sigma = 0.0;

    GevreyWeight(double lambda_, double sigma_) : lambda(lambda_), sigma(sigma_) {
        if (lambda < 0.0) throw ArgumentError("GevreyWeight: lambda must be >= 0");
    }
};

// l^1 Sobolev norm kappa0^sigma sum |k|^sigma |u(k)|.  Mean-zero fields have
// |k| >= 1, so negative sigma is safe.
double sobolev_l1_norm(const SpectralField& u, double sigma);

// Gevrey norm; throws SaturationError (with the offending shell) when the
// exponential weight leaves double range.  Summed in descending-shell order.
double gevrey_norm(const SpectralField& u, const GevreyWeight& w);

// Wiener-algebra norm sum_k |u(k)|.
double wiener_norm(const SpectralField& u);

// L^2 norms via Parseval: ||u||_{L2} = (2pi)^{n/2} kappa0^{-n/2} (sum |u(k)|^2)^{1/2};
// grad / laplacian versions weight the sum by (kappa0 |k|) and (kappa0 |k|)^2.
double l2_norm(const SpectralField& u);
double grad_l2_norm(const SpectralField& u);
double laplacian_l2_norm(const SpectralField& u);

// Gevrey norm of a scalar modulus sequence (output of abs_convolution).
double scalar_gevrey_norm(const ScalarBox& box, double kappa0, const GevreyWeight& w);

// Dimensionless data sizes controlling the existence window:
//   M0 = kappa0^{-sigma}/(nu kappa0) ||u0||_sigma
//   Mf = kappa0^{-sigma}/(nu^2 kappa0^3) (nu kappa0^2 int_0^Tf ||f(s)||_{lambda(s),sigma}^q ds)^{1/q}
//        (sup over [0,Tf] for q = infinity)
//   M  = M0 + Mf
//   G  = kappa0^{n/2}/(nu^2 kappa0^3) sup_t ||f(t)||_{L2}   (Grashof number)
struct DataNumbers {
    double M0 = 0.0;
    double Mf = 0.0;
    double M = 0.0;
    double G = 0.0;
    double q = 2.0;        // integrability exponent in (1, inf]
    double q_prime = 2.0;  // 1/q' = 1 - 1/q
    double Tf = 0.0;       // forcing horizon used for Mf
};

DataNumbers compute_data_numbers(const SpectralField& u0, const ForceSchedule& f, double sigma,
                                 double q, double Tf, const LambdaSchedule& lambda_schedule);

}  // namespace gnse
