#include <cmath>

#include "doctest.h"
#include "gnse/field.hpp"
#include "gnse/norms.hpp"
#include "gnse/spectral_ops.hpp"

using namespace gnse;

namespace {
PhysicalParams unit_params(int n) { return PhysicalParams::make(n, 2.0 * M_PI, 1.0); }
}

TEST_CASE("sobolev l1 norm on conjugate pairs") {
    auto p = unit_params(2);
    SpectralField u(p, 4);
    u.set_coeff(WaveVector{1, 0}, cvec{cplx(0.0), cplx(0.5), cplx(0)});
    CHECK(sobolev_l1_norm(u, 0.0) == doctest::Approx(1.0).epsilon(1e-15));

    SpectralField v(p, 4);
    v.set_coeff(WaveVector{2, 0}, cvec{cplx(0.0), cplx(1.0), cplx(0)});
    CHECK(sobolev_l1_norm(v, 2.0) == doctest::Approx(8.0).epsilon(1e-15));

    // sigma = 0 agrees with the Wiener sum (nu kappa0 = 1 here)
    CHECK(sobolev_l1_norm(u, 0.0) ==
          doctest::Approx(p.nu * p.kappa0 * wiener_norm(u)).epsilon(1e-15));
}

TEST_CASE("gevrey norm: single pair, lambda reduction, monotonicity") {
    auto p = unit_params(2);
    SpectralField u(p, 4);
    u.set_coeff(WaveVector{1, 0}, cvec{cplx(0.0), cplx(0.5), cplx(0)});
    CHECK(gevrey_norm(u, GevreyWeight(1.0, 0.0)) == doctest::Approx(M_E).epsilon(1e-14));

    auto r = random_field(p, 6, 1.0, 5.0, 9, 1.0);
    CHECK(gevrey_norm(r, GevreyWeight(0.0, 0.5)) ==
          doctest::Approx(sobolev_l1_norm(r, 0.5)).epsilon(1e-15));

    double prev = gevrey_norm(r, GevreyWeight(0.0, 0.0));
    for (double lam : {0.2, 0.5, 1.0}) {
        const double cur = gevrey_norm(r, GevreyWeight(lam, 0.0));
        CHECK(cur >= prev);
        prev = cur;
    }
    prev = gevrey_norm(r, GevreyWeight(0.3, -1.0));
    for (double sig : {-0.5, 0.0, 1.0}) {
        const double cur = gevrey_norm(r, GevreyWeight(0.3, sig));
        CHECK(cur >= prev);
        prev = cur;
    }
    CHECK_THROWS_AS(GevreyWeight(-0.1, 0.0), ArgumentError);
}

TEST_CASE("gevrey norm saturates loudly instead of returning inf") {
    auto p = unit_params(2);
    SpectralField u(p, 60);
    u.set_coeff(WaveVector{60, 0}, cvec{cplx(1.0), cplx(0.0), cplx(0)});
    CHECK_THROWS_AS(gevrey_norm(u, GevreyWeight(15.0, 0.0)), SaturationError);
    try {
        gevrey_norm(u, GevreyWeight(15.0, 0.0));
    } catch (const SaturationError& e) {
        CHECK(e.shell == 60);
    }
}

TEST_CASE("l2 norms via Parseval") {
    auto p = unit_params(2);
    SpectralField u(p, 4);
    u.set_coeff(WaveVector{1, 0}, cvec{cplx(0.0), cplx(1.0), cplx(0)});
    CHECK(l2_norm(u) == doctest::Approx(2.0 * M_PI * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(wiener_norm(u) == doctest::Approx(2.0).epsilon(1e-15));

    // single-shell factor kappa0 |k| = 2
    SpectralField v(p, 4);
    v.set_coeff(WaveVector{2, 0}, cvec{cplx(0.0), cplx(0.3, 0.4), cplx(0)});
    CHECK(grad_l2_norm(v) == doctest::Approx(2.0 * l2_norm(v)).epsilon(1e-14));
    CHECK(laplacian_l2_norm(v) == doctest::Approx(4.0 * l2_norm(v)).epsilon(1e-14));

    auto r = random_field(p, 6, 1.0, 6.0, 3, 1.0);
    CHECK(laplacian_l2_norm(r) >= p.kappa0 * grad_l2_norm(r));
}

TEST_CASE("norm homogeneity and the embedding chain") {
    auto p = PhysicalParams::make(2, 3.7, 0.23);
    auto u = random_field(p, 6, 1.0, 6.0, 17, 0.8);
    const double c = 3.25;
    SpectralField cu = u;
    cu *= c;
    CHECK(sobolev_l1_norm(cu, 1.3) ==
          doctest::Approx(c * sobolev_l1_norm(u, 1.3)).epsilon(1e-14));
    CHECK(gevrey_norm(cu, GevreyWeight(0.4, -0.7)) ==
          doctest::Approx(c * gevrey_norm(u, GevreyWeight(0.4, -0.7))).epsilon(1e-14));
    CHECK(l2_norm(cu) == doctest::Approx(c * l2_norm(u)).epsilon(1e-14));
    CHECK(wiener_norm(cu) == doctest::Approx(c * wiener_norm(u)).epsilon(1e-14));

    // l1 >= l2 on sequences; |k| >= 1 powers the sigma >= 0 chain
    for (double sigma : {0.0, 0.5, 2.0}) {
        const double lhs = sobolev_l1_norm(u, sigma);
        const double mid = std::pow(p.kappa0, sigma) * wiener_norm(u);
        const double rhs = std::pow(p.kappa0, sigma) * std::pow(2.0 * M_PI, -0.5 * p.n) *
                           std::pow(p.kappa0, 0.5 * p.n) * l2_norm(u);
        CHECK(lhs >= mid * (1.0 - 1e-13));
        CHECK(mid >= rhs * (1.0 - 1e-13));
    }
}

TEST_CASE("gevrey norm of constructed exponential decay is stable below lambda0") {
    auto p = unit_params(2);
    const double lam0 = 0.5;
    SpectralField u(p, 24);
    for (int i = 0; i < u.mode_count(); ++i) {
        const double r = u.wave(i).norm();
        u.at(i, 0) = std::exp(-lam0 * r);
    }
    const double below = gevrey_norm(u, GevreyWeight(0.9 * lam0, 0.0));
    const double nearer = gevrey_norm(u, GevreyWeight(0.99 * lam0, 0.0));
    CHECK(std::isfinite(below));
    CHECK(nearer > 2.0 * below);  // saturation as lambda -> lambda0
}

TEST_CASE("data numbers: zero forcing and single-pair Grashof") {
    auto p = unit_params(2);
    auto u0 = random_field(p, 6, 1.0, 4.0, 5, 0.5);
    auto d = compute_data_numbers(u0, ForceSchedule::none(), 0.0, 2.0, 1.0,
                                  LambdaSchedule::sqrt_nu_t());
    CHECK(d.Mf == 0.0);
    CHECK(d.G == 0.0);
    CHECK(d.M == d.M0);
    CHECK(d.M0 == doctest::Approx(sobolev_l1_norm(u0, 0.0)).epsilon(1e-15));

    const double g = 0.37;
    SpectralField f(p, 6);
    f.set_coeff(WaveVector{1, 0}, cvec{cplx(0.0), cplx(g), cplx(0)});
    auto df = compute_data_numbers(u0, ForceSchedule::constant(f), 0.0, 2.0, 1.0,
                                   LambdaSchedule::zero());
    CHECK(df.G == doctest::Approx(2.0 * M_PI * std::sqrt(2.0) * g).epsilon(1e-14));
    CHECK(df.M == doctest::Approx(df.M0 + df.Mf).epsilon(1e-16));

    // time-independent f with a constant schedule short-circuits to
    // (nu kappa0^2 Tf)^{1/q} * constant integrand
    const double Tf = 2.5, q = 3.0;
    auto dq = compute_data_numbers(u0, ForceSchedule::constant(f), 0.0, q, Tf,
                                   LambdaSchedule::zero());
    const double expected = std::pow(Tf, 1.0 / q) * sobolev_l1_norm(f, 0.0);
    CHECK(dq.Mf == doctest::Approx(expected).epsilon(1e-14));

    // q = infinity takes the sup
    auto di = compute_data_numbers(u0, ForceSchedule::constant(f), 0.0,
                                   std::numeric_limits<double>::infinity(), Tf,
                                   LambdaSchedule::zero());
    CHECK(di.Mf == doctest::Approx(sobolev_l1_norm(f, 0.0)).epsilon(1e-14));
    CHECK(di.q_prime == 1.0);

    CHECK_THROWS_AS(compute_data_numbers(u0, ForceSchedule::none(), 0.0, 1.0, 1.0,
                                         LambdaSchedule::zero()),
                    ArgumentError);
    CHECK_THROWS_AS(compute_data_numbers(u0, ForceSchedule::none(), 0.0, 2.0, -1.0,
                                         LambdaSchedule::zero()),
                    ArgumentError);
}

TEST_CASE("data numbers quadrature handles the sqrt schedule accurately") {
    // Single pair +-(1,0), |f| = g, sigma = 0, lambda(s) = sqrt(nu s):
    // ||f||_{lambda(s),0} = 2 g e^{kappa0 sqrt(nu s)}, so the q-integral has
    // the closed form int_0^T e^{q kappa0 sqrt(nu s)} ds, evaluated here by
    // substitution x = sqrt(s): 2 int_0^sqrt(T) x e^{q kappa0 sqrt(nu) x} dx.
    auto p = unit_params(2);
    const double g = 0.2, Tf = 1.7, q = 2.0;
    SpectralField f(p, 4);
    f.set_coeff(WaveVector{1, 0}, cvec{cplx(0.0), cplx(g), cplx(0)});
    SpectralField u0(p, 4);
    auto d = compute_data_numbers(u0, ForceSchedule::constant(f), 0.0, q, Tf,
                                  LambdaSchedule::sqrt_nu_t());
    const double a = q;  // q * kappa0 * sqrt(nu) with kappa0 = nu = 1
    const double rt = std::sqrt(Tf);
    const double integral = std::pow(2.0 * g, q) * 2.0 *
                            ((rt / a) * std::exp(a * rt) - (std::exp(a * rt) - 1.0) / (a * a));
    const double expected = std::pow(integral, 1.0 / q);
    CHECK(d.Mf == doctest::Approx(expected).epsilon(5e-4));
}
