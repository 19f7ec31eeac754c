#include <cmath>
#include <random>

#include "doctest.h"
#include "gnse/semigroup.hpp"
#include "gnse/spectral_ops.hpp"

using namespace gnse;

namespace {
PhysicalParams unit_params(int n) { return PhysicalParams::make(n, 2.0 * M_PI, 1.0); }
}

TEST_CASE("heat smoothing: beta = 0 is plain contractivity") {
    auto u = random_field(unit_params(2), 6, 1.0, 6.0, 31, 1.0);
    auto r = check_heat_smoothing(u, 0.0, 0.0, 0.0, 0.4);
    CHECK(r.constant_used == 1.0);
    CHECK(r.passed);
    CHECK(r.ratio < 1.0);
    CHECK_THROWS_AS(check_heat_smoothing(u, 0.0, 0.0, 0.5, 0.0), ArgumentError);
}

TEST_CASE("heat smoothing constant is attained by a tuned single mode") {
    auto p = unit_params(2);
    for (double beta : {0.25, 0.5, 1.0, 1.7}) {
        SpectralField u(p, 4);
        u.set_coeff(WaveVector{2, 1}, cvec{cplx(0.0, 1.0), cplx(0.0, -2.0), cplx(0)});
        // lhs/rhs peaks where nu t kappa0^2 |k|^2 = beta/2
        const double t = 0.5 * beta / double(WaveVector{2, 1}.norm2());
        auto r = check_heat_smoothing(u, 0.3, -0.4, beta, t);
        CHECK(r.passed);
        CHECK(r.ratio > 0.999999);
    }
}

TEST_CASE("heat smoothing property sweep") {
    std::mt19937_64 pick(2024);
    auto urand = [&](double a, double b) {
        return a + (b - a) * double(pick() >> 11) * 0x1.0p-53;
    };
    for (int cases = 0; cases < 300; ++cases) {
        const int n = (pick() & 1) ? 2 : 3;
        const int K = n == 2 ? 6 : 4;
        auto u = random_field(unit_params(n), K, 1.0, double(K), pick(), 1.0);
        auto r = check_heat_smoothing(u, urand(0.0, 0.5), urand(-1.0, 1.0), urand(0.0, 1.0),
                                      urand(1e-3, 1.0));
        CHECK(r.passed);
    }
}

TEST_CASE("schedule absorption at alpha = 1 costs at most e^{1/2}") {
    auto p = unit_params(2);
    SpectralField z(p, 4);
    auto rz = check_schedule_absorption(z, 0.0, 1.0, 0.0);
    CHECK(rz.lhs == 0.0);
    CHECK(rz.passed);

    std::mt19937_64 pick(77);
    auto urand = [&](double a, double b) {
        return a + (b - a) * double(pick() >> 11) * 0x1.0p-53;
    };
    double max_ratio = 0.0;
    for (int cases = 0; cases < 300; ++cases) {
        const int n = (pick() & 1) ? 2 : 3;
        const int K = n == 2 ? 6 : 4;
        auto u = random_field(unit_params(n), K, 1.0, double(K), pick(), 1.0);
        const double t = urand(1e-4, 2.0);
        const double s = urand(0.0, 0.95) * t;
        auto r = check_schedule_absorption(u, s, t, urand(-1.0, 1.0));
        CHECK(r.passed);
        max_ratio = std::max(max_ratio, r.ratio);
    }
    // single small-t mode pushes the ratio toward the constant
    SpectralField u(p, 8);
    u.set_coeff(WaveVector{8, 0}, cvec{cplx(0.0), cplx(1.0), cplx(0)});
    auto r = check_schedule_absorption(u, 0.0, 1.0 / 64.0, 0.0);
    CHECK(r.passed);
    CHECK(r.ratio > 0.9);
    CHECK_THROWS_AS(check_schedule_absorption(u, 1.0, 0.5, 0.0), ArgumentError);
}

TEST_CASE("algebra bound: gamma = 0 is Young's inequality with room to spare") {
    auto u = random_field(unit_params(2), 5, 1.0, 5.0, 101, 0.7);
    auto v = random_field(unit_params(2), 5, 1.0, 5.0, 102, 1.3);
    auto r = check_algebra_bound(u, v, 0.2, 0.0);
    CHECK(r.constant_used == 2.0);
    CHECK(r.passed);
    CHECK(r.ratio <= 0.5 + 1e-12);  // Young gives ||u*v|| <= ||u|| ||v||, half the budget
}

TEST_CASE("algebra bound: two single-pair fields, four-term oracle") {
    auto p = unit_params(2);
    SpectralField u(p, 3), v(p, 3);
    const double a = 0.6, b = 1.1;
    u.set_coeff(WaveVector{1, 0}, cvec{cplx(0.0), cplx(a), cplx(0)});
    v.set_coeff(WaveVector{0, 1}, cvec{cplx(b), cplx(0.0), cplx(0)});
    auto conv = abs_convolution(u, v, 2);
    // support: the four sums (+-1, +-1), each a*b
    for (int s1 : {-1, 1})
        for (int s2 : {-1, 1})
            CHECK(conv.at(WaveVector{s1, s2}) == doctest::Approx(a * b).epsilon(1e-15));
    CHECK(conv.at(WaveVector{1, 0}) == 0.0);
    CHECK(conv.at(WaveVector{2, 1}) == 0.0);

    auto r = check_algebra_bound(u, v, 0.0, 1.0);
    // lhs = kappa0 * 4 * sqrt(2) a b; rhs = 2 * (2a)(2b) = 8ab
    CHECK(r.lhs == doctest::Approx(4.0 * std::sqrt(2.0) * a * b).epsilon(1e-14));
    CHECK(r.rhs == doctest::Approx(8.0 * a * b).epsilon(1e-14));
    CHECK(r.passed);
}

TEST_CASE("algebra bound property sweep over gamma") {
    std::mt19937_64 pick(555);
    auto urand = [&](double a, double b) {
        return a + (b - a) * double(pick() >> 11) * 0x1.0p-53;
    };
    for (double gamma : {0.0, 0.5, 1.0, 2.0})
        for (int cases = 0; cases < 60; ++cases) {
            const int n = (pick() & 1) ? 2 : 3;
            const int K = n == 2 ? 5 : 3;
            auto u = random_field(unit_params(n), K, 1.0, double(K), pick(), 1.0);
            auto v = random_field(unit_params(n), K, 1.0, double(K), pick(), 1.0);
            auto r = check_algebra_bound(u, v, urand(0.0, 0.4), gamma);
            CHECK(r.passed);
        }
    CHECK_THROWS_AS(check_algebra_bound(random_field(unit_params(2), 3, 1.0, 2.0, 1, 1.0),
                                        random_field(unit_params(2), 3, 1.0, 2.0, 2, 1.0), 0.0,
                                        -0.5),
                    ArgumentError);
}

TEST_CASE("heat bilinear: shear pair annihilates, exponent arithmetic, sweep") {
    auto p = unit_params(2);
    SpectralField shear(p, 4);
    shear.set_coeff(WaveVector{1, 0}, cvec{cplx(0.0), cplx(1.0), cplx(0)});
    auto r0 = check_heat_bilinear(shear, shear, 0.1, 0.0, 0.0, 0.5);
    CHECK(r0.lhs < 1e-13);
    CHECK(r0.passed);

    // delta = gamma - 1 removes the time singularity: constant is C_alg only
    auto u = random_field(p, 5, 1.0, 5.0, 201, 1.0);
    auto v = random_field(p, 5, 1.0, 5.0, 202, 1.0);
    auto r1 = check_heat_bilinear(u, v, 0.0, 1.0, 0.0, 1e-9);
    CHECK(r1.constant_used == doctest::Approx(algebra_constant(1.0)));
    CHECK(r1.passed);

    std::mt19937_64 pick(303);
    auto urand = [&](double a, double b) {
        return a + (b - a) * double(pick() >> 11) * 0x1.0p-53;
    };
    for (int cases = 0; cases < 150; ++cases) {
        const int n = (pick() & 1) ? 2 : 3;
        const int K = n == 2 ? 5 : 3;
        auto uu = random_field(unit_params(n), K, 1.0, double(K), pick(), 1.0);
        auto vv = random_field(unit_params(n), K, 1.0, double(K), pick(), 1.0);
        auto r = check_heat_bilinear(uu, vv, urand(0.0, 0.3), 0.0, 0.0, urand(1e-4, 1.0));
        CHECK(r.passed);
    }
    CHECK_THROWS_AS(check_heat_bilinear(u, v, 0.0, 0.0, 0.0, 0.0), ArgumentError);
}

TEST_CASE("checks are invariant under field rescaling") {
    auto u = random_field(unit_params(2), 5, 1.0, 5.0, 42, 1.0);
    auto v = random_field(unit_params(2), 5, 1.0, 5.0, 43, 1.0);
    SpectralField cu = u, cv = v;
    cu *= 7.5;
    cv *= 7.5;
    auto r1 = check_heat_smoothing(u, 0.2, 0.1, 0.6, 0.05);
    auto r2 = check_heat_smoothing(cu, 0.2, 0.1, 0.6, 0.05);
    CHECK(r1.ratio == doctest::Approx(r2.ratio).epsilon(1e-12));
    auto a1 = check_algebra_bound(u, v, 0.1, 1.0);
    auto a2 = check_algebra_bound(cu, cv, 0.1, 1.0);
    CHECK(a1.ratio == doctest::Approx(a2.ratio).epsilon(1e-12));
    auto h1 = check_heat_bilinear(u, v, 0.1, 0.5, 0.2, 0.3);
    auto h2 = check_heat_bilinear(cu, cv, 0.1, 0.5, 0.2, 0.3);
    CHECK(h1.ratio == doctest::Approx(h2.ratio).epsilon(1e-12));
}
