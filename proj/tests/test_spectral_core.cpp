#include <cmath>
#include <complex>

#include "doctest.h"
#include "gnse/field.hpp"
#include "gnse/norms.hpp"
#include "gnse/spectral_ops.hpp"

using namespace gnse;

namespace {

PhysicalParams unit_params(int n) { return PhysicalParams::make(n, 2.0 * M_PI, 1.0); }

// Reference Leray formula applied by hand: u - (k.u/|k|^2) k.
cvec leray_oracle(const WaveVector& k, const cvec& v, int n) {
    cplx dot(0);
    for (int c = 0; c < n; ++c) dot += double(k.c[c]) * v[c];
    dot /= double(k.norm2());
    cvec out = v;
    for (int c = 0; c < n; ++c) out[c] -= dot * double(k.c[c]);
    return out;
}

double field_max_diff(const SpectralField& a, const SpectralField& b) {
    REQUIRE(a.same_layout(b));
    double m = 0.0;
    for (int i = 0; i < a.mode_count(); ++i)
        for (int c = 0; c < a.n(); ++c) m = std::max(m, std::abs(a.at(i, c) - b.at(i, c)));
    return m;
}

}  // namespace

TEST_CASE("physical params derive kappa0 = 2pi/L") {
    auto p = PhysicalParams::make(2, 3.0, 0.7);
    CHECK(p.kappa0 * p.L == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
    CHECK_THROWS_AS(PhysicalParams::make(4, 1.0, 1.0), ArgumentError);
    CHECK_THROWS_AS(PhysicalParams::make(2, -1.0, 1.0), ArgumentError);
    CHECK_THROWS_AS(PhysicalParams::make(2, 1.0, 0.0), ArgumentError);
}

TEST_CASE("half lattice stores each conjugate pair once") {
    HalfLattice lat(2, 3);
    CHECK(lat.size() == ((2 * 3 + 1) * (2 * 3 + 1) - 1) / 2);
    for (int i = 0; i < lat.size(); ++i) {
        auto s = lat.locate(lat.wave(i));
        CHECK(s.idx == i);
        CHECK_FALSE(s.conj);
        auto sm = lat.locate(lat.wave(i).negated());
        CHECK(sm.idx == i);
        CHECK(sm.conj);
    }
    CHECK(lat.locate(WaveVector{0, 0}).idx == -1);
    CHECK(lat.locate(WaveVector{4, 0}).idx == -1);

    HalfLattice lat3(3, 2);
    CHECK(lat3.size() == ((2 * 2 + 1) * (2 * 2 + 1) * (2 * 2 + 1) - 1) / 2);
}

TEST_CASE("hermitian symmetry is structural") {
    SpectralField u(unit_params(2), 4);
    u.set_coeff(WaveVector{1, 2}, cvec{cplx(1.0, 2.0), cplx(-0.5, 0.25), cplx(0)});
    const cvec back = u.coeff(WaveVector{-1, -2});
    CHECK(back[0] == std::conj(cplx(1.0, 2.0)));
    CHECK(back[1] == std::conj(cplx(-0.5, 0.25)));

    // Writing through the partner conjugates on the way in.
    u.set_coeff(WaveVector{-2, 1}, cvec{cplx(0.0, 1.0), cplx(3.0, 0.0), cplx(0)});
    CHECK(u.coeff(WaveVector{2, -1})[0] == cplx(0.0, -1.0));
    CHECK_THROWS_AS(u.set_coeff(WaveVector{0, 0}, cvec{}), ArgumentError);
}

TEST_CASE("leray projection: trivial and derived examples") {
    SpectralField u(unit_params(2), 2);
    // perpendicular mode is unchanged
    u.set_coeff(WaveVector{0, 1}, cvec{cplx(1.0), cplx(0.0), cplx(0)});
    // parallel mode is annihilated
    u.set_coeff(WaveVector{1, 0}, cvec{cplx(1.0), cplx(0.0), cplx(0)});
    auto pu = leray_project(u);
    CHECK(std::abs(pu.coeff(WaveVector{0, 1})[0] - cplx(1.0)) < 1e-15);
    CHECK(std::abs(pu.coeff(WaveVector{1, 0})[0]) < 1e-15);
    CHECK(std::abs(pu.coeff(WaveVector{1, 0})[1]) < 1e-15);

    // 3D: u((1,1,0)) = (1,0,0) -> (1/2, -1/2, 0)
    SpectralField w(unit_params(3), 2);
    w.set_coeff(WaveVector{1, 1, 0}, cvec{cplx(1.0), cplx(0.0), cplx(0.0)});
    auto pw = leray_project(w);
    const cvec r = pw.coeff(WaveVector{1, 1, 0});
    CHECK(std::abs(r[0] - cplx(0.5)) < 1e-15);
    CHECK(std::abs(r[1] - cplx(-0.5)) < 1e-15);
    CHECK(std::abs(r[2]) < 1e-15);
}

TEST_CASE("leray projection is idempotent and matches the per-mode oracle") {
    auto u = random_field(unit_params(3), 4, 1.0, 4.0, 11, 1.0);
    // random_field already projects; perturb to break divergence-freeness
    SpectralField v = u;
    for (int i = 0; i < v.mode_count(); ++i) v.at(i, 0) += cplx(0.3, -0.2);
    auto pv = leray_project(v);
    for (int i = 0; i < v.mode_count(); ++i) {
        const cvec want = leray_oracle(v.wave(i), {v.at(i, 0), v.at(i, 1), v.at(i, 2)}, 3);
        for (int c = 0; c < 3; ++c) CHECK(std::abs(pv.at(i, c) - want[c]) < 1e-14);
    }
    auto ppv = leray_project(pv);
    CHECK(field_max_diff(pv, ppv) < 1e-14 * pv.max_abs());
    CHECK(pv.divergence_free());
}

TEST_CASE("bilinear term: single shear pair gives zero") {
    // u supported on +-(1,0) with u((1,0)) = (0, a): divergence-free, and
    // (k . u(l)) vanishes for every contributing l.
    SpectralField u(unit_params(2), 3);
    u.set_coeff(WaveVector{1, 0}, cvec{cplx(0.0), cplx(0.7, 0.1), cplx(0)});
    auto b = bilinear_direct(u, u);
    CHECK(b.max_abs() < 1e-15);
    auto bf = bilinear_fft(u, u);
    CHECK(bf.max_abs() < 1e-14);
}

TEST_CASE("bilinear term: hand convolution of two single-pair fields") {
    // u on +-(1,0), u((1,0)) = (0,1); v on +-(0,1), v((0,1)) = (1,0).
    // Contributions land on k in {+-(1,1), +-(1,-1)}; expected values from
    // the four-term convolution sum done on paper:
    //   S(k) = sum_l (k.u(l)) v(k-l) before projection and i*kappa0.
    //   S((1,1)) = (k.u(1,0)) v(0,1) = (1*0 + 1*1)(1,0) = (1,0)
    //   after projection P_{(1,1)}(1,0) = (1/2,-1/2); B = i*(1/2,-1/2).
    //   S((1,-1)) = (k.u(1,0)) v(0,-1) = (1*0 + (-1)*1)(1,0) = (-1,0)
    //   after projection P_{(1,-1)}(-1,0) = (-1/2,-1/2); B = i*(-1/2,-1/2).
    SpectralField u(unit_params(2), 3), v(unit_params(2), 3);
    u.set_coeff(WaveVector{1, 0}, cvec{cplx(0.0), cplx(1.0), cplx(0)});
    v.set_coeff(WaveVector{0, 1}, cvec{cplx(1.0), cplx(0.0), cplx(0)});
    auto b = bilinear_direct(u, v);

    const cplx i(0.0, 1.0);
    CHECK(std::abs(b.coeff(WaveVector{1, 1})[0] - i * 0.5) < 1e-15);
    CHECK(std::abs(b.coeff(WaveVector{1, 1})[1] + i * 0.5) < 1e-15);
    CHECK(std::abs(b.coeff(WaveVector{1, -1})[0] + i * 0.5) < 1e-15);
    CHECK(std::abs(b.coeff(WaveVector{1, -1})[1] + i * 0.5) < 1e-15);
    // nothing anywhere else
    for (int idx = 0; idx < b.mode_count(); ++idx) {
        const WaveVector& k = b.wave(idx);
        if (std::abs(k.c[0]) == 1 && std::abs(k.c[1]) == 1) continue;
        CHECK(b.mode_abs(idx) < 1e-15);
    }
}

TEST_CASE("bilinear: zero field annihilates") {
    auto u = random_field(unit_params(2), 5, 1.0, 4.0, 3, 1.0);
    SpectralField z(unit_params(2), 5);
    CHECK(bilinear_direct(z, u).max_abs() == 0.0);
    CHECK(bilinear_direct(u, z).max_abs() == 0.0);
}

TEST_CASE("bilinear fft equals direct convolution") {
    for (int n : {2, 3}) {
        const int K = n == 2 ? 8 : 5;
        for (uint64_t seed : {1u, 2u, 3u}) {
            auto u = random_field(unit_params(n), K, 1.0, double(K), seed, 1.0);
            auto v = random_field(unit_params(n), K, 1.0, double(K), seed + 100, 1.0);
            auto bd = bilinear_direct(u, v);
            auto bf = bilinear_fft(u, v);
            CHECK(field_max_diff(bd, bf) < 1e-12);
        }
    }
}

TEST_CASE("bilinear term is L2-orthogonal to u") {
    // Re sum_k B[u,u](k) . conj(u(k)) = 0: the nonlinear term moves energy
    // between shells without creating it.
    for (uint64_t seed : {5u, 6u}) {
        auto u = random_field(unit_params(2), 6, 1.0, 6.0, seed, 1.0);
        auto b = bilinear_direct(u, u);
        double re = 0.0, scale = 0.0;
        for (int i = 0; i < u.mode_count(); ++i)
            for (int c = 0; c < 2; ++c) {
                re += 2.0 * std::real(b.at(i, c) * std::conj(u.at(i, c)));
                scale += 2.0 * std::norm(u.at(i, c));
            }
        CHECK(std::abs(re) < 1e-12 * scale * u.K());
    }
}

TEST_CASE("pointwise convolution bound |B[u,v](k)| <= kappa0 |k| (|u|*|v|)(k)") {
    auto u = random_field(unit_params(2), 6, 1.0, 6.0, 21, 1.0);
    auto v = random_field(unit_params(2), 6, 1.0, 6.0, 22, 1.0);
    auto b = bilinear_direct(u, v);
    auto conv = abs_convolution(u, v, 6);
    const double kappa0 = u.params().kappa0;
    for (int i = 0; i < b.mode_count(); ++i) {
        const WaveVector& k = b.wave(i);
        CHECK(b.mode_abs(i) <= kappa0 * k.norm() * conv.at(k) * (1.0 + 1e-12) + 1e-300);
    }
}

TEST_CASE("heat propagator: identity, decay, semigroup, commutation") {
    auto p = unit_params(2);
    SpectralField u(p, 4);
    u.set_coeff(WaveVector{1, 0}, cvec{cplx(0.0), cplx(1.0), cplx(0)});
    u.set_coeff(WaveVector{2, 2}, cvec{cplx(0.0, 0.5), cplx(0.0, -0.5), cplx(0)});

    CHECK(field_max_diff(heat_propagate(u, 0.0), u) == 0.0);

    auto h = heat_propagate(u, 0.5);
    CHECK(std::abs(h.coeff(WaveVector{1, 0})[1] - cplx(std::exp(-0.5))) < 1e-15);

    auto two = heat_propagate(heat_propagate(u, 0.3), 0.7);
    auto one = heat_propagate(u, 1.0);
    CHECK(field_max_diff(two, one) < 1e-14 * one.max_abs());

    auto a = leray_project(heat_propagate(u, 0.2));
    auto b = heat_propagate(leray_project(u), 0.2);
    CHECK(field_max_diff(a, b) < 1e-16);

    CHECK_THROWS_AS(heat_propagate(u, -1.0), ArgumentError);
}

TEST_CASE("random_field: deterministic, banded, divergence-free") {
    auto p = unit_params(2);
    auto a = random_field(p, 8, 2.0, 5.0, 42, 0.3);
    auto b = random_field(p, 8, 2.0, 5.0, 42, 0.3);
    CHECK(field_max_diff(a, b) == 0.0);

    auto c = random_field(p, 8, 2.0, 5.0, 43, 0.3);
    CHECK(field_max_diff(a, c) > 0.0);

    for (int i = 0; i < a.mode_count(); ++i) {
        const double r = a.wave(i).norm();
        if (a.mode_abs(i) > 0.0) CHECK((r >= 2.0 && r <= 5.0));
    }
    CHECK(a.divergence_free());

    // band [1,1] in 2D touches exactly the 4 unit modes (2 canonical)
    auto d = random_field(p, 8, 1.0, 1.0, 7, 1.0);
    int populated = 0;
    for (int i = 0; i < d.mode_count(); ++i)
        if (d.mode_abs(i) > 0.0) ++populated;
    CHECK(populated == 2);

    CHECK_THROWS_AS(random_field(p, 8, 5.0, 2.0, 1, 1.0), ArgumentError);
}

TEST_CASE("taylor-green bilinear term is a pure gradient (projected away)") {
    auto u = SpectralField::taylor_green(unit_params(2), 4);
    CHECK(u.divergence_free());
    auto b = bilinear_direct(u, u);
    CHECK(b.max_abs() < 1e-15);
}
