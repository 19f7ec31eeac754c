#pragma once

#include <cstdint>
#include <vector>

#include "gnse/field.hpp"

namespace gnse {

// Helmholtz-Leray projection: for each mode, remove the component of u(k)
// parallel to k.  Idempotent; a contraction per mode.
SpectralField leray_project(const SpectralField& f);

// Advective bilinear term B[u,v](k) = i kappa0 P( sum_l (k.u(l)) v(k-l) ),
// truncated to the shared box.  Exact double-loop convolution.
SpectralField bilinear_direct(const SpectralField& u, const SpectralField& v);

// Same operator through zero-padded FFTs (grid >= 3K+1 per dimension, so
// the truncated quadratic product is alias-free and matches bilinear_direct
// to rounding).
SpectralField bilinear_fft(const SpectralField& u, const SpectralField& v);

// Heat semigroup: multiply each mode by exp(-nu_scale * nu * t * kappa0^2 |k|^2).
SpectralField heat_propagate(const SpectralField& u, double t, double nu_scale = 1.0);

enum class AmplitudeProfile {
    flat,       // |u(k)| ~ amplitude on the band
    exp_decay,  // |u(k)| ~ amplitude * exp(-lambda0 kappa0 |k|)
};

// Deterministic band-limited divergence-free random field.  Support on
// band_lo <= |k| <= band_hi (euclidean).  Identical output for identical
// arguments on every platform (hand-rolled Box-Muller over mt19937_64).
SpectralField random_field(const PhysicalParams& p, int K, double band_lo, double band_hi,
                           uint64_t seed, double amplitude,
                           AmplitudeProfile profile = AmplitudeProfile::flat,
                           double lambda0 = 0.0);

// Scalar modulus convolution (|u| * |v|)(k) over the full box |k|_inf <= out_K,
// used by the Banach-algebra checks.  Entry for k=0 included.
struct ScalarBox {
    int n = 2;
    int K = 0;
    std::vector<double> val;  // (2K+1)^n entries, row-major over (k+K)

    double& at(const WaveVector& k);
    double at(const WaveVector& k) const;
    size_t index(const WaveVector& k) const;
};

ScalarBox abs_convolution(const SpectralField& u, const SpectralField& v, int out_K);

}  // namespace gnse
