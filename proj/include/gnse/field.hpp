#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "gnse/errors.hpp"

namespace gnse {

using cplx = std::complex<double>;

// Complex n-vector coefficient; component slots beyond n stay zero.
using cvec = std::array<cplx, 3>;

struct PhysicalParams {
    int n = 2;           // spatial dimension, 2 or 3
    double L = 0.0;      // box side length
    double nu = 0.0;     // viscosity
    double kappa0 = 0.0; // fundamental wavenumber 2*pi/L

    static PhysicalParams make(int n, double L, double nu);
    bool operator==(const PhysicalParams&) const = default;
};

struct WaveVector {
    std::array<int, 3> c{0, 0, 0};

    WaveVector() = default;
    WaveVector(int k1, int k2) : c{k1, k2, 0} {}
    WaveVector(int k1, int k2, int k3) : c{k1, k2, k3} {}

    int norm2() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2]; }
    double norm() const { return std::sqrt(double(norm2())); }
    int max_norm() const {
        int m = std::abs(c[0]);
        m = std::max(m, std::abs(c[1]));
        return std::max(m, std::abs(c[2]));
    }
    WaveVector negated() const { return WaveVector{-c[0], -c[1], -c[2]}; }
    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
    bool operator==(const WaveVector&) const = default;
};

// Canonical half of the truncated lattice {k in Z^n : 0 < |k|_inf <= K}.
// A mode is canonical when its first nonzero component is positive; the
// Hermitian partner -k is implicit.  Modes are ordered by (|k|^2, lex),
// which fixes every summation order in the library.
class HalfLattice {
  public:
    HalfLattice(int n, int K);

    int n() const { return n_; }
    int K() const { return K_; }
    int size() const { return int(waves_.size()); }
    const WaveVector& wave(int idx) const { return waves_[idx]; }

    // Lookup any k: returns {index, conjugate?}; index -1 when k is zero
    // or outside the truncation box.
    struct Slot {
        int idx;
        bool conj;
    };
    Slot locate(const WaveVector& k) const;

    // Shared immutable instances, cached per (n, K).
    static std::shared_ptr<const HalfLattice> get(int n, int K);

  private:
    int n_, K_;
    std::vector<WaveVector> waves_;
    std::vector<int32_t> table_;  // full box -> +-(idx+1), 0 = absent
    int box_index(const WaveVector& k) const;
};

// Truncated Fourier coefficients of a periodic mean-zero vector field.
// Mean-zero and Hermitian symmetry are structural (k=0 is never stored,
// u(-k) is derived by conjugation).
class SpectralField {
  public:
    SpectralField() = default;
    SpectralField(const PhysicalParams& p, int K);

    const PhysicalParams& params() const { return params_; }
    int K() const { return K_; }
    int n() const { return params_.n; }
    int mode_count() const { return lat_ ? lat_->size() : 0; }
    const HalfLattice& lattice() const { return *lat_; }

    const WaveVector& wave(int idx) const { return lat_->wave(idx); }
    cplx& at(int idx, int comp) { return a_[size_t(idx) * 3 + comp]; }
    const cplx& at(int idx, int comp) const { return a_[size_t(idx) * 3 + comp]; }

    // Coefficient at arbitrary k (conjugated for non-canonical k; zero
    // outside the box).
    cvec coeff(const WaveVector& k) const;
    void set_coeff(const WaveVector& k, const cvec& v);

    double mode_abs(int idx) const;  // euclidean |u(k)| of the C^n vector
    double max_abs() const;
    double max_divergence() const;   // max_k |k . u(k)|
    bool divergence_free(double rel_tol = 1e-13) const;

    bool same_layout(const SpectralField& o) const {
        return params_ == o.params_ && K_ == o.K_;
    }

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double s);
    SpectralField& operator*=(cplx s);
    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

    void zero();

    // u = (sin(kappa0 x) cos(kappa0 y), -cos(kappa0 x) sin(kappa0 y)); 2D only.
    static SpectralField taylor_green(const PhysicalParams& p, int K);

  private:
    PhysicalParams params_;
    int K_ = 0;
    std::shared_ptr<const HalfLattice> lat_;
    std::vector<cplx> a_;  // mode_count * 3, canonical modes
};

}  // namespace gnse
