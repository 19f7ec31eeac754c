#include "gnse/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace gnse {

PhysicalParams PhysicalParams::make(int n, double L, double nu) {
    if (n != 2 && n != 3) throw ArgumentError("dimension n must be 2 or 3");
    if (!(L > 0.0)) throw ArgumentError("box size L must be positive");
    if (!(nu > 0.0)) throw ArgumentError("viscosity nu must be positive");
    PhysicalParams p;
    p.n = n;
    p.L = L;
    p.nu = nu;
    p.kappa0 = 2.0 * M_PI / L;
    return p;
}

namespace {

bool is_canonical(const WaveVector& k, int n) {
    for (int i = 0; i < n; ++i) {
        if (k.c[i] > 0) return true;
        if (k.c[i] < 0) return false;
    }
    return false;  // zero vector
}

}  // namespace

HalfLattice::HalfLattice(int n, int K) : n_(n), K_(K) {
    if (n != 2 && n != 3) throw ArgumentError("HalfLattice: n must be 2 or 3");
    if (K < 1) throw ArgumentError("HalfLattice: K must be >= 1");
    const int kz_lo = (n == 3) ? -K : 0;
    const int kz_hi = (n == 3) ? K : 0;
    for (int k1 = -K; k1 <= K; ++k1)
        for (int k2 = -K; k2 <= K; ++k2)
            for (int k3 = kz_lo; k3 <= kz_hi; ++k3) {
                WaveVector k{k1, k2, k3};
                if (is_canonical(k, n)) waves_.push_back(k);
            }
    std::sort(waves_.begin(), waves_.end(), [](const WaveVector& a, const WaveVector& b) {
        if (a.norm2() != b.norm2()) return a.norm2() < b.norm2();
        return a.c < b.c;
    });

    const size_t side = size_t(2 * K + 1);
    table_.assign(n == 3 ? side * side * side : side * side, 0);
    for (int i = 0; i < int(waves_.size()); ++i) {
        table_[box_index(waves_[i])] = i + 1;
        table_[box_index(waves_[i].negated())] = -(i + 1);
    }
}

int HalfLattice::box_index(const WaveVector& k) const {
    const int side = 2 * K_ + 1;
    int idx = (k.c[0] + K_) * side + (k.c[1] + K_);
    if (n_ == 3) idx = idx * side + (k.c[2] + K_);
    return idx;
}

HalfLattice::Slot HalfLattice::locate(const WaveVector& k) const {
    if (k.max_norm() > K_ || k.is_zero()) return {-1, false};
    const int32_t e = table_[box_index(k)];
    if (e == 0) return {-1, false};
    return e > 0 ? Slot{e - 1, false} : Slot{-e - 1, true};
}

std::shared_ptr<const HalfLattice> HalfLattice::get(int n, int K) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const HalfLattice>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, K}];
    if (!slot) slot = std::make_shared<HalfLattice>(n, K);
    return slot;
}

SpectralField::SpectralField(const PhysicalParams& p, int K)
    : params_(p), K_(K), lat_(HalfLattice::get(p.n, K)), a_(size_t(lat_->size()) * 3) {}

cvec SpectralField::coeff(const WaveVector& k) const {
    cvec out{cplx(0), cplx(0), cplx(0)};
    const auto s = lat_->locate(k);
    if (s.idx < 0) return out;
    for (int c = 0; c < params_.n; ++c) {
        const cplx v = at(s.idx, c);
        out[c] = s.conj ? std::conj(v) : v;
    }
    return out;
}

void SpectralField::set_coeff(const WaveVector& k, const cvec& v) {
    const auto s = lat_->locate(k);
    if (s.idx < 0) {
        if (k.is_zero()) throw ArgumentError("set_coeff: mean mode k=0 is pinned to zero");
        throw ArgumentError("set_coeff: wave vector outside truncation");
    }
    for (int c = 0; c < params_.n; ++c) at(s.idx, c) = s.conj ? std::conj(v[c]) : v[c];
}

double SpectralField::mode_abs(int idx) const {
    double s = 0.0;
    for (int c = 0; c < params_.n; ++c) s += std::norm(at(idx, c));
    return std::sqrt(s);
}

double SpectralField::max_abs() const {
    double m = 0.0;
    for (int i = 0; i < mode_count(); ++i) m = std::max(m, mode_abs(i));
    return m;
}

double SpectralField::max_divergence() const {
    double m = 0.0;
    for (int i = 0; i < mode_count(); ++i) {
        const WaveVector& k = wave(i);
        cplx d(0);
        for (int c = 0; c < params_.n; ++c) d += double(k.c[c]) * at(i, c);
        m = std::max(m, std::abs(d));
    }
    return m;
}

bool SpectralField::divergence_free(double rel_tol) const {
    const double scale = max_abs();
    if (scale == 0.0) return true;
    return max_divergence() <= rel_tol * scale;
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    if (!same_layout(o)) throw ConfigError("field layout mismatch in +=");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    if (!same_layout(o)) throw ConfigError("field layout mismatch in -=");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

SpectralField& SpectralField::operator*=(double s) {
    for (auto& v : a_) v *= s;
    return *this;
}

SpectralField& SpectralField::operator*=(cplx s) {
    for (auto& v : a_) v *= s;
    return *this;
}

void SpectralField::zero() { std::fill(a_.begin(), a_.end(), cplx(0)); }

SpectralField SpectralField::taylor_green(const PhysicalParams& p, int K) {
    if (p.n != 2) throw ArgumentError("taylor_green: 2D only");
    if (K < 1) throw ArgumentError("taylor_green: K must be >= 1");
    SpectralField u(p, K);
    const cplx i4(0.0, 0.25);
    u.set_coeff(WaveVector{1, 1}, cvec{-i4, i4, cplx(0)});
    u.set_coeff(WaveVector{1, -1}, cvec{-i4, -i4, cplx(0)});
    return u;
}

}  // namespace gnse
