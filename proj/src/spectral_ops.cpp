#include "gnse/spectral_ops.hpp"

#include <cmath>
#include <random>

#include "gnse/fft.hpp"

namespace gnse {

SpectralField leray_project(const SpectralField& f) {
    SpectralField out = f;
    const int n = f.n();
    for (int i = 0; i < f.mode_count(); ++i) {
        const WaveVector& k = f.wave(i);
        const double k2 = double(k.norm2());
        cplx dot(0);
        for (int c = 0; c < n; ++c) dot += double(k.c[c]) * out.at(i, c);
        dot /= k2;
        for (int c = 0; c < n; ++c) out.at(i, c) -= dot * double(k.c[c]);
    }
    return out;
}

namespace {

// Dense full-box view of a field, component-major: cmp[c][box_index(k)].
struct FullBox {
    int n, K, side;
    std::vector<cplx> cmp[3];

    FullBox(const SpectralField& u) : n(u.n()), K(u.K()), side(2 * u.K() + 1) {
        const size_t pts = (n == 3) ? size_t(side) * side * side : size_t(side) * side;
        for (int c = 0; c < n; ++c) cmp[c].assign(pts, cplx(0));
        for (int i = 0; i < u.mode_count(); ++i) {
            const WaveVector& k = u.wave(i);
            const size_t ip = index(k), im = index(k.negated());
            for (int c = 0; c < n; ++c) {
                cmp[c][ip] = u.at(i, c);
                cmp[c][im] = std::conj(u.at(i, c));
            }
        }
    }

    size_t index(const WaveVector& k) const {
        size_t idx = size_t(k.c[0] + K) * side + size_t(k.c[1] + K);
        if (n == 3) idx = idx * side + size_t(k.c[2] + K);
        return idx;
    }
};

void check_pair(const SpectralField& u, const SpectralField& v) {
    if (!u.same_layout(v)) throw ConfigError("bilinear: fields must share params and K");
}

}  // namespace

SpectralField bilinear_direct(const SpectralField& u, const SpectralField& v) {
    check_pair(u, v);
    const int n = u.n(), K = u.K();
    const FullBox ub(u), vb(v);
    SpectralField acc(u.params(), K);

    const int k3_range = (n == 3) ? 1 : 0;
    for (int i = 0; i < acc.mode_count(); ++i) {
        const WaveVector& k = acc.wave(i);
        cplx s[3] = {cplx(0), cplx(0), cplx(0)};
        const int l1a = std::max(-K, k.c[0] - K), l1b = std::min(K, k.c[0] + K);
        const int l2a = std::max(-K, k.c[1] - K), l2b = std::min(K, k.c[1] + K);
        const int l3a = k3_range ? std::max(-K, k.c[2] - K) : 0;
        const int l3b = k3_range ? std::min(K, k.c[2] + K) : 0;
        for (int l1 = l1a; l1 <= l1b; ++l1)
            for (int l2 = l2a; l2 <= l2b; ++l2)
                for (int l3 = l3a; l3 <= l3b; ++l3) {
                    const WaveVector l{l1, l2, l3};
                    const WaveVector m{k.c[0] - l1, k.c[1] - l2, k.c[2] - l3};
                    const size_t il = ub.index(l), im = vb.index(m);
                    cplx dot = double(k.c[0]) * ub.cmp[0][il] + double(k.c[1]) * ub.cmp[1][il];
                    if (n == 3) dot += double(k.c[2]) * ub.cmp[2][il];
                    for (int c = 0; c < n; ++c) s[c] += dot * vb.cmp[c][im];
                }
        for (int c = 0; c < n; ++c) acc.at(i, c) = s[c];
    }
    acc *= cplx(0.0, u.params().kappa0);
    return leray_project(acc);
}

SpectralField bilinear_fft(const SpectralField& u, const SpectralField& v) {
    check_pair(u, v);
    const int n = u.n(), K = u.K();
    const int M = good_fft_size(3 * K + 1);
    FftGrid grid(n, M);
    const size_t pts = grid.points();

    auto wrap = [M](int k) { return size_t(((k % M) + M) % M); };
    auto bin = [&](const WaveVector& k) {
        size_t idx = wrap(k.c[0]) * M + wrap(k.c[1]);
        if (n == 3) idx = idx * M + wrap(k.c[2]);
        return idx;
    };

    // Physical-space samples of each component of u and v.
    std::vector<std::vector<cplx>> up(n), vp(n);
    for (int pass = 0; pass < 2; ++pass) {
        const SpectralField& f = pass == 0 ? u : v;
        auto& dst = pass == 0 ? up : vp;
        for (int c = 0; c < n; ++c) {
            std::fill(grid.data(), grid.data() + pts, cplx(0));
            for (int i = 0; i < f.mode_count(); ++i) {
                const WaveVector& k = f.wave(i);
                grid.data()[bin(k)] = f.at(i, c);
                grid.data()[bin(k.negated())] = std::conj(f.at(i, c));
            }
            grid.backward();
            dst[c].assign(grid.data(), grid.data() + pts);
        }
    }

    // C_{ji}(k) = (u_j * v_i)(k); accumulate sum_j k_j C_{ji} per component i.
    SpectralField acc(u.params(), K);
    const double inv = 1.0 / double(pts);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            for (size_t x = 0; x < pts; ++x) grid.data()[x] = up[j][x] * vp[i][x];
            grid.forward();
            for (int m = 0; m < acc.mode_count(); ++m) {
                const WaveVector& k = acc.wave(m);
                acc.at(m, i) += double(k.c[j]) * grid.data()[bin(k)] * inv;
            }
        }
    acc *= cplx(0.0, u.params().kappa0);
    return leray_project(acc);
}

SpectralField heat_propagate(const SpectralField& u, double t, double nu_scale) {
    if (t < 0.0) throw ArgumentError("heat_propagate: t must be >= 0");
    if (!(nu_scale > 0.0)) throw ArgumentError("heat_propagate: nu_scale must be > 0");
    const double a = nu_scale * u.params().nu * t * u.params().kappa0 * u.params().kappa0;
    SpectralField out = u;
    for (int i = 0; i < out.mode_count(); ++i) {
        const double factor = std::exp(-a * double(out.wave(i).norm2()));
        for (int c = 0; c < out.n(); ++c) out.at(i, c) *= factor;
    }
    return out;
}

namespace {

// Deterministic uniform in (0,1] and standard normal pairs; mt19937_64 is
// fully pinned by the standard, so the stream is platform-independent.
double unit_open(std::mt19937_64& rng) {
    return (double(rng() >> 11) + 1.0) * 0x1.0p-53;
}

void box_muller(std::mt19937_64& rng, double& g1, double& g2) {
    const double r = std::sqrt(-2.0 * std::log(unit_open(rng)));
    const double a = 2.0 * M_PI * unit_open(rng);
    g1 = r * std::cos(a);
    g2 = r * std::sin(a);
}

}  // namespace

SpectralField random_field(const PhysicalParams& p, int K, double band_lo, double band_hi,
                           uint64_t seed, double amplitude, AmplitudeProfile profile,
                           double lambda0) {
    if (band_lo > band_hi) throw ArgumentError("random_field: empty band (band_lo > band_hi)");
    if (band_hi > double(K) * std::sqrt(double(p.n)) + 1e-12)
        throw ArgumentError("random_field: band exceeds truncation");
    SpectralField f(p, K);
    std::mt19937_64 rng(seed);
    bool populated = false;
    for (int i = 0; i < f.mode_count(); ++i) {
        const double r = f.wave(i).norm();
        if (r < band_lo - 1e-12 || r > band_hi + 1e-12) continue;
        populated = true;
        double amp = amplitude;
        if (profile == AmplitudeProfile::exp_decay) amp *= std::exp(-lambda0 * p.kappa0 * r);
        for (int c = 0; c < p.n; ++c) {
            double g1, g2;
            box_muller(rng, g1, g2);
            f.at(i, c) = amp * cplx(g1, g2) * M_SQRT1_2;
        }
    }
    if (!populated) throw ArgumentError("random_field: no lattice modes in band");
    return leray_project(f);
}

double& ScalarBox::at(const WaveVector& k) { return val[index(k)]; }
double ScalarBox::at(const WaveVector& k) const { return val[index(k)]; }

size_t ScalarBox::index(const WaveVector& k) const {
    const int side = 2 * K + 1;
    size_t idx = size_t(k.c[0] + K) * side + size_t(k.c[1] + K);
    if (n == 3) idx = idx * side + size_t(k.c[2] + K);
    return idx;
}

ScalarBox abs_convolution(const SpectralField& u, const SpectralField& v, int out_K) {
    check_pair(u, v);
    const int n = u.n(), K = u.K();
    const int side_in = 2 * K + 1;
    const size_t pts_in = (n == 3) ? size_t(side_in) * side_in * side_in : size_t(side_in) * side_in;

    auto expand = [&](const SpectralField& f) {
        std::vector<double> a(pts_in, 0.0);
        ScalarBox view{n, K, {}};
        for (int i = 0; i < f.mode_count(); ++i) {
            const double m = f.mode_abs(i);
            a[view.index(f.wave(i))] = m;
            a[view.index(f.wave(i).negated())] = m;
        }
        return a;
    };
    const std::vector<double> a = expand(u), b = expand(v);

    ScalarBox out;
    out.n = n;
    out.K = out_K;
    const int side_out = 2 * out_K + 1;
    const size_t pts_out =
        (n == 3) ? size_t(side_out) * side_out * side_out : size_t(side_out) * side_out;
    out.val.assign(pts_out, 0.0);

    ScalarBox in_view{n, K, {}};
    const int z_lo = (n == 3) ? -K : 0, z_hi = (n == 3) ? K : 0;
    for (int l1 = -K; l1 <= K; ++l1)
        for (int l2 = -K; l2 <= K; ++l2)
            for (int l3 = z_lo; l3 <= z_hi; ++l3) {
                const double av = a[in_view.index(WaveVector{l1, l2, l3})];
                if (av == 0.0) continue;
                for (int m1 = -K; m1 <= K; ++m1)
                    for (int m2 = -K; m2 <= K; ++m2)
                        for (int m3 = z_lo; m3 <= z_hi; ++m3) {
                            const WaveVector s{l1 + m1, l2 + m2, l3 + m3};
                            if (s.max_norm() > out_K) continue;
                            out.val[out.index(s)] += av * b[in_view.index(WaveVector{m1, m2, m3})];
                        }
            }
    return out;
}

}  // namespace gnse
