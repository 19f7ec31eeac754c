#include "gnse/turbulence.hpp"

#include <algorithm>
#include <cmath>

#include "gnse/norms.hpp"

namespace gnse {

double kinetic_energy(const SpectralField& u) {
    const double n = l2_norm(u);
    return 0.5 * n * n;
}

double enstrophy(const SpectralField& u) {
    const double n = grad_l2_norm(u);
    return 0.5 * n * n;
}

double l2_inner(const SpectralField& a, const SpectralField& b) {
    if (!a.same_layout(b)) throw ConfigError("l2_inner: layout mismatch");
    double s = 0.0;
    for (int i = 0; i < a.mode_count(); ++i)
        for (int c = 0; c < a.n(); ++c) s += 2.0 * std::real(a.at(i, c) * std::conj(b.at(i, c)));
    const auto& p = a.params();
    return std::pow(2.0 * M_PI / p.kappa0, p.n) * s;
}

namespace {

double trapezoid_mean(const std::vector<double>& times, const std::vector<double>& vals,
                      double T_avg) {
    double integral = 0.0;
    double prev_t = times[0], prev_v = vals[0];
    for (size_t j = 1; j < times.size(); ++j) {
        const double t = times[j], v = vals[j];
        if (t <= T_avg) {
            integral += 0.5 * (prev_v + v) * (t - prev_t);
            prev_t = t;
            prev_v = v;
            if (t == T_avg) break;
        } else {
            // partial trapezoid with the linearly interpolated endpoint
            const double w = (T_avg - prev_t) / (t - prev_t);
            const double v_end = prev_v + w * (v - prev_v);
            integral += 0.5 * (prev_v + v_end) * (T_avg - prev_t);
            break;
        }
    }
    return integral / T_avg;
}

}  // namespace

double time_average(const TrajectorySample& traj,
                    const std::function<double(const SpectralField&)>& fn, double T_avg) {
    traj.validate();
    if (!(T_avg > 0.0)) throw ArgumentError("time_average: T_avg must be > 0");
    if (T_avg > traj.T() * (1.0 + 1e-12))
        throw ArgumentError("time_average: horizon exceeds trajectory");
    std::vector<double> vals(traj.times.size());
    for (int j = 0; j < traj.size(); ++j) vals[size_t(j)] = fn(traj.fields[j]);
    return trapezoid_mean(traj.times, vals, T_avg);
}

DissipationReport compute_dissipation(const TrajectorySample& traj, double T_avg) {
    const auto& p = traj.fields[0].params();
    const double nu = p.nu, kappa0 = p.kappa0;
    const double k3 = kappa0 * kappa0 * kappa0;

    auto grad2 = [](const SpectralField& u) {
        const double g = grad_l2_norm(u);
        return g * g;
    };
    auto lap2 = [](const SpectralField& u) {
        const double g = laplacian_l2_norm(u);
        return g * g;
    };

    DissipationReport r;
    r.T_avg = T_avg;
    r.eps = nu * k3 * time_average(traj, grad2, T_avg);
    double sup_grad2 = 0.0;
    for (int j = 0; j < traj.size() && traj.times[j] <= T_avg * (1.0 + 1e-12); ++j)
        sup_grad2 = std::max(sup_grad2, grad2(traj.fields[j]));
    r.eps_sup = nu * k3 * sup_grad2;

    const double mean_lap2 = time_average(traj, lap2, T_avg);
    const double mean_grad2 = time_average(traj, grad2, T_avg);
    r.eta = nu * kappa0 * kappa0 * mean_lap2;

    const double nu3 = nu * nu * nu;
    r.lambda_eps = r.eps > 0.0 ? std::pow(nu3 / r.eps, 0.25) : 0.0;
    r.lambda_eta = r.eta > 0.0 ? std::pow(nu3 / r.eta, 1.0 / 6.0) : 0.0;
    r.kappa_eta = r.eta > 0.0 ? std::pow(r.eta / (nu * nu), 1.0 / 6.0) : 0.0;
    r.kappa_sigma = mean_grad2 > 0.0 ? std::sqrt(mean_lap2 / mean_grad2) : 0.0;
    return r;
}

double energy_balance_eps(const TrajectorySample& traj, const ForceSchedule& f, double T_avg) {
    const auto& p = traj.fields[0].params();
    const double k3 = p.kappa0 * p.kappa0 * p.kappa0;

    double mean_inj = 0.0;
    if (!f.is_zero()) {
        std::vector<double> vals(traj.times.size());
        for (int j = 0; j < traj.size(); ++j)
            vals[size_t(j)] = l2_inner(leray_project(f.at(traj.times[j])), traj.fields[j]);
        mean_inj = trapezoid_mean(traj.times, vals, T_avg);
    }

    // dE/dt term over the same horizon
    double e_end = 0.0;
    for (int j = 0; j < traj.size(); ++j)
        if (traj.times[j] <= T_avg * (1.0 + 1e-12)) e_end = kinetic_energy(traj.fields[j]);
    const double e0 = kinetic_energy(traj.fields[0]);
    return k3 * (mean_inj - (e_end - e0) / T_avg);
}

double band_energy(const TrajectorySample& traj, double kappa1, double kappa2, double T_avg) {
    const auto& p = traj.fields[0].params();
    const double kappa0 = p.kappa0;
    if (!(kappa1 >= kappa0 * (1.0 - 1e-12)) || !(kappa2 > kappa1))
        throw ArgumentError("band_energy: need kappa0 <= kappa1 < kappa2");

    const SpectralField& probe = traj.fields[0];
    bool any = false;
    for (int i = 0; i < probe.mode_count() && !any; ++i) {
        const double kk = kappa0 * probe.wave(i).norm();
        any = kk >= kappa1 * (1.0 - 1e-12) && kk < kappa2 * (1.0 - 1e-12);
    }
    if (!any) throw ArgumentError("band_energy: empty band");

    auto band_l2sq = [&](const SpectralField& u) {
        double s = 0.0;
        for (int i = 0; i < u.mode_count(); ++i) {
            const double kk = kappa0 * u.wave(i).norm();
            if (kk < kappa1 * (1.0 - 1e-12) || kk >= kappa2 * (1.0 - 1e-12)) continue;
            for (int c = 0; c < u.n(); ++c) s += 2.0 * std::norm(u.at(i, c));
        }
        return std::pow(2.0 * M_PI / kappa0, u.n()) * s;
    };
    const double k3 = kappa0 * kappa0 * kappa0;
    return k3 * time_average(traj, band_l2sq, T_avg);
}

SpectrumReport dyadic_spectrum(const TrajectorySample& traj, double T_avg) {
    const auto& p = traj.fields[0].params();
    const double kappa0 = p.kappa0;
    const int K = traj.fields[0].K();

    SpectrumReport rep;
    for (double k = kappa0; 2.0 * k <= kappa0 * double(K) * (1.0 + 1e-12); k *= 2.0) {
        SpectrumReport::Band b;
        b.kappa = k;
        b.energy = band_energy(traj, k, 2.0 * k, T_avg);
        rep.bands.push_back(b);
    }
    return rep;
}

void fit_power_law(SpectrumReport& rep) {
    std::vector<double> xs, ys;
    for (const auto& b : rep.bands)
        if (b.energy > 0.0) {
            xs.push_back(std::log(b.kappa));
            ys.push_back(std::log(b.energy));
        }
    if (xs.size() < 2) throw EstimationError("fit_power_law: need >= 2 populated bands");
    const size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= double(n);
    my /= double(n);
    double sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    rep.fitted_exponent = sxy / sxx;
    double ss = 0.0;
    const double icept = my - rep.fitted_exponent * mx;
    for (size_t i = 0; i < n; ++i) {
        const double r = ys[i] - (icept + rep.fitted_exponent * xs[i]);
        ss += r * r;
    }
    rep.fit_residual = std::sqrt(ss / double(n));
    rep.bands_used = int(n);
}

double log_correction_factor(double G, double kbar_over_kappa0) {
    if (!(G > 1.0)) throw ArgumentError("log_correction_factor: need G > 1");
    if (!(kbar_over_kappa0 > 0.0)) throw ArgumentError("log_correction_factor: bad band ratio");
    const double lg = std::log(G);
    const double inner = std::pow(kbar_over_kappa0, 2.5) * std::sqrt(G) * std::pow(lg, 0.75);
    return kbar_over_kappa0 * std::pow(lg, 1.5) * (1.0 + std::log(inner));
}

ChebyshevReport chebyshev_fractions(const std::vector<SpectralField>& ensemble, double p,
                                    int regime_dim, double kappa_bar, double G,
                                    const Calibration& cal) {
    if (ensemble.size() < 10)
        throw ArgumentError("chebyshev_fractions: need an ensemble of >= 10 snapshots");
    if (!(p > 0.0 && p <= 1.0)) throw ArgumentError("chebyshev_fractions: p in (0,1]");

    const auto& pp = ensemble[0].params();
    const double nu = pp.nu, kappa0 = pp.kappa0;

    ChebyshevReport r;
    r.p = p;
    r.ensemble_size = int(ensemble.size());

    std::vector<double> l2sq, h1sq, wiener;
    for (const auto& u : ensemble) {
        const double a = l2_norm(u), b = grad_l2_norm(u);
        l2sq.push_back(a * a);
        h1sq.push_back(b * b);
        wiener.push_back(wiener_norm(u) / (nu * kappa0));
    }
    for (double v : l2sq) r.mean_l2_sq += v;
    for (double v : h1sq) r.mean_h1_sq += v;
    r.mean_l2_sq /= double(ensemble.size());
    r.mean_h1_sq /= double(ensemble.size());

    int beyond = 0;
    for (size_t i = 0; i < ensemble.size(); ++i)
        if (l2sq[i] >= (2.0 / p) * r.mean_l2_sq || h1sq[i] >= (2.0 / p) * r.mean_h1_sq) ++beyond;
    r.frac_empirical = double(beyond) / double(ensemble.size());
    r.chebyshev_ok = r.frac_empirical <= p;

    const double ratio = kappa0 / kappa_bar;
    r.threshold_l2 = cal.cheb_l2_prefactor * std::sqrt(2.0 / p) * nu / std::sqrt(kappa0) *
                     std::sqrt(ratio) * std::sqrt(G);
    r.threshold_h1 = cal.cheb_h1_prefactor * std::sqrt(2.0 / p) * nu * std::sqrt(kappa0) *
                     std::pow(ratio, 0.25) * std::pow(G, 0.75);
    int g_beyond = 0;
    for (size_t i = 0; i < ensemble.size(); ++i)
        if (std::sqrt(l2sq[i]) >= r.threshold_l2 || std::sqrt(h1sq[i]) >= r.threshold_h1)
            ++g_beyond;
    r.frac_g_form = double(g_beyond) / double(ensemble.size());

    if (regime_dim == 2) {
        r.log_factor = log_correction_factor(G, kappa_bar / kappa0);
        r.wiener_threshold =
            cal.cheb_l2_prefactor * std::sqrt(r.log_factor * G / p);
        int w_beyond = 0;
        for (double w : wiener)
            if (w >= r.wiener_threshold) ++w_beyond;
        r.frac_wiener = double(w_beyond) / double(ensemble.size());
    }
    return r;
}

}  // namespace gnse
