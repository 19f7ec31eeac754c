#include "gnse/duhamel.hpp"

#include <algorithm>
#include <cmath>

#include "gnse/spectral_ops.hpp"

namespace gnse {

namespace {

// Exponential quadrature weights for int_{t0}^{t1} e^{-a(t1-s)} g(s) ds with
// g piecewise linear: integral = h * (w_left(z) g(t0) + w_right(z) g(t1)),
// z = a h.  w_left = (1-(1+z)e^{-z})/z^2, w_right = (z-1+e^{-z})/z^2.
double w_left(double z) {
    if (z < 0.5) {
        double sum = 0.0, zp = 1.0;  // sum (-z)^m (m+1)/(m+2)!
        for (int m = 0; m <= 12; ++m) {
            sum += (m % 2 == 0 ? 1.0 : -1.0) * zp * (m + 1.0) / std::tgamma(m + 3.0);
            zp *= z;
        }
        return sum;
    }
    return (1.0 - (1.0 + z) * std::exp(-z)) / (z * z);
}

double w_right(double z) {
    if (z < 0.5) {
        double sum = 0.0, zp = 1.0;
        for (int m = 0; m <= 12; ++m) {
            sum += (m % 2 == 0 ? 1.0 : -1.0) * zp / std::tgamma(m + 3.0);
            zp *= z;
        }
        return sum;
    }
    return (z - 1.0 + std::exp(-z)) / (z * z);
}

// phi1(-z) = (1 - e^{-z})/z for the ETD stage.
double phi1m(double z) {
    if (z < 0.5) {
        double sum = 0.0, zp = 1.0;
        for (int m = 0; m <= 12; ++m) {
            sum += (m % 2 == 0 ? 1.0 : -1.0) * zp / std::tgamma(m + 2.0);
            zp *= z;
        }
        return sum;
    }
    return (1.0 - std::exp(-z)) / z;
}

}  // namespace

void TrajectorySample::validate() const {
    if (times.size() != fields.size() || times.empty())
        throw ArgumentError("trajectory: times/fields mismatch");
    for (size_t j = 1; j < times.size(); ++j)
        if (!(times[j] > times[j - 1])) throw ArgumentError("trajectory: grid must increase");
    for (size_t j = 1; j < fields.size(); ++j)
        if (!fields[j].same_layout(fields[0]))
            throw ConfigError("trajectory: fields must share layout");
}

FunctionSpaceNorms trajectory_norms(const TrajectorySample& traj, double sigma, double beta) {
    traj.validate();
    const auto& p = traj.fields[0].params();
    const double nu = p.nu, kappa0 = p.kappa0;
    const double tau = 1.0 / (nu * kappa0 * kappa0);
    const double unit = std::pow(kappa0, -sigma) / (nu * kappa0);

    FunctionSpaceNorms out;
    out.sigma = sigma;
    out.beta = beta;
    out.T = traj.T();
    for (int j = 0; j < traj.size(); ++j) {
        const double t = traj.times[j];
        const double lam = std::sqrt(nu * t);
        out.X = std::max(out.X, unit * gevrey_norm(traj.fields[j], GevreyWeight(lam, sigma)));
        if (t > 0.0) {
            const double w = std::pow(nu * std::min(t, tau), 0.5 * beta);
            out.Y = std::max(out.Y, unit * w * gevrey_norm(traj.fields[j],
                                                           GevreyWeight(lam, sigma + beta)));
        }
    }
    out.Z = std::max(out.X, out.Y);
    return out;
}

std::vector<double> make_picard_grid(double T, int points, double first_fraction) {
    if (!(T > 0.0) || points < 2) throw ArgumentError("make_picard_grid: bad grid request");
    std::vector<double> g{0.0};
    const int m = points - 1;  // nodes after t=0
    const double r = std::pow(first_fraction, 1.0 / std::max(1, m - 1));
    for (int j = m - 1; j >= 0; --j) g.push_back(T * std::pow(r, j));
    g.back() = T;
    return g;
}

TrajectorySample evaluate_phi(const SpectralField& u0, const ForceSchedule& f,
                              const std::vector<double>& t_grid) {
    if (t_grid.empty() || t_grid[0] < 0.0) throw ArgumentError("evaluate_phi: bad grid");
    for (size_t j = 1; j < t_grid.size(); ++j)
        if (!(t_grid[j] > t_grid[j - 1])) throw ArgumentError("evaluate_phi: grid must increase");
    if (!f.is_zero() && t_grid.back() > f.horizon() * (1.0 + 1e-12))
        throw ArgumentError("evaluate_phi: grid beyond forcing horizon");

    const auto& p = u0.params();
    const double nu = p.nu, kappa0 = p.kappa0;

    TrajectorySample traj;
    traj.times = t_grid;
    traj.fields.reserve(t_grid.size());
    for (double t : t_grid) traj.fields.push_back(heat_propagate(u0, t));

    if (f.is_zero()) return traj;

    if (f.is_constant()) {
        const SpectralField pf = leray_project(f.constant_field());
        if (!pf.same_layout(u0)) throw ConfigError("evaluate_phi: forcing layout mismatch");
        for (size_t j = 0; j < t_grid.size(); ++j) {
            const double t = t_grid[j];
            SpectralField& fld = traj.fields[j];
            for (int i = 0; i < fld.mode_count(); ++i) {
                const double a = nu * kappa0 * kappa0 * double(fld.wave(i).norm2());
                const double wgt = -std::expm1(-a * t) / a;  // (1 - e^{-a t})/a
                for (int c = 0; c < fld.n(); ++c) fld.at(i, c) += wgt * pf.at(i, c);
            }
        }
        return traj;
    }

    // Sampled forcing: accumulate the Duhamel integral over grid intervals
    // with exact exponential weights; the kernel factorizes so the partial
    // integral advances by one multiply per step.
    SpectralField accum(p, u0.K());
    SpectralField pf_prev = leray_project(f.at(t_grid[0]));
    for (size_t j = 0; j + 1 < t_grid.size(); ++j) {
        const double h = t_grid[j + 1] - t_grid[j];
        SpectralField pf_next = leray_project(f.at(t_grid[j + 1]));
        for (int i = 0; i < accum.mode_count(); ++i) {
            const double a = nu * kappa0 * kappa0 * double(accum.wave(i).norm2());
            const double z = a * h;
            const double decay = std::exp(-z);
            const double wl = h * w_left(z), wr = h * w_right(z);
            for (int c = 0; c < accum.n(); ++c)
                accum.at(i, c) = decay * accum.at(i, c) + wl * pf_prev.at(i, c) + wr * pf_next.at(i, c);
        }
        pf_prev = pf_next;
        traj.fields[j + 1] += accum;
    }
    return traj;
}

TrajectorySample evaluate_w(const TrajectorySample& u, const TrajectorySample& v) {
    u.validate();
    v.validate();
    if (u.times != v.times) throw ArgumentError("evaluate_w: trajectories must share the grid");
    const auto& p = u.fields[0].params();
    const double nu = p.nu, kappa0 = p.kappa0;

    if (u.times[0] != 0.0) throw ArgumentError("evaluate_w: grid must start at 0");
    TrajectorySample w;
    w.times = u.times;
    w.fields.reserve(u.size());
    w.fields.emplace_back(p, u.fields[0].K());  // w(0) = 0

    SpectralField b_prev = bilinear_fft(u.fields[0], v.fields[0]);

    SpectralField accum(p, u.fields[0].K());
    for (int j = 0; j + 1 < u.size(); ++j) {
        const double h = u.times[j + 1] - u.times[j];
        SpectralField b_next = bilinear_fft(u.fields[j + 1], v.fields[j + 1]);
        for (int i = 0; i < accum.mode_count(); ++i) {
            const double a = nu * kappa0 * kappa0 * double(accum.wave(i).norm2());
            const double z = a * h;
            const double decay = std::exp(-z);
            const double wl = h * w_left(z), wr = h * w_right(z);
            for (int c = 0; c < accum.n(); ++c)
                accum.at(i, c) = decay * accum.at(i, c) + wl * b_prev.at(i, c) + wr * b_next.at(i, c);
        }
        b_prev = b_next;
        w.fields.push_back(accum);
    }
    return w;
}

SpectralField evaluate_w_at(const TrajectorySample& u, const TrajectorySample& v, double t) {
    const auto it = std::find_if(u.times.begin(), u.times.end(),
                                 [t](double s) { return std::abs(s - t) < 1e-14 * (1.0 + t); });
    if (it == u.times.end()) throw ArgumentError("evaluate_w_at: t not on the grid");
    const auto w = evaluate_w(u, v);
    return w.fields[size_t(it - u.times.begin())];
}

namespace {

FunctionSpaceNorms diff_norms(const TrajectorySample& a, const TrajectorySample& b, double sigma,
                              double beta) {
    TrajectorySample d;
    d.times = a.times;
    d.fields.reserve(a.size());
    for (int j = 0; j < a.size(); ++j) d.fields.push_back(a.fields[j] - b.fields[j]);
    return trajectory_norms(d, sigma, beta);
}

}  // namespace

PicardResult picard_iterate(const SpectralField& u0, const ForceSchedule& f, double sigma,
                            double beta, const std::vector<double>& t_grid,
                            const PicardOptions& opt) {
    if (t_grid.size() < 2 || t_grid[0] != 0.0)
        throw ArgumentError("picard_iterate: grid must start at 0");

    const TrajectorySample phi = evaluate_phi(u0, f, t_grid);
    PicardResult res;
    res.phi_z = trajectory_norms(phi, sigma, beta).Z;

    TrajectorySample cur = phi;
    double prev_diff = -1.0;
    int above_one = 0;
    for (int m = 1; m <= opt.max_iters; ++m) {
        const TrajectorySample w = evaluate_w(cur, cur);
        TrajectorySample next;
        next.times = t_grid;
        next.fields.reserve(cur.size());
        for (int j = 0; j < cur.size(); ++j) next.fields.push_back(phi.fields[j] - w.fields[j]);

        const double diff = diff_norms(next, cur, sigma, beta).Z;
        if (prev_diff > 0.0) {
            const double rho = diff / prev_diff;
            res.ratios.push_back(rho);
            above_one = rho > 1.0 ? above_one + 1 : 0;
            if (above_one >= 3) throw NonconvergenceError(res.ratios);
        }
        cur = std::move(next);
        res.iterations = m;
        if (diff <= opt.tol * res.phi_z) {
            res.status = PicardStatus::converged;
            prev_diff = diff;
            break;
        }
        prev_diff = diff;
        res.status = m == opt.max_iters ? PicardStatus::max_iters : res.status;
    }

    const TrajectorySample w_final = evaluate_w(cur, cur);
    TrajectorySample fixed;
    fixed.times = t_grid;
    for (int j = 0; j < cur.size(); ++j) fixed.fields.push_back(phi.fields[j] - w_final.fields[j]);
    res.residual_z = diff_norms(cur, fixed, sigma, beta).Z;
    res.dist_to_phi_z = diff_norms(cur, phi, sigma, beta).Z;
    res.trajectory = std::move(cur);
    return res;
}

EtdStepper::EtdStepper(const PhysicalParams& p, int K, ForceSchedule f)
    : params_(p), K_(K), f_(std::move(f)) {
    has_force_ = !f_.is_zero();
    if (has_force_ && f_.is_constant()) {
        f_const_ = leray_project(f_.constant_field());
        if (f_const_->K() != K || !(f_const_->params() == p))
            throw ConfigError("EtdStepper: forcing layout mismatch");
    }
}

SpectralField EtdStepper::force_at(double t) const {
    if (f_const_) return *f_const_;
    return leray_project(f_.at(t));
}

EtdState EtdStepper::step(const EtdState& s, double dt) const {
    if (!(dt > 0.0)) throw ArgumentError("etd_step: dt must be > 0");
    const double nu = params_.nu, kappa0 = params_.kappa0;

    auto nonlin = [&](const SpectralField& u, double t) {
        SpectralField n = bilinear_fft(u, u);
        n *= -1.0;
        if (has_force_) n += force_at(t);
        return n;
    };

    const SpectralField n0 = nonlin(s.u, s.t);
    SpectralField stage(params_, K_);
    for (int i = 0; i < stage.mode_count(); ++i) {
        const double z = nu * kappa0 * kappa0 * double(stage.wave(i).norm2()) * dt;
        const double decay = std::exp(-z);
        const double p1 = dt * phi1m(z);
        for (int c = 0; c < stage.n(); ++c)
            stage.at(i, c) = decay * s.u.at(i, c) + p1 * n0.at(i, c);
    }

    const SpectralField n1 = nonlin(stage, s.t + dt);
    EtdState out;
    out.t = s.t + dt;
    out.u = stage;
    for (int i = 0; i < out.u.mode_count(); ++i) {
        const double z = nu * kappa0 * kappa0 * double(out.u.wave(i).norm2()) * dt;
        const double p2 = dt * w_right(z);  // (z-1+e^{-z})/z^2 = phi2(-z)
        for (int c = 0; c < out.u.n(); ++c)
            out.u.at(i, c) += p2 * (n1.at(i, c) - n0.at(i, c));
    }
    out.u = leray_project(out.u);
    if (!std::isfinite(out.u.max_abs()))
        throw NumericalAbort("etd_step: non-finite state at t = " + std::to_string(out.t));
    return out;
}

double weak_form_residual(const TrajectorySample& traj, const ForceSchedule& f) {
    traj.validate();
    if (traj.size() < 3) throw ArgumentError("weak_form_residual: need >= 3 samples");
    const auto& p = traj.fields[0].params();
    const double nu = p.nu, kappa0 = p.kappa0;

    double worst = 0.0;
    for (int j = 1; j + 1 < traj.size(); ++j) {
        const double hm = traj.times[j] - traj.times[j - 1];
        const double hp = traj.times[j + 1] - traj.times[j];
        SpectralField resid(p, traj.fields[0].K());
        const SpectralField b = bilinear_fft(traj.fields[j], traj.fields[j]);
        SpectralField pf(p, traj.fields[0].K());
        if (!f.is_zero()) pf = leray_project(f.at(traj.times[j]));
        for (int i = 0; i < resid.mode_count(); ++i) {
            const double a = nu * kappa0 * kappa0 * double(resid.wave(i).norm2());
            for (int c = 0; c < resid.n(); ++c) {
                // nonuniform centered difference for du/dt
                const cplx dudt =
                    (hm * hm * traj.fields[j + 1].at(i, c) +
                     (hp * hp - hm * hm) * traj.fields[j].at(i, c) -
                     hp * hp * traj.fields[j - 1].at(i, c)) /
                    (hm * hp * (hm + hp));
                resid.at(i, c) = dudt + a * traj.fields[j].at(i, c) + b.at(i, c) - pf.at(i, c);
            }
        }
        worst = std::max(worst, sobolev_l1_norm(resid, 0.0));
    }
    return worst;
}

}  // namespace gnse
