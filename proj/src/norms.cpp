#include "gnse/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gnse {

double sobolev_l1_norm(const SpectralField& u, double sigma) {
    return gevrey_norm(u, GevreyWeight(0.0, sigma));
}

double gevrey_norm(const SpectralField& u, const GevreyWeight& w) {
    const double kappa0 = u.params().kappa0;
    // Lattice order is ascending in |k|^2; walk it backwards so saturation
    // is detected at the highest shell that causes it.
    double sum = 0.0;
    for (int i = u.mode_count() - 1; i >= 0; --i) {
        const double m = u.mode_abs(i);
        if (m == 0.0) continue;
        const double r = u.wave(i).norm();
        const double expo = w.lambda * kappa0 * r;
        const double term = std::exp(expo) * std::pow(r, w.sigma) * m;
        if (!std::isfinite(term) || !std::isfinite(sum + term))
            throw SaturationError("gevrey_norm: weight saturates double range", int(r));
        sum += 2.0 * term;  // canonical mode plus its Hermitian partner
    }
    return std::pow(kappa0, w.sigma) * sum;
}

double wiener_norm(const SpectralField& u) {
    double sum = 0.0;
    for (int i = 0; i < u.mode_count(); ++i) sum += 2.0 * u.mode_abs(i);
    return sum;
}

namespace {

double l2_weighted(const SpectralField& u, int weight_power) {
    const double kappa0 = u.params().kappa0;
    double sum = 0.0;
    for (int i = 0; i < u.mode_count(); ++i) {
        double w = 1.0;
        const double kk = kappa0 * kappa0 * double(u.wave(i).norm2());
        if (weight_power == 1) w = kk;
        if (weight_power == 2) w = kk * kk;
        double m2 = 0.0;
        for (int c = 0; c < u.n(); ++c) m2 += std::norm(u.at(i, c));
        sum += 2.0 * w * m2;
    }
    const double parseval = std::pow(2.0 * M_PI / kappa0, 0.5 * u.n());
    return parseval * std::sqrt(sum);
}

}  // namespace

double l2_norm(const SpectralField& u) { return l2_weighted(u, 0); }
double grad_l2_norm(const SpectralField& u) { return l2_weighted(u, 1); }
double laplacian_l2_norm(const SpectralField& u) { return l2_weighted(u, 2); }

double scalar_gevrey_norm(const ScalarBox& box, double kappa0, const GevreyWeight& w) {
    const int K = box.K;
    const int z_lo = (box.n == 3) ? -K : 0, z_hi = (box.n == 3) ? K : 0;
    double sum = 0.0;
    for (int k1 = -K; k1 <= K; ++k1)
        for (int k2 = -K; k2 <= K; ++k2)
            for (int k3 = z_lo; k3 <= z_hi; ++k3) {
                const WaveVector k{k1, k2, k3};
                if (k.is_zero()) continue;
                const double a = box.at(k);
                if (a == 0.0) continue;
                const double r = k.norm();
                const double term = std::exp(w.lambda * kappa0 * r) * std::pow(r, w.sigma) * a;
                if (!std::isfinite(term))
                    throw SaturationError("scalar_gevrey_norm saturates", int(r));
                sum += term;
            }
    return std::pow(kappa0, w.sigma) * sum;
}

DataNumbers compute_data_numbers(const SpectralField& u0, const ForceSchedule& f, double sigma,
                                 double q, double Tf, const LambdaSchedule& lambda_schedule) {
    if (!(q > 1.0)) throw ArgumentError("compute_data_numbers: q must be > 1");
    if (!(Tf > 0.0)) throw ArgumentError("compute_data_numbers: Tf must be > 0");
    const auto& p = u0.params();
    const double kappa0 = p.kappa0, nu = p.nu;
    const bool q_inf = std::isinf(q);

    DataNumbers d;
    d.q = q;
    d.q_prime = q_inf ? 1.0 : q / (q - 1.0);
    d.Tf = Tf;
    d.M0 = std::pow(kappa0, -sigma) / (nu * kappa0) * sobolev_l1_norm(u0, sigma);

    if (f.is_zero()) {
        d.Mf = 0.0;
        d.G = 0.0;
        d.M = d.M0;
        return d;
    }

    auto gev_at = [&](double s) {
        return gevrey_norm(f.at(s), GevreyWeight(lambda_schedule(s, nu), sigma));
    };
    const double unit = std::pow(kappa0, -sigma) / (nu * nu * kappa0 * kappa0 * kappa0);

    if (q_inf) {
        double sup = 0.0;
        if (f.is_constant() && lambda_schedule.is_constant()) {
            sup = gev_at(0.0);
        } else if (f.is_constant()) {
            sup = gev_at(Tf);  // Gevrey norm nondecreasing in lambda(t)
        } else {
            for (double s : f.sample_times())
                if (s <= Tf) sup = std::max(sup, gev_at(s));
            sup = std::max(sup, gev_at(Tf));
        }
        d.Mf = unit * sup;
    } else {
        double integral = 0.0;
        if (f.is_constant() && lambda_schedule.is_constant()) {
            integral = Tf * std::pow(gev_at(0.0), q);
        } else {
            // Graded trapezoid; nodes quadratic toward 0 to absorb the
            // sqrt(nu t) slope of the schedule.
            std::vector<double> nodes;
            const int N = 256;
            for (int j = 0; j <= N; ++j) nodes.push_back(Tf * std::pow(double(j) / N, 2.0));
            if (!f.is_constant())
                for (double s : f.sample_times())
                    if (s > 0.0 && s < Tf) nodes.push_back(s);
            std::sort(nodes.begin(), nodes.end());
            nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
            double prev = std::pow(gev_at(nodes[0]), q);
            for (size_t j = 1; j < nodes.size(); ++j) {
                const double cur = std::pow(gev_at(nodes[j]), q);
                integral += 0.5 * (prev + cur) * (nodes[j] - nodes[j - 1]);
                prev = cur;
            }
        }
        d.Mf = unit * std::pow(nu * kappa0 * kappa0 * integral, 1.0 / q);
    }

    double sup_l2 = 0.0;
    if (f.is_constant()) {
        sup_l2 = l2_norm(f.constant_field());
    } else {
        for (double s : f.sample_times())
            if (s <= Tf) sup_l2 = std::max(sup_l2, l2_norm(f.at(s)));
        sup_l2 = std::max(sup_l2, l2_norm(f.at(Tf)));
    }
    d.G = std::pow(kappa0, 0.5 * p.n) / (nu * nu * kappa0 * kappa0 * kappa0) * sup_l2;

    d.M = d.M0 + d.Mf;
    return d;
}

}  // namespace gnse
