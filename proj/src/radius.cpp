#include "gnse/radius.hpp"

#include <algorithm>
#include <cmath>

#include "gnse/norms.hpp"

namespace gnse {

std::vector<ShellStat> shell_maxima(const SpectralField& u) {
    const int max_shell = int(std::sqrt(double(u.n())) * u.K()) + 1;
    std::vector<ShellStat> shells(size_t(max_shell) + 1);
    for (int m = 0; m <= max_shell; ++m) shells[m].shell = m;
    for (int i = 0; i < u.mode_count(); ++i) {
        const double r = u.wave(i).norm();
        const double a = u.mode_abs(i);
        auto& s = shells[size_t(r)];
        if (a > s.sup) {
            s.sup = a;
            s.arg_norm = r;
        }
    }
    return shells;
}

RadiusEstimate estimate_radius_fit(const SpectralField& u, int band_lo, int band_hi,
                                   double sigma) {
    if (band_lo < 1 || band_hi < band_lo)
        throw ArgumentError("estimate_radius_fit: bad shell band");
    const auto shells = shell_maxima(u);
    const double floor = 1e-14 * u.max_abs();
    if (floor == 0.0) throw EstimationError("estimate_radius_fit: zero field");
    const double kappa0 = u.params().kappa0;

    std::vector<double> xs, ys;
    RadiusEstimate est;
    est.method = RadiusMethod::loglinear_fit;
    est.band_lo = band_lo;
    est.band_hi = band_hi;
    for (int m = band_lo; m <= band_hi && m < int(shells.size()); ++m) {
        const auto& s = shells[m];
        if (s.sup <= floor) continue;
        xs.push_back(kappa0 * s.arg_norm);
        ys.push_back(std::log(s.sup) + sigma * std::log(s.arg_norm));
        est.shells.push_back(s);
    }
    if (xs.size() < 4)
        throw EstimationError("estimate_radius_fit: need >= 4 populated shells above the noise floor");

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
    if (sxx == 0.0) throw EstimationError("estimate_radius_fit: degenerate band");
    const double slope = sxy / sxx;
    est.lambda_hat = std::max(0.0, -slope);

    double ss = 0.0;
    const double icept = my - slope * mx;
    for (size_t i = 0; i < n; ++i) {
        const double r = ys[i] - (icept + slope * xs[i]);
        ss += r * r;
    }
    est.residual = std::sqrt(ss / double(n));
    return est;
}

RadiusEstimate estimate_radius_bisect(const SpectralField& u, double sigma, double budget) {
    if (!(budget > 1.0)) throw ArgumentError("estimate_radius_bisect: budget must be > 1");
    const double base = sobolev_l1_norm(u, sigma);
    if (base == 0.0) throw EstimationError("estimate_radius_bisect: zero field");
    const double kappa0 = u.params().kappa0;
    const double cap = 20.0 / kappa0;
    const double target = budget * base;

    auto within = [&](double lam) {
        try {
            return gevrey_norm(u, GevreyWeight(lam, sigma)) <= target;
        } catch (const SaturationError&) {
            return false;
        }
    };

    RadiusEstimate est;
    est.method = RadiusMethod::gevrey_bisect;
    est.shells = shell_maxima(u);
    if (within(cap)) {
        est.lambda_hat = cap;
        est.capped = true;
        return est;
    }
    double lo = 0.0, hi = cap;
    const double tol = 1e-3 / kappa0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (within(mid) ? lo : hi) = mid;
    }
    est.lambda_hat = lo;
    return est;
}

BoundComparison compare_to_bound(const RadiusEstimate& est, const TheoremQuantities& tq) {
    BoundComparison c;
    c.lambda_hat = est.lambda_hat;
    c.radius_bound = tq.radius_bound;
    c.ratio = tq.radius_bound > 0.0 ? est.lambda_hat / tq.radius_bound
                                    : std::numeric_limits<double>::infinity();
    if (!tq.hypothesis_ok)
        c.verdict = BoundComparison::Verdict::inconclusive;
    else
        c.verdict = c.ratio >= 1.0 ? BoundComparison::Verdict::pass
                                   : BoundComparison::Verdict::fail;
    return c;
}

std::string verdict_name(BoundComparison::Verdict v) {
    switch (v) {
        case BoundComparison::Verdict::pass: return "PASS";
        case BoundComparison::Verdict::fail: return "FAIL";
        case BoundComparison::Verdict::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

}  // namespace gnse
