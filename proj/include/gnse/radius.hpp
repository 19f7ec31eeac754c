#pragma once

#include <string>
#include <vector>

#include "gnse/field.hpp"
#include "gnse/theorem.hpp"

namespace gnse {

// Per-shell envelope of the modal amplitudes: shell m holds |k| in [m, m+1).
struct ShellStat {
    int shell = 0;
    double sup = 0.0;      // max euclidean |u(k)| over the shell
    double arg_norm = 0.0; // |k| of the maximizing mode
};

std::vector<ShellStat> shell_maxima(const SpectralField& u);

enum class RadiusMethod { loglinear_fit, gevrey_bisect };

struct RadiusEstimate {
    double lambda_hat = 0.0;
    int band_lo = 0, band_hi = 0;  // shell indices used
    double residual = 0.0;         // fit RMS (fit method only)
    std::vector<ShellStat> shells;
    RadiusMethod method = RadiusMethod::loglinear_fit;
    bool capped = false;  // bisect hit the overflow cap (band-limited data)
};

// Least-squares fit of log(shell sup) + sigma log|k| against -kappa0 |k|
// over shells [band_lo, band_hi].  Shells below the noise floor
// (1e-14 * max|u|) are excluded; fewer than 4 usable shells is an error,
// not a silent zero.
RadiusEstimate estimate_radius_fit(const SpectralField& u, int band_lo, int band_hi, double sigma);

// Largest lambda with ||u||_{lambda,sigma} <= budget * ||u||_{0,sigma},
// found by bisection (tolerance 1e-3 / kappa0).  Truncated data is entire,
// so the search is capped at 20/kappa0; hitting the cap sets `capped`.
RadiusEstimate estimate_radius_bisect(const SpectralField& u, double sigma, double budget);

struct BoundComparison {
    double lambda_hat = 0.0;
    double radius_bound = 0.0;
    double ratio = 0.0;
    enum class Verdict { pass, fail, inconclusive } verdict = Verdict::inconclusive;
};

// The theorems give lower bounds: PASS means lambda_hat >= bound while the
// smallness hypothesis holds; without the hypothesis the comparison proves
// nothing either way.
BoundComparison compare_to_bound(const RadiusEstimate& est, const TheoremQuantities& tq);

std::string verdict_name(BoundComparison::Verdict v);

}  // namespace gnse
