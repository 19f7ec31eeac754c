#pragma once

#include <functional>
#include <vector>

#include "gnse/calibration.hpp"
#include "gnse/duhamel.hpp"
#include "gnse/field.hpp"

namespace gnse {

double kinetic_energy(const SpectralField& u);  // ||u||_{L2}^2 / 2
double enstrophy(const SpectralField& u);       // ||grad u||_{L2}^2 / 2
double l2_inner(const SpectralField& a, const SpectralField& b);

// Finite-horizon mean (1/T) int_0^T f(u(t)) dt by trapezoid on the sample
// grid; the trajectory must cover [0, T_avg].
double time_average(const TrajectorySample& traj,
                    const std::function<double(const SpectralField&)>& fn, double T_avg);

// Mean dissipation rates and derived scales over [0, T_avg]:
//   eps  = nu kappa0^3 <||grad u||^2>      lambda_eps = (nu^3/eps)^{1/4}
//   eta  = nu kappa0^2 <||A u||^2>         lambda_eta = (nu^3/eta)^{1/6}
//   kappa_eta = (eta/nu^2)^{1/6}           kappa_sigma^2 = <||Au||^2>/<||A^{1/2}u||^2>
struct DissipationReport {
    double eps = 0.0;
    double eps_sup = 0.0;
    double eta = 0.0;
    double lambda_eps = 0.0;
    double lambda_eta = 0.0;
    double kappa_eta = 0.0;
    double kappa_sigma = 0.0;
    double T_avg = 0.0;
};

DissipationReport compute_dissipation(const TrajectorySample& traj, double T_avg);

// eps recovered from the energy budget <(f,u)> - dE/dt instead of the
// gradient norm; agreement within a few percent on statistically steady runs.
double energy_balance_eps(const TrajectorySample& traj, const ForceSchedule& f, double T_avg);

// Time-averaged band energy kappa0^3 <|| (P_{k2} - P_{k1}) u ||^2> over
// kappa1 <= kappa0|k| < kappa2 (closed-left so dyadic bands partition the
// lattice exactly).
double band_energy(const TrajectorySample& traj, double kappa1, double kappa2, double T_avg);

struct SpectrumReport {
    struct Band {
        double kappa = 0.0;   // left edge
        double energy = 0.0;  // e_{kappa,2kappa}
    };
    std::vector<Band> bands;
    double fitted_exponent = 0.0;
    double fit_residual = 0.0;
    int bands_used = 0;
};

// Dyadic bands kappa0 2^j up to the resolved ball.
SpectrumReport dyadic_spectrum(const TrajectorySample& traj, double T_avg);

// Log-log least squares over the positive-energy bands; needs >= 2 of them.
void fit_power_law(SpectrumReport& rep);

// Logarithmic correction factor
//   L = (kbar/kappa0)(ln G)^{3/2} [1 + ln((kbar/kappa0)^{5/2} G^{1/2} (ln G)^{3/4})],
// defined for G > 1.
double log_correction_factor(double G, double kbar_over_kappa0);

// Chebyshev tail fractions over an ensemble of snapshots.  The empirical
// thresholds (2/p) x ensemble mean obey the Markov bound exactly; the
// G-form thresholds use the calibrated prefactors.
struct ChebyshevReport {
    double p = 0.0;
    int ensemble_size = 0;
    double mean_l2_sq = 0.0;  // <||u||^2_{L2}>
    double mean_h1_sq = 0.0;  // <||A^{1/2}u||^2_{L2}>
    double frac_empirical = 0.0;  // fraction beyond either empirical threshold
    bool chebyshev_ok = false;    // frac_empirical <= p
    double threshold_l2 = 0.0, threshold_h1 = 0.0;  // G-form
    double frac_g_form = 0.0;
    double log_factor = 0.0;        // 2D only
    double wiener_threshold = 0.0;  // 2D only
    double frac_wiener = 0.0;       // 2D only
};

ChebyshevReport chebyshev_fractions(const std::vector<SpectralField>& ensemble, double p,
                                    int regime_dim, double kappa_bar, double G,
                                    const Calibration& cal);

}  // namespace gnse
