#pragma once

#include <string>
#include <vector>

#include "gnse/calibration.hpp"
#include "gnse/duhamel.hpp"
#include "gnse/field.hpp"
#include "gnse/forcing.hpp"

namespace gnse {

// One verified inequality instance; passed <=> lhs <= rhs (1 + 1e-10).
// Informational cases record a hypothesis evaluation and never fail a suite.
struct InequalityCase {
    std::string name;
    std::string note;
    double lhs = 0.0;
    double rhs = 0.0;
    double constant = 0.0;
    bool passed = false;
    bool informational = false;
};

InequalityCase make_case(const std::string& name, double lhs, double rhs, double constant,
                         const std::string& note = "");

// Singular kernel integral against max{B(1-c,1-d), Gamma(1-c)} (t ^ 1/b)^{1-c-d}.
InequalityCase check_beta_integral(double b, double c, double d, double t);

// Two-sided bracket between Mf and the Grashof number for a band-limited
// time-independent force:
//   C_low Mf <= (nu kappa0^2 tau)^{1/q} G <= (2pi)^n Mf,
//   C_low = (2pi)^{-n} (#modes)^{-1/2} e^{-2 lambda_f kbar} (kappa0/kbar)^sigma.
// Requires sqrt(nu tau) <= lambda_f so the schedule stays under lambda_f.
std::vector<InequalityCase> check_mf_grashof(const SpectralField& f, double sigma, double q,
                                             double tau, double lambda_f);

// Averaged log-interpolation bound (2D):
//   <(sum|u(k)|)^2> <= C <||A^{1/2}u||^2> [1 + ln(kappa0^{-2} <||Au||^2>/<||A^{1/2}u||^2>)].
// Ensemble averages stand in for the time-average measure.
InequalityCase check_brezis_gallouet(const std::vector<SpectralField>& ensemble,
                                     const Calibration& cal);

// Interpolation bound with negative Stokes powers (3D), -3/2 < sigma < -1/2:
//   ||u||_sigma <= slack * max{1/sqrt(-(2sigma+1)), 1/sqrt(2sigma+3)}
//                      ||u||_{L2}^{-(sigma+1/2)} ||A^{1/2}u||_{L2}^{sigma+3/2}.
InequalityCase check_agmon(const SpectralField& u, double sigma, const Calibration& cal);

// X and Y bounds of Phi against the calibrated constants, plus (for beta>0)
// the vanishing of (nu t)^{beta/2}||Phi(t)||_{sqrt(nu t),sigma+beta} as t->0,
// sampled one decade at a time.
std::vector<InequalityCase> check_linear_lemma(const SpectralField& u0, const ForceSchedule& f,
                                               double sigma, double q, double T,
                                               const Calibration& cal);

// Z-bound of the Duhamel bilinear integral against the calibrated constant
// (needs gamma = sigma + beta >= 0).
InequalityCase check_nonlinear_lemma(const TrajectorySample& u, const TrajectorySample& v,
                                     double sigma, double beta, const Calibration& cal);

// Small-data corollary: hypothesis M0 <= (T nu kappa0^2)^{1/q'} Mf is
// reported informationally; when it holds, the Mf-only Phi bounds are
// enforced.
std::vector<InequalityCase> check_corollary_small_data(const SpectralField& u0,
                                                       const ForceSchedule& f, double sigma,
                                                       double q, double T,
                                                       const Calibration& cal);

}  // namespace gnse
