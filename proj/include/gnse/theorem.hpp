#pragma once

#include <boost/rational.hpp>

#include <string>

#include "gnse/calibration.hpp"
#include "gnse/duhamel.hpp"
#include "gnse/field.hpp"
#include "gnse/forcing.hpp"

namespace gnse {

using Rational = boost::rational<long long>;

// Exact exponent arithmetic for the radius lower bounds.  With
// sigma_- = max(-sigma, 0) and 1/q' = 1 - 1/q:
//   beta = 2 sigma_-/q'  (1 < q <= 2),   sigma_-  (2 <= q <= inf)
//   radius_exp_M   = 1/(1-beta)                (bound ~ M^{-radius_exp_M})
//   radius_exp_Mf  = 1/(1-beta+2/q')           (bound ~ Mf^{-radius_exp_Mf})
//   smallness_exp  = (1-beta)/(1-beta+2/q')    (M0 <~ Mf^{smallness_exp})
struct ExactExponents {
    Rational beta;
    Rational q_prime;
    Rational radius_exp_M;
    Rational radius_exp_Mf;
    Rational smallness_exp;
};

ExactExponents exact_exponents(const Rational& sigma, const Rational& q, bool q_is_inf = false);

enum class TheoremId {
    m_local,      // existence window from M = M0 + Mf; radius ~ M^{-1/(1-beta)}
    mf_small,     // M0 small against Mf; radius ~ Mf^{-1/(1-beta+2/q')}
    grashof_2d,   // mf_small at (sigma, q) = (0, 2), Grashof form
    grashof_3d,   // mf_small at (sigma, q) = (-3/4, 59/49), Grashof form
};

std::string theorem_name(TheoremId id);

struct TheoremQuantities {
    TheoremId id = TheoremId::m_local;
    double sigma = 0.0;
    double q = 2.0;
    double q_prime = 2.0;
    double beta = 0.0;
    double M0 = 0.0, Mf = 0.0, M = 0.0, G = 0.0;
    double C_star = 0.0;        // contraction budget constant
    double C_lower_star = 0.0;  // (C*)^{(2/q')/(1-beta+2/q')}
    double T_star = 0.0;
    double radius_bound = 0.0;  // sqrt(nu T*)
    double radius_prefactor = 0.0;  // c in bound = c kappa0^{-1} (M or Mf)^{-exp}
    bool hypothesis_ok = false;
    bool global_ok = false;     // m_local only: M <= C* allows T* = Tf
    double smallness_lhs = 0.0, smallness_rhs = 0.0;
    double Tf_used = 0.0;
    double g_exponent = 0.0;    // Grashof branches: radius ~ G^{-g_exponent}
    std::string calibration_version;
};

// Displayed constants of the Phi and w bounds, times their calibrated
// multipliers.
double linear_sup_constant(double q_prime, const Calibration& cal);
double linear_weighted_constant(double beta, double q_prime, const Calibration& cal);
double nonlinear_constant(double beta, const Calibration& cal);

// C* = (3 c_absorb C_nonlinear C_linear_weighted)^{-1}.
double contraction_constant(double beta, double q_prime, const Calibration& cal);

// Everything the radius theorems compute for given data.  sigma and q enter
// as rationals so the exponent arithmetic stays exact; q_is_inf selects
// q = infinity.  Tf is the forcing horizon for the m_local/mf_small
// branches; the Grashof branches pin tau = (nu kappa0^2)^{-1} themselves.
TheoremQuantities theorem_quantities(const SpectralField& u0, const ForceSchedule& f,
                                     const Rational& sigma, const Rational& q, bool q_is_inf,
                                     TheoremId id, double Tf, const Calibration& cal);

double rational_to_double(const Rational& r);

}  // namespace gnse
