#include "gnse/theorem.hpp"

#include <cmath>

#include "gnse/norms.hpp"
#include "gnse/semigroup.hpp"
#include "gnse/special.hpp"

namespace gnse {

double rational_to_double(const Rational& r) {
    return double(r.numerator()) / double(r.denominator());
}

ExactExponents exact_exponents(const Rational& sigma, const Rational& q, bool q_is_inf) {
    if (sigma <= Rational(-1)) throw ArgumentError("exact_exponents: sigma must be > -1");
    if (!q_is_inf && q <= Rational(1)) throw ArgumentError("exact_exponents: q must be > 1");

    ExactExponents e;
    e.q_prime = q_is_inf ? Rational(1) : q / (q - Rational(1));
    const Rational sigma_minus = sigma < Rational(0) ? -sigma : Rational(0);
    if (!q_is_inf && q <= Rational(2))
        e.beta = Rational(2) * sigma_minus / e.q_prime;
    else
        e.beta = sigma_minus;
    const Rational one_minus = Rational(1) - e.beta;
    const Rational two_over_qp = Rational(2) / e.q_prime;
    if (!(e.beta >= Rational(0)) || !(e.beta < std::min(two_over_qp, Rational(1))))
        throw ArgumentError("exact_exponents: beta out of range (need 0 <= beta < min(2/q',1))");
    e.radius_exp_M = Rational(1) / one_minus;
    e.radius_exp_Mf = Rational(1) / (one_minus + two_over_qp);
    e.smallness_exp = one_minus / (one_minus + two_over_qp);
    return e;
}

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::m_local: return "m_local";
        case TheoremId::mf_small: return "mf_small";
        case TheoremId::grashof_2d: return "grashof_2d";
        case TheoremId::grashof_3d: return "grashof_3d";
    }
    return "?";
}

double linear_sup_constant(double q_prime, const Calibration& cal) {
    return cal.linear_sup_mult * std::pow(1.0 / q_prime, 1.0 / q_prime);
}

double linear_weighted_constant(double beta, double q_prime, const Calibration& cal) {
    const double c_smooth = heat_smoothing_constant(beta);
    const double c_kernel = std::pow(beta_kernel_constant(0.5 * beta * q_prime, 0.0), 1.0 / q_prime);
    return cal.linear_weighted_mult * c_smooth * c_kernel * std::pow(q_prime, 0.5 * beta);
}

double nonlinear_constant(double beta, const Calibration& cal) {
    if (!(beta >= 0.0 && beta < 1.0)) throw ArgumentError("nonlinear_constant: need 0 <= beta < 1");
    return cal.nonlinear_mult *
           std::max(beta_kernel_constant(0.5 * (1.0 - beta), beta), beta_kernel_constant(0.5, beta));
}

double contraction_constant(double beta, double q_prime, const Calibration& cal) {
    return 1.0 / (3.0 * cal.c_star_absorb * nonlinear_constant(beta, cal) *
                  linear_weighted_constant(beta, q_prime, cal));
}

TheoremQuantities theorem_quantities(const SpectralField& u0, const ForceSchedule& f,
                                     const Rational& sigma_in, const Rational& q_in, bool q_is_inf,
                                     TheoremId id, double Tf, const Calibration& cal) {
    Rational sigma = sigma_in, q = q_in;
    bool qinf = q_is_inf;
    if (id == TheoremId::grashof_2d) {
        sigma = Rational(0);
        q = Rational(2);
        qinf = false;
        if (u0.n() != 2) throw ArgumentError("grashof_2d: 2D data required");
    } else if (id == TheoremId::grashof_3d) {
        sigma = Rational(-3, 4);
        q = Rational(59, 49);
        qinf = false;
        if (u0.n() != 3) throw ArgumentError("grashof_3d: 3D data required");
    }

    const ExactExponents ex = exact_exponents(sigma, qinf ? Rational(2) : q, qinf);
    const auto& p = u0.params();
    const double nu = p.nu, kappa0 = p.kappa0;
    const double tau = 1.0 / (nu * kappa0 * kappa0);

    const bool grashof = id == TheoremId::grashof_2d || id == TheoremId::grashof_3d;
    if (grashof) {
        if (f.is_zero() || !f.is_constant())
            throw ArgumentError("grashof branch: time-independent forcing required");
        Tf = tau;  // tau = (nu kappa0^2)^{-1}, lambda_f = kappa0^{-1}
    }
    if (!(Tf > 0.0)) throw ArgumentError("theorem_quantities: Tf must be > 0");

    TheoremQuantities tq;
    tq.id = id;
    tq.sigma = rational_to_double(sigma);
    tq.q = qinf ? std::numeric_limits<double>::infinity() : rational_to_double(q);
    tq.q_prime = rational_to_double(ex.q_prime);
    tq.beta = rational_to_double(ex.beta);
    tq.Tf_used = Tf;
    tq.calibration_version = cal.version;

    const DataNumbers d =
        compute_data_numbers(u0, f, tq.sigma, tq.q, Tf, LambdaSchedule::sqrt_nu_t());
    tq.M0 = d.M0;
    tq.Mf = d.Mf;
    tq.M = d.M;
    tq.G = d.G;

    tq.C_star = contraction_constant(tq.beta, tq.q_prime, cal);
    const double exp_cl = (2.0 / tq.q_prime) / (1.0 - tq.beta + 2.0 / tq.q_prime);
    tq.C_lower_star = std::pow(tq.C_star, exp_cl);

    if (id == TheoremId::m_local) {
        tq.hypothesis_ok = std::isfinite(tq.M) && tq.M > 0.0;
        tq.global_ok = tq.M <= tq.C_star;
        const double expo = 2.0 / (1.0 - tq.beta);
        tq.T_star = std::min(std::pow(tq.C_star, expo) * tau * std::pow(tq.M, -expo), Tf);
        tq.radius_prefactor = std::pow(tq.C_star, 1.0 / (1.0 - tq.beta));
        tq.smallness_lhs = tq.M;
        tq.smallness_rhs = tq.C_star;
    } else {
        const double denom = 1.0 - tq.beta + 2.0 / tq.q_prime;
        tq.smallness_lhs = tq.M0;
        tq.smallness_rhs =
            tq.C_lower_star * std::pow(tq.Mf, rational_to_double(ex.smallness_exp));
        tq.hypothesis_ok = tq.Mf > 0.0 && tq.M0 <= tq.smallness_rhs;
        tq.T_star = std::pow(tq.C_lower_star, tq.q_prime) * tau * std::pow(tq.Mf, -2.0 / denom);
        tq.radius_prefactor = std::pow(tq.C_lower_star, 0.5 * tq.q_prime);
        if (grashof)
            tq.g_exponent = rational_to_double(ex.radius_exp_Mf);  // 1/2 (2D), 59/64 (3D)
    }
    tq.radius_bound = std::sqrt(nu * tq.T_star);
    return tq;
}

}  // namespace gnse
