#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gnse/calibration.hpp"
#include "gnse/field.hpp"
#include "gnse/forcing.hpp"
#include "gnse/spectral_ops.hpp"
#include "gnse/theorem.hpp"

namespace gnse {

// Flat key=value run configuration.  Unknown keys are errors; values may be
// integers, floats, simple rationals ("-3/4", "59/49"), "inf" (for q), or
// "2pi"-style multiples of pi (for L).
struct RunConfig {
    // domain
    int n = 2;
    double L = 2.0 * M_PI;
    double nu = 1.0;
    int K = 16;

    // stepping
    double dt = 1e-3;
    double T = 1.0;
    double stability_cap = 2.0;  // bound on dt nu kappa0^2 K^2

    // initial data
    enum class U0Kind { taylor_green, random, file } u0_kind = U0Kind::taylor_green;
    double u0_band_lo = 1.0, u0_band_hi = 4.0;
    uint64_t u0_seed = 1;
    double u0_amplitude = 1.0;
    AmplitudeProfile u0_profile = AmplitudeProfile::flat;
    double u0_lambda0 = 0.0;
    std::string u0_file;

    // forcing (time-independent in scope)
    enum class ForcingKind { none, random, file } forcing_kind = ForcingKind::none;
    double forcing_kappa_bar = 0.0;  // physical kbar; modes |k| <= kbar/kappa0
    double forcing_band_lo = 1.0;
    double forcing_amplitude = 0.0;
    uint64_t forcing_seed = 2;
    std::string forcing_file;

    // analysis
    Rational sigma{0};
    Rational q{2};
    bool q_inf = false;
    TheoremId theorem = TheoremId::m_local;
    double picard_tol = 1e-10;
    int picard_max_iters = 40;
    int picard_grid_points = 40;
    int snapshot_stride = 0;  // 0 = final snapshot only
    double averaging_horizon = 0.0;  // 0 = full run
    std::string constants_file;
    int fit_band_lo = 0, fit_band_hi = 0;  // shells; 0 = auto K/4..3K/4
    double radius_budget = M_E;

    std::string source_path;

    static RunConfig load(const std::string& path);
    void validate() const;

    PhysicalParams physical() const { return PhysicalParams::make(n, L, nu); }
    SpectralField build_u0() const;
    ForceSchedule build_forcing() const;
    Calibration load_calibration() const;

    // --seed override: replaces both generator seeds deterministically.
    void override_seed(uint64_t s) {
        u0_seed = s;
        forcing_seed = s + 1000003;
    }
};

}  // namespace gnse
