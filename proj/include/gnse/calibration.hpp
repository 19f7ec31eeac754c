#pragma once

#include <string>

namespace gnse {

// Frozen multipliers standing in for the absolute constants suppressed in
// the estimates this library verifies.  Calibrated once over pinned-seed
// sweeps (1.1x the worst observed ratio), then versioned; see
// tools/calibrate_main.cpp for the generator.
struct Calibration {
    std::string version = "uncalibrated";

    // Multipliers on the displayed constants of the linear (Phi) bounds and
    // the nonlinear (w) bound; c_star_absorb is the extra factor inside the
    // contraction budget constant.
    double linear_sup_mult = 1.0;        // X-bound of Phi
    double linear_weighted_mult = 1.0;   // Y-bound of Phi
    double nonlinear_mult = 1.0;         // Z-bound of w
    double c_star_absorb = 1.0;

    // Absolute constants for the averaged log-interpolation inequality (2D),
    // the lattice-vs-integral slack in the Agmon-type bound (3D), and the
    // ensemble threshold prefactors.
    double brezis_gallouet_const = 1.0;
    double agmon_slack = 1.0;
    double cheb_l2_prefactor = 1.0;
    double cheb_h1_prefactor = 1.0;

    static Calibration load(const std::string& path);
    void save(const std::string& path) const;

    // Values shipped with the repository (data/calibration_v1.json).
    static Calibration shipped();
};

}  // namespace gnse
