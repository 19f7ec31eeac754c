#pragma once

#include <optional>
#include <vector>

#include "gnse/field.hpp"
#include "gnse/forcing.hpp"
#include "gnse/norms.hpp"

namespace gnse {

// Solution samples along a time grid; Gevrey weights along the trajectory
// always use lambda(t) = sqrt(nu t).
struct TrajectorySample {
    std::vector<double> times;
    std::vector<SpectralField> fields;

    int size() const { return int(times.size()); }
    double T() const { return times.empty() ? 0.0 : times.back(); }
    void validate() const;
};

// Dimensionless trajectory norms:
//   X = kappa0^{-sigma}/(nu kappa0) sup_t ||u(t)||_{sqrt(nu t),sigma}
//   Y = nu^{beta/2} kappa0^{-sigma}/(nu kappa0)
//         sup_{t>0} (t ^ (nu kappa0^2)^{-1})^{beta/2} ||u(t)||_{sqrt(nu t),sigma+beta}
//   Z = max(X, Y)
struct FunctionSpaceNorms {
    double X = 0.0;
    double Y = 0.0;
    double Z = 0.0;
    double beta = 0.0;
    double sigma = 0.0;
    double T = 0.0;
};

FunctionSpaceNorms trajectory_norms(const TrajectorySample& traj, double sigma, double beta);

// Grid with geometric refinement toward t=0 (the Y-weight t^{beta/2} is
// singular there).  t_0 = 0, t_1 ~ first_fraction * T, t_N = T.
std::vector<double> make_picard_grid(double T, int points, double first_fraction = 1e-4);

// Phi(t) = e^{-nu t A} u0 + int_0^t e^{-nu(t-s)A} P f(s) ds.  The heat term
// is exact; for time-independent f the mode-wise integral is closed-form,
// otherwise piecewise-linear-in-s with exact exponential weights.
TrajectorySample evaluate_phi(const SpectralField& u0, const ForceSchedule& f,
                              const std::vector<double>& t_grid);

// w(t) = int_0^t e^{-nu(t-s)A} B[u(s),v(s)] ds on the shared grid, via the
// same exponential product-rule quadrature (the kernel factorizes, so the
// accumulation is incremental in t).
TrajectorySample evaluate_w(const TrajectorySample& u, const TrajectorySample& v);
SpectralField evaluate_w_at(const TrajectorySample& u, const TrajectorySample& v, double t);

struct NonconvergenceError : std::runtime_error {
    std::vector<double> ratios;
    explicit NonconvergenceError(std::vector<double> r)
        : std::runtime_error("picard_iterate: contraction ratios exceed 1"), ratios(std::move(r)) {}
};

struct PicardOptions {
    double tol = 1e-10;
    int max_iters = 40;
};

enum class PicardStatus { converged, max_iters };

struct PicardResult {
    TrajectorySample trajectory;
    std::vector<double> ratios;  // rho_m = Z(d_{m+1})/Z(d_m)
    int iterations = 0;
    PicardStatus status = PicardStatus::converged;
    double phi_z = 0.0;          // Z-norm of Phi
    double residual_z = 0.0;     // Z-norm of u - (Phi - w[u,u])
    double dist_to_phi_z = 0.0;  // Z-norm of u - Phi
};

// Fixed-point iteration u^{m+1} = Phi - w[u^m,u^m]; stops when the update
// falls below tol * Z(Phi).  Three consecutive ratios above 1 abort with
// NonconvergenceError carrying the observed ratios.
PicardResult picard_iterate(const SpectralField& u0, const ForceSchedule& f, double sigma,
                            double beta, const std::vector<double>& t_grid,
                            const PicardOptions& opt = {});

struct NumericalAbort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EtdState {
    double t = 0.0;
    SpectralField u;
};

// Two-stage exponential time differencing (exact heat factor, standard
// second-order weights); the velocity is re-projected each step.
class EtdStepper {
  public:
    EtdStepper(const PhysicalParams& p, int K, ForceSchedule f);
    EtdState step(const EtdState& s, double dt) const;

  private:
    PhysicalParams params_;
    int K_;
    ForceSchedule f_;
    std::optional<SpectralField> f_const_;  // projected, for constant forcing
    SpectralField force_at(double t) const;
    bool has_force_ = false;
};

// Max over interior grid points of the l^1 residual of the wave-vector ODE
// du/dt = -nu kappa0^2 |k|^2 u - B[u,u] + P f, with centered differences in
// time.  Scales like dt^2 on smooth trajectories.
double weak_form_residual(const TrajectorySample& traj, const ForceSchedule& f);

}  // namespace gnse
