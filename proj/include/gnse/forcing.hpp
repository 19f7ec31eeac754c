#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "gnse/field.hpp"

namespace gnse {

// lambda(t) schedule entering Gevrey norms along trajectories.  The solver
// always runs sqrt_nu_t (lambda(t) = sqrt(nu t)); zero/constant exist for
// norm bookkeeping.
struct LambdaSchedule {
    enum class Kind { zero, constant, sqrt_nu_t } kind = Kind::sqrt_nu_t;
    double value = 0.0;  // for Kind::constant

    double operator()(double t, double nu) const {
        switch (kind) {
            case Kind::zero: return 0.0;
            case Kind::constant: return value;
            case Kind::sqrt_nu_t: return std::sqrt(nu * t);
        }
        return 0.0;
    }
    bool is_constant() const { return kind != Kind::sqrt_nu_t; }
    static LambdaSchedule zero() { return {Kind::zero, 0.0}; }
    static LambdaSchedule constant(double v) { return {Kind::constant, v}; }
    static LambdaSchedule sqrt_nu_t() { return {Kind::sqrt_nu_t, 0.0}; }
};

// Forcing as a function of time: absent, time-independent, or sampled on a
// grid (linear interpolation between samples).
class ForceSchedule {
  public:
    static ForceSchedule none() { return ForceSchedule(); }
    static ForceSchedule constant(SpectralField f);
    static ForceSchedule sampled(std::vector<double> times, std::vector<SpectralField> fields);

    bool is_zero() const { return kind_ == Kind::zero; }
    bool is_constant() const { return kind_ != Kind::sampled; }

    // Field at time t (constant extended to all t; sampled clamps to its span).
    SpectralField at(double t) const;
    const SpectralField& constant_field() const;
    const std::vector<double>& sample_times() const { return times_; }

    // Largest sample time; +inf for constant forcing, 0 for none.
    double horizon() const;
    bool has_layout() const { return kind_ != Kind::zero; }
    const SpectralField& layout_field() const;

  private:
    enum class Kind { zero, constant, sampled } kind_ = Kind::zero;
    std::vector<double> times_;
    std::vector<SpectralField> fields_;
};

}  // namespace gnse
