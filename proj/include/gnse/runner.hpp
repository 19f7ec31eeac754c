#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gnse/calibration.hpp"
#include "gnse/inequalities.hpp"
#include "gnse/run_config.hpp"

namespace gnse {

// Worker cap from GEVREY_NSE_THREADS (default: hardware concurrency).
int thread_cap();

// Deterministic parallel sweep: every index writes only its own slot, so the
// result is independent of the thread count.
void parallel_for(int count, const std::function<void(int)>& fn);

// Pinned-seed property suites (verify subcommand, acceptance gate,
// calibration).  Every returned case is a proved inequality; failures are
// implementation bugs.
std::vector<InequalityCase> sweep_semigroup(int cases_per_check = 1000);
std::vector<InequalityCase> sweep_appendix(const Calibration& cal);
std::vector<InequalityCase> sweep_lemmas(const Calibration& cal);

// Pinned small-data 2D fixed-point runs (sigma = 0, q = 2): contraction
// ratios against the 1/3 budget and the measured radius against the
// theorem's lower bound at T*.
struct ContractionCase {
    int index = 0;
    bool converged = false;
    double max_ratio = 0.0;   // worst rho_m
    double lambda_hat = 0.0;  // fit at T*
    double radius_bound = 0.0;
    double bound_ratio = 0.0;  // lambda_hat / radius_bound
    bool hypothesis_ok = false;
    double M = 0.0;
};

std::vector<ContractionCase> sweep_contraction(const Calibration& cal, int cases = 50);

// Subcommand drivers; return process exit codes:
// 0 ok, 1 config, 2 numerical abort, 3 nonconvergence, 4 verification failure.
int run_simulate(const RunConfig& cfg, const std::string& out_dir);
int run_picard(const RunConfig& cfg, const std::string& out_dir);
int run_verify(const std::string& suite, const Calibration& cal, const std::string& out_dir);
int run_spectrum(const RunConfig& cfg, const std::string& out_dir);
int run_radius(const RunConfig& cfg, const std::string& out_dir);

}  // namespace gnse
