#include "gnse/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include "gnse/duhamel.hpp"
#include "gnse/norms.hpp"
#include "gnse/radius.hpp"
#include "gnse/semigroup.hpp"
#include "gnse/snapshot.hpp"
#include "gnse/spectral_ops.hpp"
#include "gnse/theorem.hpp"
#include "gnse/turbulence.hpp"
#include "json.hpp"

namespace gnse {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

int thread_cap() {
    const char* env = std::getenv("GEVREY_NSE_THREADS");
    int hw = int(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (!env) return hw;
    const int v = std::atoi(env);
    return v >= 1 ? std::min(v, 64) : hw;
}

void parallel_for(int count, const std::function<void(int)>& fn) {
    const int workers = std::min(thread_cap(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < count; i += workers) fn(i);
            } catch (...) {
                errors[size_t(w)] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

namespace {

PhysicalParams sweep_params(int n, std::mt19937_64& rng) {
    const double Ls[] = {2.0 * M_PI, 4.0 * M_PI, M_PI};
    const double nus[] = {1.0, 0.25, 2.0};
    return PhysicalParams::make(n, Ls[rng() % 3], nus[rng() % 3]);
}

double urand(std::mt19937_64& rng, double a, double b) {
    return a + (b - a) * double(rng() >> 11) * 0x1.0p-53;
}

InequalityCase from_report(const std::string& name, const SmoothingEstimateReport& r,
                           const std::string& note) {
    InequalityCase c;
    c.name = name;
    c.note = note;
    c.lhs = r.lhs;
    c.rhs = r.rhs;
    c.constant = r.constant_used;
    c.passed = r.passed;  // 1e-12 relative slack per the estimate contract
    return c;
}

}  // namespace

std::vector<InequalityCase> sweep_semigroup(int cases_per_check) {
    std::vector<InequalityCase> out(size_t(cases_per_check) * 4);
    parallel_for(cases_per_check, [&](int i) {
        std::mt19937_64 rng(0x5EED0000u + uint64_t(i));
        const int n = (rng() & 1) ? 2 : 3;
        const int K = n == 2 ? 6 : 4;
        const auto p = sweep_params(n, rng);
        const auto u = random_field(p, K, 1.0, double(K), rng(), urand(rng, 0.1, 3.0));
        const auto v = random_field(p, K, 1.0, double(K), rng(), urand(rng, 0.1, 3.0));

        {
            const double lam = urand(rng, 0.0, 0.5) / p.kappa0;
            const double sig = urand(rng, -1.0, 1.0), beta = urand(rng, 0.0, 1.0);
            const double t = urand(rng, 1e-3, 1.0) / (p.nu * p.kappa0 * p.kappa0);
            out[size_t(i) * 4] = from_report(
                "heat_smoothing", check_heat_smoothing(u, lam, sig, beta, t),
                "case " + std::to_string(i));
        }
        {
            const double t = urand(rng, 1e-4, 2.0) / (p.nu * p.kappa0 * p.kappa0);
            const double s = urand(rng, 0.0, 0.95) * t;
            out[size_t(i) * 4 + 1] = from_report(
                "schedule_absorption", check_schedule_absorption(u, s, t, urand(rng, -1.0, 1.0)),
                "case " + std::to_string(i));
        }
        {
            const double gammas[] = {0.0, 0.5, 1.0, 2.0};
            const double lam = urand(rng, 0.0, 0.4) / p.kappa0;
            out[size_t(i) * 4 + 2] = from_report(
                "algebra", check_algebra_bound(u, v, lam, gammas[rng() % 4]),
                "case " + std::to_string(i));
        }
        {
            const double gamma = (rng() & 1) ? 0.0 : 1.0;
            const double delta = gamma + urand(rng, -1.0, 0.5);
            const double lam = urand(rng, 0.0, 0.3) / p.kappa0;
            const double t = urand(rng, 1e-4, 1.0) / (p.nu * p.kappa0 * p.kappa0);
            out[size_t(i) * 4 + 3] = from_report(
                "heat_bilinear", check_heat_bilinear(u, v, lam, gamma, delta, t),
                "case " + std::to_string(i));
        }
    });
    return out;
}

std::vector<InequalityCase> sweep_appendix(const Calibration& cal) {
    std::vector<InequalityCase> out;

    // Singular kernel integral on a 500-point grid including the
    // (b=0, c=1/2, d=0, t=1) equality case.
    const double bs[] = {0.0, 0.5, 2.0, 10.0, 100.0};
    const double cs[] = {0.0, 0.25, 0.5, 0.75, 0.9};
    const double ds[] = {0.0, 0.25, 0.5, 0.75, 0.9};
    const double ts[] = {0.1, 1.0, 5.0, 20.0};
    std::vector<InequalityCase> beta_cases(500);
    parallel_for(500, [&](int i) {
        const int ib = i / 100, ic = (i / 20) % 5, id = (i / 4) % 5, it = i % 4;
        beta_cases[size_t(i)] = check_beta_integral(bs[ib], cs[ic], ds[id], ts[it]);
        beta_cases[size_t(i)].note = "b=" + std::to_string(bs[ib]) + " c=" + std::to_string(cs[ic]) +
                                     " d=" + std::to_string(ds[id]) + " t=" + std::to_string(ts[it]);
    });
    out.insert(out.end(), beta_cases.begin(), beta_cases.end());

    // Mf vs Grashof bracket on 50 band-limited time-independent forces.
    std::vector<std::vector<InequalityCase>> mf_cases(50);
    parallel_for(50, [&](int i) {
        std::mt19937_64 rng(0xAB2D0000u + uint64_t(i));
        const int n = (i % 2) ? 3 : 2;
        const auto p = sweep_params(n, rng);
        const int K = 8;
        const double hi = 2.0 + double(i % 5);
        const auto f = random_field(p, K, 1.0, hi, rng(), urand(rng, 0.2, 5.0));
        const double sigma = (i % 3 == 0) ? -0.75 : 0.0;
        const double qs[] = {2.0, 59.0 / 49.0, std::numeric_limits<double>::infinity()};
        const double tau = 1.0 / (p.nu * p.kappa0 * p.kappa0);
        mf_cases[size_t(i)] = check_mf_grashof(f, sigma, qs[i % 3], tau, 1.0 / p.kappa0);
        for (auto& c : mf_cases[size_t(i)]) c.note = "force " + std::to_string(i);
    });
    for (auto& v : mf_cases) out.insert(out.end(), v.begin(), v.end());

    // Averaged log-interpolation bound on 20 2D ensembles.
    std::vector<InequalityCase> bg_cases(20);
    parallel_for(20, [&](int i) {
        std::mt19937_64 rng(0xB600 + uint64_t(i));
        const auto p = sweep_params(2, rng);
        std::vector<SpectralField> ens;
        const int members = 12;
        for (int m = 0; m < members; ++m) {
            const double lo = 1.0 + double(rng() % 3);
            const double hi = lo + 2.0 + double(rng() % 7);
            ens.push_back(random_field(p, 12, lo, std::min(hi, 12.0), rng(),
                                       urand(rng, 0.1, 2.0),
                                       (rng() & 1) ? AmplitudeProfile::exp_decay
                                                   : AmplitudeProfile::flat,
                                       urand(rng, 0.0, 0.4)));
        }
        bg_cases[size_t(i)] = check_brezis_gallouet(ens, cal);
        bg_cases[size_t(i)].note += "; ensemble " + std::to_string(i);
    });
    out.insert(out.end(), bg_cases.begin(), bg_cases.end());

    // Negative-power interpolation bound on 200 3D fields.
    std::vector<InequalityCase> ag_cases(200);
    parallel_for(200, [&](int i) {
        std::mt19937_64 rng(0xA600 + uint64_t(i));
        const auto p = sweep_params(3, rng);
        const double sigmas[] = {-1.4, -1.0, -0.75, -0.6};
        const auto u = random_field(p, 5, 1.0, urand(rng, 2.0, 5.0), rng(), urand(rng, 0.1, 3.0));
        ag_cases[size_t(i)] = check_agmon(u, sigmas[i % 4], cal);
        ag_cases[size_t(i)].note += "; field " + std::to_string(i);
    });
    out.insert(out.end(), ag_cases.begin(), ag_cases.end());
    return out;
}

std::vector<InequalityCase> sweep_lemmas(const Calibration& cal) {
    std::vector<InequalityCase> out;

    struct Pair {
        double sigma, q;
    };
    const Pair pairs[] = {{0.0, 2.0},
                          {0.0, std::numeric_limits<double>::infinity()},
                          {0.5, 2.0},
                          {-0.25, 2.0},
                          {-0.75, 59.0 / 49.0}};

    std::vector<std::vector<InequalityCase>> linear(40);
    parallel_for(40, [&](int i) {
        std::mt19937_64 rng(0x11EA0000u + uint64_t(i));
        const int n = (i % 2) ? 3 : 2;
        const auto p = sweep_params(n, rng);
        const int K = n == 2 ? 8 : 5;
        const auto pr = pairs[i % 5];
        SpectralField u0(p, K);
        ForceSchedule f = ForceSchedule::none();
        if (i % 3 != 0) u0 = random_field(p, K, 1.0, double(K) / 2.0, rng(), urand(rng, 0.1, 2.0));
        if (i % 3 != 1)
            f = ForceSchedule::constant(
                random_field(p, K, 1.0, 3.0, rng(), urand(rng, 0.1, 2.0)));
        if (u0.max_abs() == 0.0 && f.is_zero())
            u0 = random_field(p, K, 1.0, 3.0, rng(), 1.0);
        const double T = urand(rng, 0.2, 2.0) / (p.nu * p.kappa0 * p.kappa0);
        linear[size_t(i)] = check_linear_lemma(u0, f, pr.sigma, pr.q, T, cal);
        auto cor = check_corollary_small_data(u0, f, pr.sigma, pr.q, T, cal);
        linear[size_t(i)].insert(linear[size_t(i)].end(), cor.begin(), cor.end());
        for (auto& c : linear[size_t(i)]) c.note += "; data " + std::to_string(i);
    });
    for (auto& v : linear) out.insert(out.end(), v.begin(), v.end());

    // Duhamel bilinear Z-bound; needs gamma = sigma + beta >= 0.
    std::vector<InequalityCase> nl(30);
    parallel_for(30, [&](int i) {
        std::mt19937_64 rng(0x21EA0000u + uint64_t(i));
        const int n = (i % 2) ? 3 : 2;
        const auto p = sweep_params(n, rng);
        const int K = n == 2 ? 8 : 5;
        const Pair ok_pairs[] = {{0.0, 2.0}, {-0.25, 2.0}, {0.5, 2.0}};
        const auto pr = ok_pairs[i % 3];
        const double q_prime = pr.q / (pr.q - 1.0);
        const double sigma_minus = std::max(-pr.sigma, 0.0);
        const double beta = pr.q <= 2.0 ? 2.0 * sigma_minus / q_prime : sigma_minus;

        const double T = urand(rng, 0.2, 1.5) / (p.nu * p.kappa0 * p.kappa0);
        const auto grid = make_picard_grid(T, 25, 1e-4);
        const auto ua = random_field(p, K, 1.0, double(K) / 2.0, rng(), urand(rng, 0.2, 2.0));
        const auto ub = random_field(p, K, 1.0, double(K) / 2.0, rng(), urand(rng, 0.2, 2.0));
        const auto tu = evaluate_phi(ua, ForceSchedule::none(), grid);
        const auto tv = evaluate_phi(ub, ForceSchedule::none(), grid);
        nl[size_t(i)] = check_nonlinear_lemma(tu, tv, pr.sigma, beta, cal);
        nl[size_t(i)].note += "; traj " + std::to_string(i);
    });
    out.insert(out.end(), nl.begin(), nl.end());
    return out;
}

std::vector<ContractionCase> sweep_contraction(const Calibration& cal, int cases) {
    std::vector<ContractionCase> out(static_cast<size_t>(cases));
    parallel_for(cases, [&](int i) {
        std::mt19937_64 rng(0xC0417AC7u + uint64_t(i));
        const auto p = PhysicalParams::make(2, 2.0 * M_PI, 1.0);
        const int K = 16;
        const double lam0 = urand(rng, 0.6, 1.2);
        const double band_hi = 3.0 + double(rng() % 3);
        SpectralField u0 =
            random_field(p, K, 1.0, band_hi, rng(), 1.0, AmplitudeProfile::exp_decay, lam0);
        // scale the data so M0 sits in a fixed small-data window
        const double target = urand(rng, 0.25, 0.6);
        const double m0_raw = sobolev_l1_norm(u0, 0.0) / (p.nu * p.kappa0);
        u0 *= target / m0_raw;

        const auto f = ForceSchedule::none();
        const auto tq = theorem_quantities(u0, f, Rational(0), Rational(2), false,
                                           TheoremId::m_local, 1.0, cal);
        const auto grid = make_picard_grid(tq.T_star, 32, 1e-3);

        ContractionCase c;
        c.index = i;
        c.hypothesis_ok = tq.hypothesis_ok;
        c.M = tq.M;
        c.radius_bound = tq.radius_bound;
        try {
            const auto res = picard_iterate(u0, f, 0.0, 0.0, grid, PicardOptions{1e-10, 40});
            c.converged = res.status == PicardStatus::converged;
            for (double r : res.ratios) c.max_ratio = std::max(c.max_ratio, r);
            const auto est = estimate_radius_fit(res.trajectory.fields.back(), K / 4, 3 * K / 4, 0.0);
            c.lambda_hat = est.lambda_hat;
            c.bound_ratio = c.lambda_hat / c.radius_bound;
        } catch (const NonconvergenceError& e) {
            c.converged = false;
            for (double r : e.ratios) c.max_ratio = std::max(c.max_ratio, r);
        }
        out[size_t(i)] = c;
    });
    return out;
}

namespace {

void ensure_dir(const std::string& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw ConfigError("cannot create output directory " + out_dir);
}

double band_l2sq(const SpectralField& u, double kappa1, double kappa2) {
    const double kappa0 = u.params().kappa0;
    double s = 0.0;
    for (int i = 0; i < u.mode_count(); ++i) {
        const double kk = kappa0 * u.wave(i).norm();
        if (kk < kappa1 * (1.0 - 1e-12) || kk >= kappa2 * (1.0 - 1e-12)) continue;
        for (int c = 0; c < u.n(); ++c) s += 2.0 * std::norm(u.at(i, c));
    }
    return std::pow(2.0 * M_PI / kappa0, u.n()) * s;
}

ordered_json theorem_json(const TheoremQuantities& tq) {
    ordered_json j;
    j["theorem"] = theorem_name(tq.id);
    j["sigma"] = tq.sigma;
    j["q"] = std::isinf(tq.q) ? ordered_json("inf") : ordered_json(tq.q);
    j["q_prime"] = tq.q_prime;
    j["beta"] = tq.beta;
    j["M0"] = tq.M0;
    j["Mf"] = tq.Mf;
    j["M"] = tq.M;
    j["G"] = tq.G;
    j["C_star"] = tq.C_star;
    j["C_lower_star"] = tq.C_lower_star;
    j["T_star"] = tq.T_star;
    j["radius_bound"] = tq.radius_bound;
    j["radius_prefactor"] = tq.radius_prefactor;
    j["hypothesis_ok"] = tq.hypothesis_ok;
    j["global_ok"] = tq.global_ok;
    j["smallness_lhs"] = tq.smallness_lhs;
    j["smallness_rhs"] = tq.smallness_rhs;
    j["Tf_used"] = tq.Tf_used;
    if (tq.g_exponent > 0.0) j["g_exponent"] = tq.g_exponent;
    j["calibration_version"] = tq.calibration_version;
    return j;
}

ordered_json case_json(const InequalityCase& c) {
    ordered_json j;
    j["name"] = c.name;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["constant"] = c.constant;
    j["passed"] = c.passed;
    j["informational"] = c.informational;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

}  // namespace

int run_simulate(const RunConfig& cfg, const std::string& out_dir) {
    ensure_dir(out_dir);
    const auto p = cfg.physical();
    const SpectralField u0 = cfg.build_u0();
    const ForceSchedule f = cfg.build_forcing();
    const Calibration cal = cfg.load_calibration();

    {
        ordered_json meta;
        meta["config"] = cfg.source_path;
        meta["calibration_version"] = cal.version;
        meta["n"] = cfg.n;
        meta["K"] = cfg.K;
        meta["dt"] = cfg.dt;
        meta["T"] = cfg.T;
        std::ofstream m(out_dir + "/run_meta.json");
        m << meta.dump(2) << "\n";
    }

    const auto d = compute_data_numbers(u0, f, rational_to_double(cfg.sigma),
                                        cfg.q_inf ? std::numeric_limits<double>::infinity()
                                                  : rational_to_double(cfg.q),
                                        cfg.T, LambdaSchedule::sqrt_nu_t());

    const long nsteps = std::lround(cfg.T / cfg.dt);
    if (std::abs(double(nsteps) * cfg.dt - cfg.T) > 1e-9 * cfg.T)
        throw ConfigError("config 'T': must be an integer multiple of dt");

    const int stride = cfg.snapshot_stride > 0 ? cfg.snapshot_stride : 1;
    const double sigma = rational_to_double(cfg.sigma);

    std::ofstream ts(out_dir + "/timeseries.jsonl");
    std::ofstream snap_index(out_dir + "/snapshots.jsonl");
    if (!ts || !snap_index) throw ConfigError("cannot write outputs in " + out_dir);

    // dyadic band edges for the spectrum file
    std::vector<double> edges;
    for (double k = p.kappa0; 2.0 * k <= p.kappa0 * double(cfg.K) * (1.0 + 1e-12); k *= 2.0)
        edges.push_back(k);
    std::vector<double> diag_times;
    std::vector<std::vector<double>> band_series(edges.size());
    std::vector<double> grad2_series;

    EtdStepper stepper(p, cfg.K, f);
    EtdState state{0.0, u0};
    int snap_count = 0;

    auto emit = [&](long step, const EtdState& s) {
        const double lam = std::sqrt(p.nu * s.t);
        ordered_json j;
        j["t"] = s.t;
        j["energy"] = kinetic_energy(s.u);
        j["enstrophy"] = enstrophy(s.u);
        try {
            j["gevrey_norm"] = gevrey_norm(s.u, GevreyWeight(lam, sigma));
        } catch (const SaturationError&) {
            j["gevrey_norm"] = nullptr;
        }
        const int lo = cfg.fit_band_lo > 0 ? cfg.fit_band_lo : std::max(1, cfg.K / 4);
        const int hi = cfg.fit_band_hi > 0 ? cfg.fit_band_hi : 3 * cfg.K / 4;
        try {
            j["lambda_hat"] = estimate_radius_fit(s.u, lo, hi, sigma).lambda_hat;
        } catch (const EstimationError&) {
            j["lambda_hat"] = nullptr;
        }
        diag_times.push_back(s.t);
        const double g = grad_l2_norm(s.u);
        grad2_series.push_back(g * g);
        double eps_to_date = 0.0;
        if (diag_times.size() > 1) {
            double integral = 0.0;
            for (size_t i = 1; i < diag_times.size(); ++i)
                integral += 0.5 * (grad2_series[i] + grad2_series[i - 1]) *
                            (diag_times[i] - diag_times[i - 1]);
            eps_to_date = p.nu * std::pow(p.kappa0, 3) * integral / s.t;
        }
        j["eps_to_date"] = eps_to_date;
        j["G"] = d.G;
        j["M0"] = d.M0;
        j["Mf"] = d.Mf;
        j["M"] = d.M;
        ts << j.dump() << "\n";
        for (size_t b = 0; b < edges.size(); ++b)
            band_series[b].push_back(band_l2sq(s.u, edges[b], 2.0 * edges[b]));
        if (cfg.snapshot_stride > 0 && step % cfg.snapshot_stride == 0) {
            char name[32];
            std::snprintf(name, sizeof name, "snap_%06d.gnse", snap_count++);
            write_field(out_dir + "/" + name, s.u);
            ordered_json idx;
            idx["t"] = s.t;
            idx["file"] = name;
            snap_index << idx.dump() << "\n";
        }
    };

    emit(0, state);
    for (long step = 1; step <= nsteps; ++step) {
        EtdState next;
        try {
            next = stepper.step(state, cfg.dt);
        } catch (const NumericalAbort& e) {
            write_field(out_dir + "/abort_state.gnse", state.u);
            std::cerr << "numerical abort: " << e.what() << " (state dumped)\n";
            return 2;
        }
        state = std::move(next);
        if (step % stride == 0 || step == nsteps) emit(step, state);
    }

    write_field(out_dir + "/final.gnse", state.u);

    // time-averaged dyadic spectrum over the trailing window
    const double T_avg = cfg.averaging_horizon > 0.0 ? cfg.averaging_horizon : cfg.T;
    const double t_from = cfg.T - T_avg;
    std::ofstream spec(out_dir + "/spectrum.csv");
    spec << "kappa,e_band\n";
    char buf[64];
    for (size_t b = 0; b < edges.size(); ++b) {
        double integral = 0.0, span = 0.0;
        for (size_t i = 1; i < diag_times.size(); ++i) {
            if (diag_times[i - 1] < t_from - 1e-12) continue;
            const double h = diag_times[i] - diag_times[i - 1];
            integral += 0.5 * (band_series[b][i] + band_series[b][i - 1]) * h;
            span += h;
        }
        const double e_band =
            std::pow(p.kappa0, 3) * (span > 0.0 ? integral / span : band_series[b].back());
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", edges[b], e_band);
        spec << buf;
    }
    return 0;
}

int run_picard(const RunConfig& cfg, const std::string& out_dir) {
    ensure_dir(out_dir);
    const SpectralField u0 = cfg.build_u0();
    const ForceSchedule f = cfg.build_forcing();
    const Calibration cal = cfg.load_calibration();

    const auto tq = theorem_quantities(u0, f, cfg.sigma, cfg.q, cfg.q_inf, cfg.theorem, cfg.T, cal);
    const double T_run = std::min(tq.T_star, tq.Tf_used);
    const auto grid = make_picard_grid(T_run, cfg.picard_grid_points, 1e-4);

    ordered_json rep;
    rep["theorem_quantities"] = theorem_json(tq);

    PicardResult res;
    try {
        res = picard_iterate(u0, f, tq.sigma, tq.beta, grid,
                             PicardOptions{cfg.picard_tol, cfg.picard_max_iters});
    } catch (const NonconvergenceError& e) {
        rep["status"] = "diverged";
        rep["ratios"] = e.ratios;
        std::ofstream out(out_dir + "/picard_report.json");
        out << rep.dump(2) << "\n";
        std::cerr << "picard: diverged (ratios in report)\n";
        return 3;
    }

    rep["status"] = res.status == PicardStatus::converged ? "converged" : "max_iters";
    rep["iterations"] = res.iterations;
    rep["ratios"] = res.ratios;
    rep["phi_z"] = res.phi_z;
    rep["residual_z"] = res.residual_z;
    rep["dist_to_phi_z"] = res.dist_to_phi_z;

    const auto& final_u = res.trajectory.fields.back();
    const int lo = cfg.fit_band_lo > 0 ? cfg.fit_band_lo : std::max(1, cfg.K / 4);
    const int hi = cfg.fit_band_hi > 0 ? cfg.fit_band_hi : 3 * cfg.K / 4;
    RadiusEstimate est;
    try {
        est = estimate_radius_fit(final_u, lo, hi, tq.sigma);
        rep["radius_method"] = "loglinear_fit";
    } catch (const EstimationError&) {
        est = estimate_radius_bisect(final_u, tq.sigma, cfg.radius_budget);
        rep["radius_method"] = "gevrey_bisect";
    }
    rep["lambda_hat"] = est.lambda_hat;

    const auto cmp = compare_to_bound(est, tq);
    rep["comparison"] = {{"lambda_hat", cmp.lambda_hat},
                         {"radius_bound", cmp.radius_bound},
                         {"ratio", cmp.ratio},
                         {"verdict", verdict_name(cmp.verdict)}};

    if (cfg.snapshot_stride > 0) {
        std::ofstream idx(out_dir + "/picard_snapshots.jsonl");
        int count = 0;
        for (int j = 0; j < res.trajectory.size(); j += cfg.snapshot_stride) {
            char name[40];
            std::snprintf(name, sizeof name, "picard_snap_%04d.gnse", count++);
            write_field(out_dir + "/" + name, res.trajectory.fields[j]);
            ordered_json line;
            line["t"] = res.trajectory.times[j];
            line["file"] = name;
            idx << line.dump() << "\n";
        }
    }

    std::ofstream out(out_dir + "/picard_report.json");
    out << rep.dump(2) << "\n";
    if (res.status != PicardStatus::converged) {
        std::cerr << "picard: no convergence in " << res.iterations << " iterations\n";
        return 3;
    }
    return 0;
}

int run_verify(const std::string& suite, const Calibration& cal, const std::string& out_dir) {
    ensure_dir(out_dir);
    std::vector<InequalityCase> cases;
    if (suite == "semigroup") {
        cases = sweep_semigroup();
    } else if (suite == "appendix") {
        cases = sweep_appendix(cal);
    } else if (suite == "lemmas") {
        cases = sweep_lemmas(cal);
    } else if (suite == "all") {
        cases = sweep_semigroup();
        auto a = sweep_appendix(cal);
        auto l = sweep_lemmas(cal);
        cases.insert(cases.end(), a.begin(), a.end());
        cases.insert(cases.end(), l.begin(), l.end());
    } else {
        throw ConfigError("verify: unknown suite '" + suite +
                          "' (expected semigroup|appendix|lemmas|all)");
    }

    std::ofstream out(out_dir + "/verify_" + suite + ".jsonl");
    int failures = 0;
    for (const auto& c : cases) {
        out << case_json(c).dump() << "\n";
        if (!c.passed && !c.informational) ++failures;
    }
    std::cout << "suite " << suite << ": " << cases.size() << " cases, " << failures
              << " failures (calibration " << cal.version << ")\n";
    if (failures > 0) {
        for (const auto& c : cases)
            if (!c.passed && !c.informational)
                std::cout << "  FAIL " << c.name << " lhs=" << c.lhs << " rhs=" << c.rhs << " "
                          << c.note << "\n";
        return 4;
    }
    return 0;
}

int run_spectrum(const RunConfig& cfg, const std::string& out_dir) {
    const std::string index = out_dir + "/snapshots.jsonl";
    std::ifstream in(index);
    if (!in) throw ConfigError("spectrum: missing " + index + " (run simulate first)");

    TrajectorySample traj;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto j = ordered_json::parse(line);
        traj.times.push_back(j.at("t").get<double>());
        traj.fields.push_back(read_field(out_dir + "/" + j.at("file").get<std::string>()));
    }
    if (traj.times.size() < 2) throw ConfigError("spectrum: need >= 2 snapshots");

    const double T_avg = cfg.averaging_horizon > 0.0 ? cfg.averaging_horizon : traj.T();
    // shift the window to the trailing part of the run
    if (T_avg < traj.T()) {
        const double t_from = traj.T() - T_avg;
        TrajectorySample tail;
        for (int j = 0; j < traj.size(); ++j)
            if (traj.times[j] >= t_from - 1e-12) {
                tail.times.push_back(traj.times[j] - t_from);
                tail.fields.push_back(traj.fields[j]);
            }
        if (tail.times.front() != 0.0) tail.times.front() = 0.0;
        traj = std::move(tail);
    }

    SpectrumReport rep = dyadic_spectrum(traj, traj.T());
    fit_power_law(rep);

    std::ofstream csv(out_dir + "/spectrum.csv");
    csv << "kappa,e_band\n";
    char buf[64];
    for (const auto& b : rep.bands) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", b.kappa, b.energy);
        csv << buf;
    }
    ordered_json j;
    j["fitted_exponent"] = rep.fitted_exponent;
    j["fit_residual"] = rep.fit_residual;
    j["bands_used"] = rep.bands_used;
    std::ofstream rp(out_dir + "/spectrum_report.json");
    rp << j.dump(2) << "\n";
    std::cout << "spectrum: exponent " << rep.fitted_exponent << " residual " << rep.fit_residual
              << "\n";
    return 0;
}

int run_radius(const RunConfig& cfg, const std::string& out_dir) {
    ensure_dir(out_dir);
    const SpectralField u = cfg.build_u0();
    const double sigma = rational_to_double(cfg.sigma);
    const int lo = cfg.fit_band_lo > 0 ? cfg.fit_band_lo : std::max(1, cfg.K / 4);
    const int hi = cfg.fit_band_hi > 0 ? cfg.fit_band_hi : 3 * cfg.K / 4;

    ordered_json j;
    try {
        const auto fit = estimate_radius_fit(u, lo, hi, sigma);
        j["fit"] = {{"lambda_hat", fit.lambda_hat},
                    {"band_lo", fit.band_lo},
                    {"band_hi", fit.band_hi},
                    {"residual", fit.residual}};
    } catch (const EstimationError& e) {
        j["fit"] = {{"error", e.what()}};
    }
    const auto bis = estimate_radius_bisect(u, sigma, cfg.radius_budget);
    j["bisect"] = {{"lambda_hat", bis.lambda_hat}, {"capped", bis.capped}};

    std::ofstream shells_csv(out_dir + "/shells.csv");
    shells_csv << "shell,sup,arg_norm\n";
    char buf[96];
    for (const auto& s : shell_maxima(u)) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", s.shell, s.sup, s.arg_norm);
        shells_csv << buf;
    }
    std::ofstream rp(out_dir + "/radius_report.json");
    rp << j.dump(2) << "\n";
    return 0;
}

}  // namespace gnse
