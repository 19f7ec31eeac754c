#include "gnse/run_config.hpp"

#include <sys/stat.h>

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gnse/snapshot.hpp"

namespace gnse {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool file_exists(const std::string& p) {
    struct stat st;
    return ::stat(p.c_str(), &st) == 0;
}

double parse_length(const std::string& key, const std::string& v) {
    // "2pi", "0.5pi" and plain numbers
    const auto pos = v.find("pi");
    try {
        if (pos != std::string::npos) {
            const std::string head = trim(v.substr(0, pos));
            const double mult = head.empty() ? 1.0 : std::stod(head);
            return mult * M_PI;
        }
        return std::stod(v);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': cannot parse value '" + v + "'");
    }
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        size_t used = 0;
        const double x = std::stod(v, &used);
        if (trim(v.substr(used)).empty()) return x;
    } catch (const std::exception&) {
    }
    throw ConfigError("config key '" + key + "': cannot parse number '" + v + "'");
}

long long parse_int(const std::string& key, const std::string& v) {
    try {
        size_t used = 0;
        const long long x = std::stoll(v, &used);
        if (trim(v.substr(used)).empty()) return x;
    } catch (const std::exception&) {
    }
    throw ConfigError("config key '" + key + "': cannot parse integer '" + v + "'");
}

// "a/b", integers, or short decimals; exact rational result.
Rational parse_rational(const std::string& key, const std::string& v) {
    const auto slash = v.find('/');
    try {
        if (slash != std::string::npos) {
            const long long num = std::stoll(trim(v.substr(0, slash)));
            const long long den = std::stoll(trim(v.substr(slash + 1)));
            if (den == 0) throw ConfigError("zero denominator");
            return Rational(num, den);
        }
        const auto dot = v.find('.');
        if (dot == std::string::npos) return Rational(std::stoll(trim(v)));
        std::string digits = trim(v);
        digits.erase(dot, 1);
        const int places = int(trim(v).size() - dot - 1);
        if (places > 9) throw ConfigError("too many decimal places");
        long long den = 1;
        for (int i = 0; i < places; ++i) den *= 10;
        return Rational(std::stoll(digits), den);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': cannot parse rational '" + v + "'");
    }
}

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys{
        "n", "L", "nu", "K", "dt", "T", "stability_cap",
        "u0", "u0_band_lo", "u0_band_hi", "u0_seed", "u0_amplitude", "u0_profile",
        "u0_lambda0", "u0_file",
        "forcing", "forcing_kappa_bar", "forcing_band_lo", "forcing_amplitude",
        "forcing_seed", "forcing_file",
        "sigma", "q", "lambda_schedule", "theorem",
        "picard_tol", "picard_max_iters", "picard_grid_points",
        "snapshot_stride", "averaging_horizon", "constants_file",
        "fit_band_lo", "fit_band_hi", "radius_budget",
    };
    return keys;
}

}  // namespace

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);

    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config " + path + ":" + std::to_string(lineno) +
                              ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        if (!known_keys().count(key))
            throw ConfigError("config " + path + ": unknown key '" + key + "'");
        if (kv.count(key))
            throw ConfigError("config " + path + ": duplicate key '" + key + "'");
        kv[key] = trim(line.substr(eq + 1));
    }

    RunConfig c;
    c.source_path = path;
    auto has = [&](const char* k) { return kv.count(k) > 0; };
    auto get = [&](const char* k) -> const std::string& { return kv.at(k); };

    if (has("n")) c.n = int(parse_int("n", get("n")));
    if (has("L")) c.L = parse_length("L", get("L"));
    if (has("nu")) c.nu = parse_double("nu", get("nu"));
    if (has("K")) c.K = int(parse_int("K", get("K")));
    if (has("dt")) c.dt = parse_double("dt", get("dt"));
    if (has("T")) c.T = parse_double("T", get("T"));
    if (has("stability_cap")) c.stability_cap = parse_double("stability_cap", get("stability_cap"));

    if (has("u0")) {
        const std::string v = get("u0");
        if (v == "taylor_green") c.u0_kind = U0Kind::taylor_green;
        else if (v == "random") c.u0_kind = U0Kind::random;
        else if (v == "file") c.u0_kind = U0Kind::file;
        else throw ConfigError("config key 'u0': expected taylor_green|random|file, got '" + v + "'");
    }
    if (has("u0_band_lo")) c.u0_band_lo = parse_double("u0_band_lo", get("u0_band_lo"));
    if (has("u0_band_hi")) c.u0_band_hi = parse_double("u0_band_hi", get("u0_band_hi"));
    if (has("u0_seed")) c.u0_seed = uint64_t(parse_int("u0_seed", get("u0_seed")));
    if (has("u0_amplitude")) c.u0_amplitude = parse_double("u0_amplitude", get("u0_amplitude"));
    if (has("u0_profile")) {
        const std::string v = get("u0_profile");
        if (v == "flat") c.u0_profile = AmplitudeProfile::flat;
        else if (v == "exp_decay") c.u0_profile = AmplitudeProfile::exp_decay;
        else throw ConfigError("config key 'u0_profile': expected flat|exp_decay, got '" + v + "'");
    }
    if (has("u0_lambda0")) c.u0_lambda0 = parse_double("u0_lambda0", get("u0_lambda0"));
    if (has("u0_file")) c.u0_file = get("u0_file");

    if (has("forcing")) {
        const std::string v = get("forcing");
        if (v == "none") c.forcing_kind = ForcingKind::none;
        else if (v == "random") c.forcing_kind = ForcingKind::random;
        else if (v == "file") c.forcing_kind = ForcingKind::file;
        else throw ConfigError("config key 'forcing': expected none|random|file, got '" + v + "'");
    }
    if (has("forcing_kappa_bar"))
        c.forcing_kappa_bar = parse_double("forcing_kappa_bar", get("forcing_kappa_bar"));
    if (has("forcing_band_lo"))
        c.forcing_band_lo = parse_double("forcing_band_lo", get("forcing_band_lo"));
    if (has("forcing_amplitude"))
        c.forcing_amplitude = parse_double("forcing_amplitude", get("forcing_amplitude"));
    if (has("forcing_seed")) c.forcing_seed = uint64_t(parse_int("forcing_seed", get("forcing_seed")));
    if (has("forcing_file")) c.forcing_file = get("forcing_file");

    if (has("sigma")) c.sigma = parse_rational("sigma", get("sigma"));
    if (has("q")) {
        const std::string v = get("q");
        if (v == "inf" || v == "Inf" || v == "infinity") {
            c.q_inf = true;
            c.q = Rational(2);
        } else {
            c.q = parse_rational("q", v);
        }
    }
    if (has("lambda_schedule") && get("lambda_schedule") != "sqrt_nu_t")
        throw ConfigError("config key 'lambda_schedule': only 'sqrt_nu_t' is supported");
    if (has("theorem")) {
        const std::string v = get("theorem");
        if (v == "m_local") c.theorem = TheoremId::m_local;
        else if (v == "mf_small") c.theorem = TheoremId::mf_small;
        else if (v == "grashof_2d") c.theorem = TheoremId::grashof_2d;
        else if (v == "grashof_3d") c.theorem = TheoremId::grashof_3d;
        else throw ConfigError("config key 'theorem': unknown theorem id '" + v + "'");
    }

    if (has("picard_tol")) c.picard_tol = parse_double("picard_tol", get("picard_tol"));
    if (has("picard_max_iters"))
        c.picard_max_iters = int(parse_int("picard_max_iters", get("picard_max_iters")));
    if (has("picard_grid_points"))
        c.picard_grid_points = int(parse_int("picard_grid_points", get("picard_grid_points")));
    if (has("snapshot_stride"))
        c.snapshot_stride = int(parse_int("snapshot_stride", get("snapshot_stride")));
    if (has("averaging_horizon"))
        c.averaging_horizon = parse_double("averaging_horizon", get("averaging_horizon"));
    if (has("constants_file")) c.constants_file = get("constants_file");
    if (has("fit_band_lo")) c.fit_band_lo = int(parse_int("fit_band_lo", get("fit_band_lo")));
    if (has("fit_band_hi")) c.fit_band_hi = int(parse_int("fit_band_hi", get("fit_band_hi")));
    if (has("radius_budget")) c.radius_budget = parse_double("radius_budget", get("radius_budget"));

    c.validate();
    return c;
}

void RunConfig::validate() const {
    if (n != 2 && n != 3) throw ConfigError("config 'n': must be 2 or 3");
    if (!(L > 0.0)) throw ConfigError("config 'L': must be positive");
    if (!(nu > 0.0)) throw ConfigError("config 'nu': must be positive");
    if (K < 2) throw ConfigError("config 'K': must be >= 2");
    if (!(dt > 0.0)) throw ConfigError("config 'dt': must be positive");
    if (!(T > 0.0)) throw ConfigError("config 'T': must be positive");

    const double kappa0 = 2.0 * M_PI / L;
    const double stiff = dt * nu * kappa0 * kappa0 * double(K) * double(K);
    if (stiff > stability_cap)
        throw ConfigError("config 'dt': dt*nu*kappa0^2*K^2 = " + std::to_string(stiff) +
                          " exceeds stability_cap = " + std::to_string(stability_cap));

    if (u0_kind == U0Kind::random) {
        if (!(u0_band_lo <= u0_band_hi)) throw ConfigError("config 'u0_band_lo': empty band");
        if (u0_band_hi > double(K)) throw ConfigError("config 'u0_band_hi': beyond truncation K");
    }
    if (u0_kind == U0Kind::file && !file_exists(u0_file))
        throw ConfigError("config 'u0_file': missing file " + u0_file);

    if (forcing_kind == ForcingKind::random) {
        if (!(forcing_kappa_bar > 0.0))
            throw ConfigError("config 'forcing_kappa_bar': must be positive");
        if (forcing_kappa_bar > double(K) * kappa0 * (1.0 + 1e-12))
            throw ConfigError("config 'forcing_kappa_bar': kbar exceeds K*kappa0");
        if (!(forcing_amplitude > 0.0))
            throw ConfigError("config 'forcing_amplitude': must be positive");
    }
    if (forcing_kind == ForcingKind::file && !file_exists(forcing_file))
        throw ConfigError("config 'forcing_file': missing file " + forcing_file);

    if (sigma <= Rational(-1)) throw ConfigError("config 'sigma': must be > -1");
    if (!q_inf && q <= Rational(1)) throw ConfigError("config 'q': must be > 1 (or inf)");
    if (!(picard_tol > 0.0)) throw ConfigError("config 'picard_tol': must be positive");
    if (picard_max_iters < 1) throw ConfigError("config 'picard_max_iters': must be >= 1");
    if (picard_grid_points < 4) throw ConfigError("config 'picard_grid_points': must be >= 4");
    if (snapshot_stride < 0) throw ConfigError("config 'snapshot_stride': must be >= 0");
    if (averaging_horizon < 0.0) throw ConfigError("config 'averaging_horizon': must be >= 0");
    if (!constants_file.empty() && !file_exists(constants_file))
        throw ConfigError("config 'constants_file': missing file " + constants_file);
    if (fit_band_lo < 0 || fit_band_hi < 0 || (fit_band_hi != 0 && fit_band_hi < fit_band_lo))
        throw ConfigError("config 'fit_band_lo/hi': bad shell band");
    if (!(radius_budget > 1.0)) throw ConfigError("config 'radius_budget': must be > 1");
}

SpectralField RunConfig::build_u0() const {
    const auto p = physical();
    switch (u0_kind) {
        case U0Kind::taylor_green: {
            if (n != 2) throw ConfigError("config 'u0': taylor_green requires n = 2");
            SpectralField u = SpectralField::taylor_green(p, K);
            u *= u0_amplitude;
            return u;
        }
        case U0Kind::random:
            return random_field(p, K, u0_band_lo, u0_band_hi, u0_seed, u0_amplitude, u0_profile,
                                u0_lambda0);
        case U0Kind::file: {
            SpectralField u = read_field(u0_file);
            if (!(u.params() == p) || u.K() != K)
                throw ConfigError("config 'u0_file': snapshot layout differs from config");
            return u;
        }
    }
    throw ConfigError("config 'u0': unreachable");
}

ForceSchedule RunConfig::build_forcing() const {
    const auto p = physical();
    switch (forcing_kind) {
        case ForcingKind::none: return ForceSchedule::none();
        case ForcingKind::random: {
            const double hi = forcing_kappa_bar / p.kappa0;
            return ForceSchedule::constant(random_field(p, K, forcing_band_lo, hi, forcing_seed,
                                                        forcing_amplitude));
        }
        case ForcingKind::file: {
            SpectralField f = read_field(forcing_file);
            if (!(f.params() == p) || f.K() != K)
                throw ConfigError("config 'forcing_file': snapshot layout differs from config");
            return ForceSchedule::constant(std::move(f));
        }
    }
    throw ConfigError("config 'forcing': unreachable");
}

Calibration RunConfig::load_calibration() const {
    if (constants_file.empty()) return Calibration::shipped();
    return Calibration::load(constants_file);
}

}  // namespace gnse
