#include "gnse/calibration.hpp"

#include <fstream>

#include "gnse/errors.hpp"
#include "json.hpp"

namespace gnse {

using nlohmann::ordered_json;

Calibration Calibration::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("calibration: cannot open " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("calibration: bad JSON in " + path + ": " + e.what());
    }
    Calibration c;
    try {
        c.version = j.at("version").get<std::string>();
        c.linear_sup_mult = j.at("linear_sup_mult").get<double>();
        c.linear_weighted_mult = j.at("linear_weighted_mult").get<double>();
        c.nonlinear_mult = j.at("nonlinear_mult").get<double>();
        c.c_star_absorb = j.at("c_star_absorb").get<double>();
        c.brezis_gallouet_const = j.at("brezis_gallouet_const").get<double>();
        c.agmon_slack = j.at("agmon_slack").get<double>();
        c.cheb_l2_prefactor = j.at("cheb_l2_prefactor").get<double>();
        c.cheb_h1_prefactor = j.at("cheb_h1_prefactor").get<double>();
    } catch (const std::exception& e) {
        throw ConfigError("calibration: missing or invalid field in " + path + ": " + e.what());
    }
    for (double v : {c.linear_sup_mult, c.linear_weighted_mult, c.nonlinear_mult, c.c_star_absorb,
                     c.brezis_gallouet_const, c.agmon_slack, c.cheb_l2_prefactor,
                     c.cheb_h1_prefactor})
        if (!(v > 0.0)) throw ConfigError("calibration: constants must be positive in " + path);
    return c;
}

void Calibration::save(const std::string& path) const {
    ordered_json j;
    j["version"] = version;
    j["linear_sup_mult"] = linear_sup_mult;
    j["linear_weighted_mult"] = linear_weighted_mult;
    j["nonlinear_mult"] = nonlinear_mult;
    j["c_star_absorb"] = c_star_absorb;
    j["brezis_gallouet_const"] = brezis_gallouet_const;
    j["agmon_slack"] = agmon_slack;
    j["cheb_l2_prefactor"] = cheb_l2_prefactor;
    j["cheb_h1_prefactor"] = cheb_h1_prefactor;
    std::ofstream out(path);
    if (!out) throw ConfigError("calibration: cannot write " + path);
    out << j.dump(2) << "\n";
}

Calibration Calibration::shipped() {
    // Mirrors data/calibration_v1.json; regenerate with gnse_calibrate.
    Calibration c;
    c.version = "v1";
    c.linear_sup_mult = 1.9230;
    c.linear_weighted_mult = 2.0339;
    c.nonlinear_mult = 1.1630;
    c.c_star_absorb = 2.0;
    c.brezis_gallouet_const = 8.9235;
    c.agmon_slack = 1.3759;
    c.cheb_l2_prefactor = 1.1;
    c.cheb_h1_prefactor = 1.1;
    return c;
}

}  // namespace gnse
