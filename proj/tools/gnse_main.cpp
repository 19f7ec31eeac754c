#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gnse/errors.hpp"
#include "gnse/runner.hpp"

using namespace gnse;

int main(int argc, char** argv) {
    CLI::App app{"Spectral Navier-Stokes simulator and estimate verifier on the periodic torus"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out", suite = "all";
    long long seed_override = -1;

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* opt = sub->add_option("--config", config_path, "run configuration file");
        if (needs_config) opt->required();
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--seed", seed_override, "override the configured RNG seeds");
    };

    auto* simulate = app.add_subcommand("simulate", "long ETD run with diagnostics");
    add_common(simulate, true);
    auto* picard = app.add_subcommand("picard", "fixed-point solve plus theorem report");
    add_common(picard, true);
    auto* verify = app.add_subcommand("verify", "pinned-seed inequality suites");
    add_common(verify, false);
    verify->add_option("--suite", suite, "semigroup|appendix|lemmas|all");
    auto* spectrum = app.add_subcommand("spectrum", "band spectrum from stored snapshots");
    add_common(spectrum, true);
    auto* radius = app.add_subcommand("radius", "analyticity-radius estimates for a field");
    add_common(radius, true);

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg;
        if (!config_path.empty()) {
            cfg = RunConfig::load(config_path);
            if (seed_override >= 0) cfg.override_seed(uint64_t(seed_override));
        }
        if (simulate->parsed()) return run_simulate(cfg, out_dir);
        if (picard->parsed()) return run_picard(cfg, out_dir);
        if (verify->parsed()) {
            const Calibration cal =
                config_path.empty() ? Calibration::shipped() : cfg.load_calibration();
            return run_verify(suite, cal, out_dir);
        }
        if (spectrum->parsed()) return run_spectrum(cfg, out_dir);
        if (radius->parsed()) return run_radius(cfg, out_dir);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
