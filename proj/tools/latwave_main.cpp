#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "latwave/config.hpp"
#include "latwave/errors.hpp"
#include "latwave/runner.hpp"
#include "latwave/textio.hpp"

int main(int argc, char** argv) {
    CLI::App app{"periodic travelling waves of nonlinear oscillator chains: "
                 "spectral solvers, existence thresholds, lattice dynamics"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    bool printed = false, quiet = false;
    double seed_amplitude = 0;

    const char* names[] = {"solve-hard", "solve-soft", "thresholds", "simulate", "sweep"};
    const char* descs[] = {
        "fixed-point + Newton solve of the advance-delay equation (convex potential)",
        "mountain-pass solve of the double-well action",
        "existence/uniqueness thresholds at one parameter point",
        "integrate the lattice from travelling-wave initial data and verify the ansatz",
        "1-d parameter sweep (thresholds or solve-hard per point)"};
    for (int i = 0; i < 5; ++i) {
        CLI::App* sub = app.add_subcommand(names[i], descs[i]);
        sub->add_option("--config", config_path, "run configuration file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--out", out_dir, "output directory (overrides [output] dir)");
        sub->add_flag("--printed-formulas", printed,
                      "use the compatibility variants of e_crit, the velocity bound and "
                      "the case-ii radius");
        sub->add_option("--seed-amplitude", seed_amplitude,
                        "override the solver seed amplitude");
        sub->add_flag("--quiet", quiet, "suppress the stdout summary");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        latwave::RunConfig rc =
            latwave::parse_config(latwave::read_file(config_path), config_path);
        rc.subcommand = app.get_subcommands().front()->get_name();
        if (!out_dir.empty()) rc.out_dir = out_dir;
        else if (const char* env = std::getenv("LATWAVE_OUT")) rc.out_dir = env;
        if (printed) rc.printed_formulas = true;
        if (quiet) rc.quiet = true;
        if (seed_amplitude > 0) rc.solver.seed_amplitude = seed_amplitude;
        return latwave::run(rc);
    } catch (const latwave::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
