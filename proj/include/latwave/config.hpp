#pragma once

#include <string>

#include "latwave/lattice.hpp"
#include "latwave/solvers.hpp"

namespace latwave {

/** One run, fully described: sectioned key = value text (see README for the
 * schema) plus command-line overrides. Unknown sections, keys or potential
 * names are ConfigErrors with line diagnostics. */
struct RunConfig {
    std::string subcommand;  // solve-hard | solve-soft | thresholds | simulate | sweep

    // [lattice]
    double L = 3.14159265358979323846;
    int N = 0;  // 0 = round(2L)
    double kappa = 0.0;

    // [wave]
    double c = 1.0;

    // [potential]
    std::string potential_kind;  // "hard_quartic" | "soft"
    double quartic_g = 1.0;
    double mbar = 7.0, alpha = 1.0, bigK = 4.0, beta = 2.0;
    double omega0 = 1.0, a = 1.0;
    int p = 3;

    // [solver]
    SolverConfig solver;
    bool require_condition_as = true;

    // [thresholds]
    double thresholds_R = 1.0;

    // [simulate]
    std::string sim_profile;  // path to a profile.txt
    double sim_dt = 1e-3;
    double sim_periods = 10.0;
    int sim_stride = 100;
    double verify_tol = 1e-5;

    // [sweep]
    std::string sweep_parameter;  // "c" | "kappa"
    double sweep_from = 0.0, sweep_to = 0.0;
    int sweep_steps = 0;
    std::string sweep_task = "thresholds";  // "thresholds" | "solve-hard"
    int sweep_threads = 0;                  // 0 = hardware concurrency

    // [output]
    std::string out_dir = "out";

    // [compat]
    bool printed_formulas = false;

    bool quiet = false;
};

RunConfig parse_config(const std::string& text, const std::string& filename);

LatticeParams make_lattice(const RunConfig& rc);
Potential make_potential(const RunConfig& rc);

}  // namespace latwave
