#pragma once

#include "latwave/config.hpp"

namespace latwave {

/** Execute the configured subcommand and write its artifacts (report.json,
 * profile.txt, residual.csv, thresholds.csv, sweep.csv, trajectory.csv,
 * hamiltonian.csv as applicable) under rc.out_dir.
 *
 * Exit codes: 0 success, 2 solver divergence or trajectory blow-up,
 * 3 invalid regime (e.g. solve-hard outside condition_as). ConfigErrors
 * propagate to the caller (the CLI maps them to exit 1). */
int run(const RunConfig& rc);

}  // namespace latwave
