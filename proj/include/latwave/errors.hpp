#pragma once

#include <stdexcept>
#include <string>

namespace latwave {

/** Synthesis/analysis grid too small for the requested band or nonlinearity degree. */
struct AliasingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** The linearized wave operator has a (near-)vanishing eigenvalue on the truncated band. */
struct SingularOperatorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** A closed-form bound was requested outside its region of validity. */
struct InvalidRegimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** Inconsistent inputs or violated API contract (e.g. lattice/profile mismatch). */
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** Inner Krylov solve failed to reach its tolerance. */
struct LinearSolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** Trajectory left the admissible region (|q_n| > 1e6). */
struct BlowupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** Malformed or inconsistent run configuration. */
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace latwave
