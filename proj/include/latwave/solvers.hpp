#pragma once

#include <utility>
#include <vector>

#include "latwave/functionals.hpp"
#include "latwave/lattice.hpp"
#include "latwave/spectral.hpp"

namespace latwave {

enum class SolveStatus { Trivial, NonTrivial, Diverged, SingularOperator };

const char* to_string(SolveStatus s);

struct SolverConfig {
    int kmax = 64;
    double tol_residual = 1e-10;
    int max_iter = 500;
    double theta = 0.5;        // damping of the fixed-point iteration, in (0, 1]
    int seed_mode = 0;         // 0 = auto: first mode with positive linear gap
    double seed_amplitude = 0; // 0 = auto: single-mode balance / ring heuristic
    bool newton_enabled = true;
    double newton_tol = 1e-12;
    int mpa_path_points = 33;
    double mpa_step = 0.25;
    int mpa_max_deform = 300;

    void validate() const;  // throws PreconditionError on out-of-range values
};

struct SolveOutcome {
    FourierProfile profile;
    int iterations = 0;
    double final_residual_l2 = 0;
    SolveStatus status = SolveStatus::Trivial;
    double norm_l2 = 0, norm_h1 = 0;
    std::vector<std::pair<int, double>> history;  // (iteration, residual l2)
};

/** Fixed-point nonlinearity N(P) = -V'(P)/c^2, computed on a dealiased grid
 * and projected onto the odd subspace. */
FourierProfile apply_nonlinear_map(const FourierProfile& P, const WaveParams& wp,
                                   const Potential& pot);

/** Smallest mode k with c^2 Omega^2 k^2 - 4 kappa sin^2(Omega k/2) - V''(0) > 0
 * (the single-mode problem admits a nontrivial amplitude there); falls back
 * to 1 when no mode up to kmax opens. */
int first_open_mode(const LatticeParams& lp, const WaveParams& wp, const Potential& pot,
                    int kmax);

/** Amplitude A of the single-mode balance on mode k: projecting the wave
 * equation onto A sin(k Omega z) and keeping the cubic term of V' gives
 *   A^2 = (4/3) [c^2 Omega^2 k^2 - 4 kappa sin^2(Omega k/2) - V''(0)] / c3,
 * with c3 the cubic coefficient of V' (probed by finite differences for
 * closure potentials; for the double-well p > 3 the p-th order balance is
 * used instead). Returns 0 when the mode carries no positive amplitude. */
double single_mode_amplitude(const LatticeParams& lp, const WaveParams& wp,
                             const Potential& pot, int k);

/** Damped fixed-point iteration Q <- (1-theta) Q + theta M^{-1} N(Q) from the
 * seed A0 sin(k0 Omega z). Stops when the advance-delay residual drops below
 * tol_residual (status Trivial/NonTrivial by final norm) or at max_iter
 * (status Diverged, profile = best iterate seen — the iteration certifies
 * only a posteriori, and the best iterate is the Newton starting point). */
SolveOutcome picard_solve(const LatticeParams& lp, const WaveParams& wp,
                          const Potential& pot, const SolverConfig& cfg);

/** Newton iteration on the advance-delay residual over the truncated sine
 * coefficients; the Jacobian J h = c^2 h'' - kappa D1 h + V''(Q) h is applied
 * matrix-free and the symmetric linear systems are solved by diagonally
 * preconditioned MINRES. Halving line search; stops at newton_tol. */
SolveOutcome newton_refine(const FourierProfile& start, const LatticeParams& lp,
                           const WaveParams& wp, const Potential& pot,
                           const SolverConfig& cfg);

/** picard_solve followed by newton_refine from its best iterate (when enabled
 * and the fixed-point phase did not already converge below newton_tol). */
SolveOutcome solve_hard(const LatticeParams& lp, const WaveParams& wp,
                        const Potential& pot, const SolverConfig& cfg);

struct MountainPassOutcome {
    SolveOutcome outcome;
    double action_value = 0;
    double grad_norm = 0;
};

/** Numerical mountain-pass method for the double-well problem: find an
 * endpoint u1 = t* Q_seed with S(u1) < 0 by doubling t, discretize the
 * segment path 0 -> u1, repeatedly push interior path points down the
 * preconditioned action gradient (endpoints fixed), take the running action
 * maximizer along the path as the critical-point estimate, and polish it with
 * newton_refine. Requires one of the compactness cases
 *   (i) omega0^2 >= 4 kappa, or (ii) c^2 > c_l (4 kappa - omega0^2)
 * (PreconditionError otherwise). */
MountainPassOutcome mountain_pass_solve(const LatticeParams& lp, const WaveParams& wp,
                                        const SoftPotential& sp, const SolverConfig& cfg);

enum class RhoCase { CaseI, CaseII };

/** Radius of the action's mountain-pass ball:
 *  case i:  [(p+1) c^2 / (2 a c_l)]^(1/(p-1))
 *  case ii: [(p+1) (c^2 - (4 kappa - omega0^2) c_l) / (2 a c_l)]^(1/(p-1))
 * `printed` drops the c_l factor on the (4 kappa - omega0^2) term in case ii
 * (compatibility variant). Case ii requires c^2 > (4 kappa - omega0^2) c_l. */
double rho_bound(RhoCase which, const LatticeParams& lp, const WaveParams& wp,
                 const SoftPotential& sp, bool printed = false);

/** Diagonally preconditioned MINRES for symmetric (possibly indefinite)
 * systems A x = b; `apply` is the matrix action, `precond` the inverse of a
 * positive diagonal. Returns the achieved preconditioned residual norm. */
double minres(const std::function<void(const std::vector<double>&, std::vector<double>&)>& apply,
              const std::vector<double>& b, std::vector<double>& x,
              const std::vector<double>& precond_inv, int max_iter, double rel_tol);

}  // namespace latwave
