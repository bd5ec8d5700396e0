#pragma once

#include <vector>

#include "latwave/lattice.hpp"
#include "latwave/spectral.hpp"

namespace latwave {

/** Positions and momenta of the N-site periodic lattice at time t. */
struct LatticeState {
    std::vector<double> q, p;
    double t = 0;
};

/** Travelling-wave initial data q_n = Q(n - c t0), p_n = -c Q'(n - c t0) by
 * exact synthesis. Consistency of the lattice period with the 2L-periodic
 * profile requires unit spacing, N = 2L (PreconditionError otherwise). */
LatticeState init_from_profile(const FourierProfile& prof, const LatticeParams& lp,
                               const WaveParams& wp, double t0);

/** One kick-drift-kick (Stoermer-Verlet) step of
 *  qdot_n = p_n,  pdot_n = kappa (q_{n+1} - 2 q_n + q_{n-1}) - V'(q_n). */
LatticeState step_verlet(const LatticeState& s, const LatticeParams& lp,
                         const Potential& pot, double dt);

struct TrajectorySample {
    double t;
    std::vector<double> q, p;
};

/** Summary of an integration run. h_osc is the peak-to-peak excursion of H
 * relative to |H(0)| (bounded by the step size, not by time: Verlet conserves
 * a modified Hamiltonian); h_drift is the secular component, measured as the
 * difference between the mean of H over the last and first deciles of the
 * recorded samples, relative to |H(0)|. */
struct IntegrationResult {
    LatticeState final_state;
    double h_initial, h_final, h_min, h_max;
    double h_osc, h_drift;
    std::vector<TrajectorySample> snapshots;  // every `stride` steps, plus start and end
};

/** Integrate for total time T with step dt (last step shortened to land on T
 * exactly when T/dt is not integral), recording H and snapshots every
 * `stride` steps. Throws BlowupError when any |q_n| exceeds 1e6. */
IntegrationResult integrate(const LatticeState& s0, const LatticeParams& lp,
                            const Potential& pot, double dt, double T, int stride);

struct TravellingCheck {
    double max_dev;
    bool pass;
};

/** Compare every recorded snapshot against the travelling ansatz:
 *  max over samples and sites of |q_n(t) - Q(n - c t)|; pass iff below tol. */
TravellingCheck verify_travelling(const IntegrationResult& traj, const FourierProfile& prof,
                                  const LatticeParams& lp, const WaveParams& wp, double tol);

/** Linear lattice dispersion relation omega^2 = V''(0) + 4 kappa sin^2(q/2). */
double dispersion_omega2(double q, double kappa, double ddv0);

/** Least-squares frequency of a sampled cosine-like signal from the exact
 * three-term recurrence A_{j+1} + A_{j-1} = 2 cos(omega dt) A_j; returns
 * omega. Used to measure lattice oscillation frequencies. */
double fit_cosine_frequency(const std::vector<double>& samples, double dt_sample);

}  // namespace latwave
