#pragma once

#include <optional>

#include "latwave/lattice.hpp"
#include "latwave/spectral.hpp"

namespace latwave {

/** Embedding constants of the coefficient-sum norms on the 2L-periodic
 * zero-mean sine subspace (Omega = pi/L):
 *
 *   c_l      Poincare constant L^2/pi^2:          l2 <= sqrt(c_l) * h1
 *   c_star   sup-norm by h1:  sup|Q| <= c_star * h1,  c_star = sqrt(2 zeta(2))/Omega
 *   c0_star  l2 by h2:        l2 <= c0_star * h2,     c0_star = 1/Omega^2
 *   c2_star  sup-norm by h2:  sup|Q| <= c2_star * h2, c2_star = sqrt(2 zeta(4))/Omega^2
 *   c3_star  c2_star/c0_star = pi^2/sqrt(45), dimensionless
 *
 * (Cauchy-Schwarz coefficient bounds; conservative but explicit.) */
struct EmbeddingConstants {
    double c_l, c_star, c0_star, c2_star, c3_star;
};

EmbeddingConstants embedding_constants(double L);

/** Existence-ring radii for the hard-potential problem with declared
 * constants (bigK, beta):
 *
 *   base   = (c^2 Omega^2 - 4 kappa) / (bigK * c3_star^beta)
 *   r_max  = base^(1/beta)     — every nontrivial wave has l2 norm <= r_max
 *   r_crit = base^(1/(1+beta)) — below this l2 norm only the zero wave exists
 *
 * ring_nonempty (r_crit < r_max) holds iff base > 1. Requires the gap
 * c^2 Omega^2 - 4 kappa > 0 (InvalidRegimeError otherwise). */
struct RingBounds {
    double base, r_max, r_crit;
    bool ring_nonempty;
};

RingBounds ring_bounds(const LatticeParams& lp, const WaveParams& wp,
                       const HardPotential& hp, const EmbeddingConstants& ec);

/** Energy level below which only the trivial wave exists: r_crit^2/2.
 * `printed` switches to the sqrt(2 r_crit) compatibility variant. */
double energy_threshold(double r_crit, bool printed = false);

/** Contraction constant of the fixed-point map on the radius-R ball:
 *  (2/c^2) (kappa + bigK * c_star * R^beta). */
double contraction_constant_hard(const LatticeParams& lp, const WaveParams& wp,
                                 const HardPotential& hp, double R,
                                 const EmbeddingConstants& ec);

/** Velocity upper bound 2 (kappa + bigK*c_star*R^beta) * sqrt(c_l): nontrivial
 * waves of l2 norm <= R require c^2 below this. `printed` uses the c_l
 * compatibility variant in place of sqrt(c_l). */
double velocity_upper_bound(const LatticeParams& lp, const HardPotential& hp, double R,
                            const EmbeddingConstants& ec, bool printed = false);

/** Closed-form thresholds of the double-well problem:
 *
 *   c_crit^2 = sqrt(c_l) (2 kappa + c_l omega0^2)
 *   t_thresh = [(c^2 - c_crit^2)/c_l]^(2/(p-1)) * [1/(p a c_star^(p-1))]^(2/(p-1))
 *              for c > c_crit, else 0 — a lower bound on 2 T(Q)
 *   m_soft   = (1/c^2)(2 kappa + c_l omega0^2 + p sqrt(c_l) a c_star^(p-1) R^(p-1)),
 *              the Lipschitz constant of the fixed-point map on the radius-R ball.
 */
struct SoftThresholds {
    double c_crit, t_thresh, m_soft;
};

SoftThresholds soft_thresholds(const LatticeParams& lp, const WaveParams& wp,
                               const SoftPotential& sp, const EmbeddingConstants& ec,
                               double R = 1.0);

/** Kinetic-energy lower bound t_thresh < 2 T(Q), applicable for c > c_crit
 * (vacuously holds below). */
struct KineticCheck {
    bool applicable;
    bool holds;
    double t_thresh;
    double t_kinetic;
};

KineticCheck kinetic_threshold_check(const FourierProfile& Q, const LatticeParams& lp,
                                     const WaveParams& wp, const SoftPotential& sp,
                                     const EmbeddingConstants& ec);

/** Everything above for one parameter point, with fields left empty when not
 * defined for the potential family or regime (hard: ring/velocity fields;
 * soft: c_crit/t_thresh/m_soft). Total function: out-of-regime ring bounds
 * yield empty fields rather than an error so sweeps can cross the boundary. */
struct ThresholdReport {
    bool condition_as = false;
    std::optional<double> base, r_max, r_crit, e_crit;
    std::optional<bool> ring_nonempty;
    std::optional<double> contraction_m, velocity_bound_c2;
    std::optional<double> c_crit, t_thresh, m_soft;
};

ThresholdReport threshold_report(const LatticeParams& lp, const WaveParams& wp,
                                 const Potential& pot, double R, bool printed = false);

}  // namespace latwave
