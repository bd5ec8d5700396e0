#pragma once

#include <vector>

#include "latwave/lattice.hpp"
#include "latwave/spectral.hpp"

namespace latwave {

struct ResidualInfo {
    FourierProfile residual;
    double l2;
    double linf;
};

/** Advance-delay residual of a candidate travelling wave,
 *
 *   r(z) = c^2 Q''(z) - kappa [Q(z+1) - 2Q(z) + Q(z-1)] + V'(Q(z)),
 *
 * evaluated spectrally (diagonal symbols plus a dealiased product for V'(Q))
 * and projected onto the odd subspace. A genuine wave has r = 0. */
ResidualInfo advance_delay_residual(const FourierProfile& Q, const LatticeParams& lp,
                                    const WaveParams& wp, const Potential& pot);

struct FunctionalBreakdown {
    double value, kinetic, onsite, coupling;
};

/** Average energy of the wave over one period,
 *  E = int (c^2/2) Q'^2 + V(Q) + (kappa/2) (Q(z+1) - Q(z))^2 dz,
 *  with the three integrands reported separately (value is their sum). */
FunctionalBreakdown wave_energy(const FourierProfile& Q, const LatticeParams& lp,
                                const WaveParams& wp, const Potential& pot);

/** Action functional of the double-well travelling-wave problem,
 *  S = int (c^2/2) Q'^2 + (omega0^2/2) Q^2 - a/(p+1) Q^(p+1)
 *      - (kappa/2) (Q(z+1) - Q(z))^2 dz,
 *  whose critical points are the travelling waves. */
FunctionalBreakdown soft_action(const FourierProfile& Q, const LatticeParams& lp,
                                const WaveParams& wp, const SoftPotential& sp);

/** L^2-gradient representer g of the action: <S'(Q), P> = int g P dz for every
 * band-limited odd P, with
 *  g = -c^2 Q'' + omega0^2 Q - a Q^p + kappa [Q(z+1) - 2Q(z) + Q(z-1)].
 * The advance-delay residual of the double-well problem equals -g. */
FourierProfile soft_action_gradient(const FourierProfile& Q, const LatticeParams& lp,
                                    const WaveParams& wp, const SoftPotential& sp);

/** Average kinetic energy T(Q) = (1/2) int Q'^2 dz = L * h1^2. */
double kinetic_energy(const FourierProfile& Q);

/** Lattice Hamiltonian H = sum_n p_n^2/2 + V(q_n) + (kappa/2)(q_{n+1} - q_n)^2
 * with periodic indices. */
double lattice_hamiltonian(const std::vector<double>& q, const std::vector<double>& p,
                           const LatticeParams& lp, const Potential& pot);

}  // namespace latwave
