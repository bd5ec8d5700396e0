#pragma once

#include <complex>
#include <string>
#include <vector>

#include "latwave/lattice.hpp"

namespace latwave {

/** Truncated Fourier representation of a real 2L-periodic profile
 *
 *   Q(z) = sum_{0 < |k| <= kmax} qhat_k exp(i Omega k z),   Omega = pi/L,
 *
 * with the conjugate pair qhat_{-k} = conj(qhat_k) implied: only k >= 1 is
 * stored (coef[k-1] = qhat_k) and the zero mode is structurally absent, so
 * every profile is real and zero-mean by construction. Admissible waves are
 * additionally odd (pure sine series, Re qhat_k = 0); see project_odd. */
struct FourierProfile {
    double L = 0;
    std::vector<std::complex<double>> coef;

    FourierProfile() = default;
    FourierProfile(double L_, int kmax_);

    int kmax() const { return static_cast<int>(coef.size()); }

    /** Pointwise synthesis at an arbitrary argument, O(kmax). */
    double eval(double z) const;
    double eval_derivative(double z) const;
};

/** amplitude * sin(k Omega z) as a profile truncated at kmax = k. */
FourierProfile single_mode(double L, int k, double amplitude);

/** Uniform samples values[j] = Q(z_j), z_j = -L + j*(2L/m_grid), j = 0..m_grid-1. */
struct GridFunction {
    double L = 0;
    std::vector<double> values;

    int size() const { return static_cast<int>(values.size()); }
};

/** Precomputed trig tables for repeated transforms at fixed (L, kmax, m_grid).
 * Both directions cost O(kmax * m_grid); at the band sizes used here this is
 * cheaper than managing an FFT plan and exact for band-limited data. */
class TrigTransform {
  public:
    TrigTransform(double L, int kmax, int m_grid);

    void synthesize(const std::vector<std::complex<double>>& coef,
                    std::vector<double>& values) const;
    void analyze(const std::vector<double>& values,
                 std::vector<std::complex<double>>& coef) const;

    int kmax() const { return kmax_; }
    int m_grid() const { return m_; }
    double L() const { return L_; }

  private:
    double L_;
    int kmax_, m_;
    std::vector<double> cos_, sin_;  // [k-1]*m_ + j layout
};

/** Smallest even grid size on which pointwise degree-`degree` functions of a
 * kmax-band profile are alias-free on the band (and their period integrals
 * exact): degree*kmax + 2 rounded up to even. degree <= 0 means unknown and
 * falls back to the 4*kmax heuristic. */
int dealias_grid(int kmax, int degree);

GridFunction synthesize(const FourierProfile& prof, int m_grid);
FourierProfile analyze(const GridFunction& grid, int kmax);

/** Exact representation of z -> Q(z + delta): multiply qhat_k by exp(i Omega k delta). */
FourierProfile shift(const FourierProfile& prof, double delta);

/** Multiply qhat_k by -(Omega k)^2. */
FourierProfile second_derivative(const FourierProfile& prof);

/** Orthogonal projection onto the odd (sine) subspace: keeps i*Im(qhat_k).
 * Idempotent and a contraction in every coefficient norm. */
FourierProfile project_odd(const FourierProfile& prof);

/** Eigenvalue of the linearized wave operator on mode k:
 *  nu_k = -(Omega k)^2 + (4 kappa / c^2) sin^2(Omega k / 2). */
double nu(int k, const LatticeParams& lp, const WaveParams& wp);

/** Diagonal application of the wave operator (multiply by nu_k) and its
 * inverse (divide by nu_k). The inverse refuses with SingularOperatorError
 * when min_k |nu_k| < 1e-8 * Omega^2 on the truncated band. */
FourierProfile apply_wave_operator(const FourierProfile& prof, const LatticeParams& lp,
                                   const WaveParams& wp);
FourierProfile apply_wave_operator_inverse(const FourierProfile& prof,
                                           const LatticeParams& lp, const WaveParams& wp);

struct InverseNormBounds {
    double exact_sup;  // max_{1<=k<=kmax} (Omega k)^2 / |nu_k|
    double bound_h2;   // Omega^2 / (Omega^2 - 4 kappa/c^2), dominates exact_sup
    double bound_l2;   // c^2 / (c^2 Omega^2 - 4 kappa)
};

/** Norm bounds of the inverse wave operator; requires 4 kappa/c^2 < Omega^2. */
InverseNormBounds wave_operator_inverse_norm(const LatticeParams& lp, const WaveParams& wp,
                                             int kmax);

/** Coefficient-sum (Parseval) seminorms of the sine subspace:
 *  l2^2 = sum' |qhat_k|^2, h1^2 = sum' (Omega k)^2 |qhat_k|^2,
 *  h2^2 = sum' (Omega k)^4 |qhat_k|^2 (primed sums over k != 0); linf is the
 *  max over a dense synthesis grid (a lower bound on the true sup-norm). */
struct ProfileNorms {
    double l2, h1, h2, linf;
};

ProfileNorms norms(const FourierProfile& prof);
double norm_l2(const FourierProfile& prof);

/** L^2(-L, L) pairing: integral of a*b over one period via Parseval. */
double inner_product(const FourierProfile& a, const FourierProfile& b);

/** Plain-text serialization: header "L kmax" then one line "k re im" per
 * stored mode, 17 significant digits; round-trips bit-exactly. */
std::string to_text(const FourierProfile& prof);
FourierProfile profile_from_text(const std::string& text);

}  // namespace latwave
