#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace latwave {

/** Geometry and coupling of the periodic oscillator chain.
 *
 * N sites sit equidistantly at x_n = -L + n*h with spacing h = 2L/N; kappa is
 * the nearest-neighbour coupling and Omega = pi/L the fundamental wave number
 * of 2L-periodic profiles. Travelling-wave initialization additionally needs
 * h = 1 (N = 2L), which unit_spacing() reports. */
struct LatticeParams {
    double L;
    int N;
    double kappa;
    double h;
    double Omega;

    LatticeParams(double L_, int N_, double kappa_);

    bool unit_spacing() const;
    /** Site coordinate x_n = -L + n*h. */
    double site(int n) const { return -L + n * h; }
};

/** Travelling-wave velocity; only c > 0 is considered. */
struct WaveParams {
    double c;
    explicit WaveParams(double c_);
};

struct PotentialValues {
    double v, dv, ddv;
};

/** Convex on-site potential V given as closures, together with the declared
 * constants of its growth and two-point bounds:
 *
 *   |V''(x)| <= mbar*|x|^alpha          and
 *   |V'(x1) - V'(x2)| <= bigK*(|x1|^beta + |x2|^beta)*|x1 - x2|,
 *
 * both away from the origin (see validate_hard_assumptions). poly_degree is
 * the polynomial degree of V when known (0 otherwise); it sizes the
 * dealiasing grids exactly. */
struct HardPotential {
    std::function<double(double)> v, dv, ddv;
    double mbar, alpha, bigK, beta;
    int poly_degree;

    HardPotential(std::function<double(double)> v_, std::function<double(double)> dv_,
                  std::function<double(double)> ddv_, double mbar_, double alpha_,
                  double bigK_, double beta_, int poly_degree_ = 0);
};

/** Double-well family V(x) = -(omega0^2/2) x^2 + a/(p+1) x^(p+1), p odd. */
struct SoftPotential {
    double omega0, a;
    int p;

    SoftPotential(double omega0_, double a_, int p_);

    double v(double x) const;
    double dv(double x) const;
    double ddv(double x) const;
};

using Potential = std::variant<HardPotential, SoftPotential>;

PotentialValues eval_potential(const Potential& pot, double x);
double eval_dv(const Potential& pot, double x);
double eval_ddv(const Potential& pot, double x);
double ddv_at_zero(const Potential& pot);
/** Polynomial degree of V (p+1 for the double well), or 0 when unknown. */
int potential_degree(const Potential& pot);

/** Built-in hard quartic V = x^2/2 + g*x^4/4 with the default declared
 * constants (validated on +/-[0.5, 2] for g = 1 by the test suite). */
HardPotential hard_quartic(double g = 1.0, double mbar = 7.0, double alpha = 1.0,
                           double bigK = 4.0, double beta = 2.0);

struct ValidationCheck {
    std::string name;
    bool pass;
    double margin;   // quotient checks pass iff margin <= 1; equality checks report |violation|
    double worst_x;  // location of the worst case (x1 for the two-point check)
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass = false;
};

/** Samples the hard-potential assumption set on the symmetric grid
 * +/-[x_min, x_max] (`samples` points per side): origin values, evenness,
 * non-negativity, the growth bound and the two-point bound. The last two are
 * only meaningful away from 0 when V''(0) > 0 and are therefore restricted
 * to |x| >= x_min. Failures are reported, not thrown. */
ValidationReport validate_hard_assumptions(const HardPotential& pot, double x_max,
                                           int samples, double x_min);

/** Invertibility condition of the linearized wave operator: 4*kappa/c^2 < Omega^2. */
bool condition_as(const LatticeParams& lp, const WaveParams& wp);

}  // namespace latwave
