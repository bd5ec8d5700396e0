#pragma once
//
// Frozen high-precision reference values for the test suite.
// Generated by scripts/compute_reference_values.py (mpmath, 40 digits);
// each constant below is the correctly rounded double of the exact value.
// Regenerate with:
//     python3 scripts/compute_reference_values.py > tests/reference_values.hpp
// Do not edit by hand.
//

namespace refvals {

// dimensionless sup-norm factor C2*/C0* = sqrt(2*zeta(4)) = pi^2/sqrt(45)
//   = 1.47127375679112702068958995
inline constexpr double C3_STAR = 1.4712737567911269;

// h1 -> sup embedding constant at L = pi: sqrt(2*zeta(2)) = pi/sqrt(3)
//   = 1.813799364234217850594078258
inline constexpr double C_STAR_L_PI = 1.8137993642342178;

// h1 -> sup embedding constant at L = 2: 2/sqrt(3)
//   = 1.154700538379251529018297561
inline constexpr double C_STAR_L_2 = 1.1547005383792515;

// h2 -> sup embedding constant at L = pi (Omega = 1): pi^2/sqrt(45)
//   = 1.47127375679112702068958995
inline constexpr double C2_STAR_L_PI = 1.4712737567911269;

// nu_1 at L=pi, kappa=0.1, c=1: -1 + 0.4 sin^2(1/2)
//   = -0.9080604611736279434801873215
inline constexpr double NU_1_LPI_K01_C1 = -0.90806046117362793;

// max_{1<=k<=64} (Omega k)^2/|nu_k| at L=pi, kappa=0.1, c=1 (attained at k=1)
//   = 1.101248256869971271547881897
inline constexpr double MINV_EXACT_SUP_LPI_K01_C1_K64 = 1.1012482568699713;

// h2 bound Omega^2/(Omega^2 - 4 kappa/c^2) at L=pi, kappa=0.1, c=1 (= 5/3)
//   = 1.666666666666666666666666667
inline constexpr double MINV_BOUND_X2_LPI_K01_C1 = 1.6666666666666667;

// l2 bound c^2/(c^2 Omega^2 - 4 kappa) at L=pi, kappa=0.1, c=1 (= 5/3)
//   = 1.666666666666666666666666667
inline constexpr double MINV_BOUND_X0_LPI_K01_C1 = 1.6666666666666667;

// ring base (c^2 Omega^2 - 4 kappa)/(K C3*^beta) at L=pi, kappa=0.1, c=1, K=1, beta=2: exactly 27/pi^4
//   = 0.2771815208764770501071251482
inline constexpr double RING_BASE_LPI = 0.27718152087647707;

// R_max = base^(1/2) at same parameters: 3*sqrt(3)/pi^2
//   = 0.5264803138546369713702103761
inline constexpr double R_MAX_LPI = 0.52648031385463701;

// R_crit = base^(1/3) at same parameters: 3/pi^(4/3)
//   = 0.6520107523886978962951081463
inline constexpr double R_CRIT_LPI = 0.65201075238869788;

// E_crit = R_crit^2/2 at same parameters
//   = 0.2125590106152379597397345037
inline constexpr double E_CRIT_LPI = 0.21255901061523796;

// compatibility variant sqrt(2 R_crit) at same parameters
//   = 1.141937609844511510819772204
inline constexpr double E_CRIT_LPI_PRINTED = 1.1419376098445115;

// hard contraction constant (2/c^2)(kappa + K C* R^beta) at L=pi, kappa=0.1, c=1, K=1, beta=2, R=1
//   = 3.827598728468435701188156515
inline constexpr double M_HARD_LPI_R1 = 3.8275987284684359;

// velocity bound 2(kappa + K C* R^beta) sqrt(C_L) at L=pi, kappa=0.5, K=1, beta=2, R=1: 1 + 2 pi/sqrt(3)
//   = 4.627598728468435701188156515
inline constexpr double C2_MAX_LPI = 4.6275987284684357;

// velocity bound at L=2 (sqrt(C_L) = 2/pi), kappa=0.5, K=1, beta=2, R=1
//   = 2.106830160159026808439072382
inline constexpr double C2_MAX_L2_PLAIN = 2.1068301601590269;

// compatibility variant with C_L = 4/pi^2 instead of sqrt(C_L) at L=2
//   = 1.341249736977594590433669633
inline constexpr double C2_MAX_L2_PRINTED = 1.3412497369775946;

// critical speed at L=pi, kappa=0.5, omega0=1: sqrt(2)
//   = 1.414213562373095048801688724
inline constexpr double C_CRIT_LPI_K05_W1 = 1.4142135623730951;

// critical speed at L=8, kappa=0.1, omega0=1 (soft-solve test runs at c=1.2, below this: kinetic bound not applicable)
//   = 4.125782525496491015560498513
inline constexpr double C_CRIT_L8_K01_W1 = 4.1257825254964908;

// kinetic-energy threshold at L=pi, kappa=0.5, omega0=1, a=1, p=3, c=2: 2/pi^2
//   = 0.2026423672846755428877589264
inline constexpr double T_THRESH_LPI_C2 = 0.20264236728467555;

// soft contraction constant at L=pi, kappa=0.5, omega0=1, a=1, p=3, c=2, R=1: (2 + pi^2)/4
//   = 2.96740110027233965470862275
inline constexpr double M_SOFT_LPI_C2_R1 = 2.9674011002723395;

// mountain-pass radius, case i, p=3, c=1, a=1, L=pi: sqrt(2)
//   = 1.414213562373095048801688724
inline constexpr double RHO_CASE_I = 1.4142135623730951;

// mountain-pass radius, case ii, p=3, a=1, omega0=1, kappa=1, L=pi, c=sqrt(5): exactly 2
//   = 2.0
inline constexpr double RHO_CASE_II = 2;

// l2 norm of the advance-delay residual of Q=sin z, V'=x, L=pi, kappa=0.2, c=1.3
//   = 0.3578815362921346795232029605
inline constexpr double RES_L2_LINEAR_MODE = 0.35788153629213471;

// lim E(eps sin z)/eps^2 for V = x^2/2 + x^4/4, L=pi, kappa=0.1, c=1.5
//   = 5.249506351959096019378951585
inline constexpr double ENERGY_QUADRATIC_LIMIT = 5.2495063519590959;

// S(sin z) at L=pi, kappa=0.5, omega0=1, a=1, p=3, c=2 (int sin^4 = 3 pi/4 over one period)
//   = 6.542841562047986829559082389
inline constexpr double ACTION_UNIT_MODE_SOFT = 6.5428415620479869;

// T(sin z) = L * |Q|_h1^2 = pi/2 at L=pi
//   = 1.570796326794896619231321692
inline constexpr double KINETIC_T_SIN_LPI = 1.5707963267948966;

// single-mode balance amplitude on mode k=2 for V = x^2/2 + x^4/4, L=8, kappa=0.1, c=1.5 (k=1 gap is negative; k=2 is the first open mode)
//   = 0.6626557428413847332942127359
inline constexpr double GALERKIN_AMP_L8_K2 = 0.66265574284138473;

// omega(q) = sqrt(V''(0) + 4 kappa sin^2(q/2)) at V''(0)=1, kappa=0.25, q=pi/4
//   = 1.07072247076762437665585305
inline constexpr double DISPERSION_OMEGA_Q_PI4 = 1.0707224707676244;

// max |V''(x)|/(mbar |x|^alpha), mbar=7, alpha=1, grid +/-[0.5,2] x101: 13/14
//   = 0.9285714285714285714285714286
inline constexpr double VALIDATOR_GROWTH_MARGIN = 0.9285714285714286;

// max |V'(x1)-V'(x2)|/(K(x1^2+x2^2)|x1-x2|), K=4, beta=2, same grid (< 1)
//   = 0.8601703139405114270464360231
inline constexpr double VALIDATOR_PAIR_MARGIN_BIGK4 = 0.86017031394051147;

// same quotient with K=2: exceeds 1 (the constants K=2, beta=2 do not satisfy the two-point bound near x=0.5, where the quotient -> 1.75/K)
//   = 1.720340627881022854092872046
inline constexpr double VALIDATOR_PAIR_MARGIN_BIGK2 = 1.7203406278810229;

}  // namespace refvals
