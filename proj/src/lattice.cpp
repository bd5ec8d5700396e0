#include "latwave/lattice.hpp"

#include <cmath>
#include <numbers>

#include "latwave/errors.hpp"

namespace latwave {

LatticeParams::LatticeParams(double L_, int N_, double kappa_)
    : L(L_), N(N_), kappa(kappa_) {
    if (!(L > 0)) throw PreconditionError("LatticeParams: L must be positive");
    if (N < 1) throw PreconditionError("LatticeParams: N must be >= 1");
    if (!(kappa >= 0)) throw PreconditionError("LatticeParams: kappa must be >= 0");
    h = 2 * L / N;
    Omega = std::numbers::pi / L;
}

bool LatticeParams::unit_spacing() const { return std::abs(h - 1.0) <= 1e-12; }

WaveParams::WaveParams(double c_) : c(c_) {
    if (!(c > 0)) throw PreconditionError("WaveParams: c must be positive");
}

HardPotential::HardPotential(std::function<double(double)> v_,
                             std::function<double(double)> dv_,
                             std::function<double(double)> ddv_, double mbar_,
                             double alpha_, double bigK_, double beta_, int poly_degree_)
    : v(std::move(v_)), dv(std::move(dv_)), ddv(std::move(ddv_)), mbar(mbar_),
      alpha(alpha_), bigK(bigK_), beta(beta_), poly_degree(poly_degree_) {
    if (!(mbar > 0)) throw PreconditionError("HardPotential: mbar must be positive");
    if (!(alpha > 0)) throw PreconditionError("HardPotential: alpha must be positive");
    if (!(bigK > 0)) throw PreconditionError("HardPotential: bigK must be positive");
    if (!(beta > 0)) throw PreconditionError("HardPotential: beta must be positive");
    if (!v || !dv || !ddv) throw PreconditionError("HardPotential: missing closure");
}

SoftPotential::SoftPotential(double omega0_, double a_, int p_)
    : omega0(omega0_), a(a_), p(p_) {
    if (!(omega0 > 0)) throw PreconditionError("SoftPotential: omega0 must be positive");
    if (!(a > 0)) throw PreconditionError("SoftPotential: a must be positive");
    if (p <= 1 || p % 2 == 0) throw PreconditionError("SoftPotential: p must be odd and > 1");
}

double SoftPotential::v(double x) const {
    return -0.5 * omega0 * omega0 * x * x + a / (p + 1) * std::pow(x, p + 1);
}

double SoftPotential::dv(double x) const {
    return -omega0 * omega0 * x + a * std::pow(x, p);
}

double SoftPotential::ddv(double x) const {
    return -omega0 * omega0 + a * p * std::pow(x, p - 1);
}

PotentialValues eval_potential(const Potential& pot, double x) {
    if (const auto* hp = std::get_if<HardPotential>(&pot))
        return {hp->v(x), hp->dv(x), hp->ddv(x)};
    const auto& sp = std::get<SoftPotential>(pot);
    return {sp.v(x), sp.dv(x), sp.ddv(x)};
}

double eval_dv(const Potential& pot, double x) {
    if (const auto* hp = std::get_if<HardPotential>(&pot)) return hp->dv(x);
    return std::get<SoftPotential>(pot).dv(x);
}

double eval_ddv(const Potential& pot, double x) {
    if (const auto* hp = std::get_if<HardPotential>(&pot)) return hp->ddv(x);
    return std::get<SoftPotential>(pot).ddv(x);
}

double ddv_at_zero(const Potential& pot) { return eval_ddv(pot, 0.0); }

int potential_degree(const Potential& pot) {
    if (const auto* hp = std::get_if<HardPotential>(&pot)) return hp->poly_degree;
    return std::get<SoftPotential>(pot).p + 1;
}

HardPotential hard_quartic(double g, double mbar, double alpha, double bigK, double beta) {
    return HardPotential([g](double x) { return 0.5 * x * x + 0.25 * g * x * x * x * x; },
                         [g](double x) { return x + g * x * x * x; },
                         [g](double x) { return 1.0 + 3.0 * g * x * x; },
                         mbar, alpha, bigK, beta, /*poly_degree=*/4);
}

namespace {

ValidationCheck worst_of(const std::string& name, double margin, double worst_x,
                         double pass_limit) {
    return {name, margin <= pass_limit, margin, worst_x};
}

}  // namespace

ValidationReport validate_hard_assumptions(const HardPotential& pot, double x_max,
                                           int samples, double x_min) {
    if (!(x_max > x_min && x_min > 0))
        throw PreconditionError("validate_hard_assumptions: need x_max > x_min > 0");
    if (samples < 2) throw PreconditionError("validate_hard_assumptions: samples >= 2");

    std::vector<double> xs;
    xs.reserve(2 * samples);
    for (int i = 0; i < samples; ++i) {
        double x = x_min + i * (x_max - x_min) / (samples - 1);
        xs.push_back(x);
        xs.push_back(-x);
    }

    ValidationReport rep;

    // pointwise values at the origin: V(0) = V'(0) = 0, V''(0) > 0
    double origin = std::max(std::abs(pot.v(0.0)), std::abs(pot.dv(0.0)));
    rep.checks.push_back(worst_of("origin_values", origin, 0.0, 1e-12));
    rep.checks.push_back({"origin_convexity", pot.ddv(0.0) > 0, pot.ddv(0.0), 0.0});

    double worst = 0, at = 0;
    for (double x : xs) {
        double d = std::abs(pot.v(x) - pot.v(-x));
        if (d > worst) { worst = d; at = x; }
    }
    rep.checks.push_back(worst_of("evenness", worst, at, 1e-12));

    worst = 0; at = 0;
    for (double x : xs) {
        double d = -pot.v(x);
        if (d > worst) { worst = d; at = x; }
    }
    rep.checks.push_back(worst_of("nonnegativity", worst, at, 1e-12));

    // growth bound |V''| <= mbar |x|^alpha, quotient form, away from 0
    worst = 0; at = 0;
    for (double x : xs) {
        double q = std::abs(pot.ddv(x)) / (pot.mbar * std::pow(std::abs(x), pot.alpha));
        if (q > worst) { worst = q; at = x; }
    }
    rep.checks.push_back(worst_of("growth_bound", worst, at, 1.0 + 1e-12));

    // two-point bound |V'(x1)-V'(x2)| <= bigK (|x1|^b + |x2|^b)|x1-x2|, also
    // restricted to |x| >= x_min: with V''(0) > 0 the quotient diverges at 0
    worst = 0; at = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        for (size_t j = i + 1; j < xs.size(); ++j) {
            double x1 = xs[i], x2 = xs[j];
            double denom = pot.bigK *
                           (std::pow(std::abs(x1), pot.beta) + std::pow(std::abs(x2), pot.beta)) *
                           std::abs(x1 - x2);
            double q = std::abs(pot.dv(x1) - pot.dv(x2)) / denom;
            if (q > worst) { worst = q; at = x1; }
        }
    }
    rep.checks.push_back(worst_of("two_point_bound", worst, at, 1.0 + 1e-12));

    rep.all_pass = true;
    for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

bool condition_as(const LatticeParams& lp, const WaveParams& wp) {
    return 4 * lp.kappa / (wp.c * wp.c) < lp.Omega * lp.Omega;
}

}  // namespace latwave
