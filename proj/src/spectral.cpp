#include "latwave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "latwave/errors.hpp"

namespace latwave {

FourierProfile::FourierProfile(double L_, int kmax_) : L(L_), coef(kmax_) {
    if (!(L > 0)) throw PreconditionError("FourierProfile: L must be positive");
    if (kmax_ < 1) throw PreconditionError("FourierProfile: kmax must be >= 1");
}

double FourierProfile::eval(double z) const {
    const double Om = std::numbers::pi / L;
    double s = 0;
    for (int k = 1; k <= kmax(); ++k) {
        const double th = Om * k * z;
        s += 2 * (coef[k - 1].real() * std::cos(th) - coef[k - 1].imag() * std::sin(th));
    }
    return s;
}

double FourierProfile::eval_derivative(double z) const {
    const double Om = std::numbers::pi / L;
    double s = 0;
    for (int k = 1; k <= kmax(); ++k) {
        const double th = Om * k * z, w = Om * k;
        s += 2 * w * (-coef[k - 1].real() * std::sin(th) - coef[k - 1].imag() * std::cos(th));
    }
    return s;
}

FourierProfile single_mode(double L, int k, double amplitude) {
    FourierProfile prof(L, k);
    // A sin(k Omega z) = -(i A/2) e^{i k Omega z} + c.c.
    prof.coef[k - 1] = {0.0, -0.5 * amplitude};
    return prof;
}

TrigTransform::TrigTransform(double L, int kmax, int m_grid)
    : L_(L), kmax_(kmax), m_(m_grid) {
    if (m_ < 2 * kmax_ + 2)
        throw AliasingError("grid of " + std::to_string(m_) + " samples cannot carry " +
                            std::to_string(kmax_) + " modes (need >= 2*kmax + 2)");
    const double Om = std::numbers::pi / L_;
    cos_.resize(static_cast<size_t>(kmax_) * m_);
    sin_.resize(static_cast<size_t>(kmax_) * m_);
    for (int k = 1; k <= kmax_; ++k) {
        for (int j = 0; j < m_; ++j) {
            const double z = -L_ + j * (2 * L_ / m_);
            cos_[static_cast<size_t>(k - 1) * m_ + j] = std::cos(Om * k * z);
            sin_[static_cast<size_t>(k - 1) * m_ + j] = std::sin(Om * k * z);
        }
    }
}

void TrigTransform::synthesize(const std::vector<std::complex<double>>& coef,
                               std::vector<double>& values) const {
    values.assign(m_, 0.0);
    const int K = std::min<int>(kmax_, static_cast<int>(coef.size()));
    for (int k = 1; k <= K; ++k) {
        const double re = coef[k - 1].real(), im = coef[k - 1].imag();
        const double* c = &cos_[static_cast<size_t>(k - 1) * m_];
        const double* s = &sin_[static_cast<size_t>(k - 1) * m_];
        for (int j = 0; j < m_; ++j) values[j] += 2 * (re * c[j] - im * s[j]);
    }
}

void TrigTransform::analyze(const std::vector<double>& values,
                            std::vector<std::complex<double>>& coef) const {
    coef.assign(kmax_, {0.0, 0.0});
    for (int k = 1; k <= kmax_; ++k) {
        const double* c = &cos_[static_cast<size_t>(k - 1) * m_];
        const double* s = &sin_[static_cast<size_t>(k - 1) * m_];
        double re = 0, im = 0;
        for (int j = 0; j < m_; ++j) {
            re += values[j] * c[j];
            im -= values[j] * s[j];
        }
        coef[k - 1] = {re / m_, im / m_};
    }
}

int dealias_grid(int kmax, int degree) {
    int m = degree <= 0 ? 4 * kmax : degree * kmax + 2;
    m = std::max(m, 2 * kmax + 2);
    if (m % 2) ++m;
    return m;
}

GridFunction synthesize(const FourierProfile& prof, int m_grid) {
    TrigTransform tt(prof.L, prof.kmax(), m_grid);
    GridFunction g;
    g.L = prof.L;
    tt.synthesize(prof.coef, g.values);
    return g;
}

FourierProfile analyze(const GridFunction& grid, int kmax) {
    TrigTransform tt(grid.L, kmax, grid.size());
    FourierProfile prof(grid.L, kmax);
    tt.analyze(grid.values, prof.coef);
    return prof;
}

FourierProfile shift(const FourierProfile& prof, double delta) {
    const double Om = std::numbers::pi / prof.L;
    FourierProfile out = prof;
    for (int k = 1; k <= prof.kmax(); ++k)
        out.coef[k - 1] *= std::polar(1.0, Om * k * delta);
    return out;
}

FourierProfile second_derivative(const FourierProfile& prof) {
    const double Om = std::numbers::pi / prof.L;
    FourierProfile out = prof;
    for (int k = 1; k <= prof.kmax(); ++k) out.coef[k - 1] *= -(Om * k) * (Om * k);
    return out;
}

FourierProfile project_odd(const FourierProfile& prof) {
    FourierProfile out = prof;
    for (auto& c : out.coef) c = {0.0, c.imag()};
    return out;
}

double nu(int k, const LatticeParams& lp, const WaveParams& wp) {
    if (k == 0) throw PreconditionError("nu: k must be nonzero");
    const double w = lp.Omega * k;
    const double s = std::sin(lp.Omega * k / 2);
    return -w * w + 4 * lp.kappa / (wp.c * wp.c) * s * s;
}

FourierProfile apply_wave_operator(const FourierProfile& prof, const LatticeParams& lp,
                                   const WaveParams& wp) {
    FourierProfile out = prof;
    for (int k = 1; k <= prof.kmax(); ++k) out.coef[k - 1] *= nu(k, lp, wp);
    return out;
}

FourierProfile apply_wave_operator_inverse(const FourierProfile& prof,
                                           const LatticeParams& lp, const WaveParams& wp) {
    const double floor_ = 1e-8 * lp.Omega * lp.Omega;
    FourierProfile out = prof;
    for (int k = 1; k <= prof.kmax(); ++k) {
        const double nk = nu(k, lp, wp);
        if (std::abs(nk) < floor_)
            throw SingularOperatorError("wave operator near-singular on mode " +
                                        std::to_string(k));
        out.coef[k - 1] /= nk;
    }
    return out;
}

InverseNormBounds wave_operator_inverse_norm(const LatticeParams& lp, const WaveParams& wp,
                                             int kmax) {
    if (!condition_as(lp, wp))
        throw SingularOperatorError(
            "inverse-norm bounds require 4 kappa/c^2 < Omega^2");
    const double Om2 = lp.Omega * lp.Omega;
    const double c2 = wp.c * wp.c;
    InverseNormBounds b{};
    b.bound_h2 = Om2 / (Om2 - 4 * lp.kappa / c2);
    b.bound_l2 = c2 / (c2 * Om2 - 4 * lp.kappa);
    b.exact_sup = 0;
    for (int k = 1; k <= kmax; ++k) {
        const double w2 = Om2 * k * k;
        b.exact_sup = std::max(b.exact_sup, w2 / std::abs(nu(k, lp, wp)));
    }
    return b;
}

ProfileNorms norms(const FourierProfile& prof) {
    const double Om = std::numbers::pi / prof.L;
    double l2 = 0, h1 = 0, h2 = 0;
    for (int k = 1; k <= prof.kmax(); ++k) {
        const double a2 = std::norm(prof.coef[k - 1]);
        const double w2 = (Om * k) * (Om * k);
        l2 += 2 * a2;
        h1 += 2 * w2 * a2;
        h2 += 2 * w2 * w2 * a2;
    }
    ProfileNorms out{std::sqrt(l2), std::sqrt(h1), std::sqrt(h2), 0.0};
    const int m = std::max(1024, 8 * prof.kmax());
    TrigTransform tt(prof.L, prof.kmax(), m);
    std::vector<double> vals;
    tt.synthesize(prof.coef, vals);
    for (double v : vals) out.linf = std::max(out.linf, std::abs(v));
    return out;
}

double norm_l2(const FourierProfile& prof) {
    double l2 = 0;
    for (const auto& c : prof.coef) l2 += 2 * std::norm(c);
    return std::sqrt(l2);
}

double inner_product(const FourierProfile& a, const FourierProfile& b) {
    if (a.L != b.L) throw PreconditionError("inner_product: mismatched periods");
    const int K = std::min(a.kmax(), b.kmax());
    double s = 0;
    for (int k = 1; k <= K; ++k)
        s += 2 * (a.coef[k - 1].real() * b.coef[k - 1].real() +
                  a.coef[k - 1].imag() * b.coef[k - 1].imag());
    return 2 * a.L * s;
}

std::string to_text(const FourierProfile& prof) {
    char buf[128];
    std::string out;
    std::snprintf(buf, sizeof buf, "%.17g %d\n", prof.L, prof.kmax());
    out += buf;
    for (int k = 1; k <= prof.kmax(); ++k) {
        std::snprintf(buf, sizeof buf, "%d %.17g %.17g\n", k, prof.coef[k - 1].real(),
                      prof.coef[k - 1].imag());
        out += buf;
    }
    return out;
}

FourierProfile profile_from_text(const std::string& text) {
    std::istringstream in(text);
    double L;
    int kmax;
    if (!(in >> L >> kmax) || !(L > 0) || kmax < 1)
        throw PreconditionError("profile_from_text: malformed header");
    FourierProfile prof(L, kmax);
    std::vector<bool> seen(kmax, false);
    for (int i = 0; i < kmax; ++i) {
        int k;
        double re, im;
        if (!(in >> k >> re >> im))
            throw PreconditionError("profile_from_text: truncated coefficient list");
        if (k < 1 || k > kmax || seen[k - 1])
            throw PreconditionError("profile_from_text: bad mode index " + std::to_string(k));
        seen[k - 1] = true;
        prof.coef[k - 1] = {re, im};
    }
    return prof;
}

}  // namespace latwave
