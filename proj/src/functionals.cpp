#include "latwave/functionals.hpp"

#include <cmath>
#include <numbers>

#include "latwave/errors.hpp"

namespace latwave {

namespace {

/** Quadrature grid sized so every polynomial integrand below is exact. */
int quad_grid(int kmax, const Potential& pot) {
    return dealias_grid(kmax, potential_degree(pot));
}

double ring_sum(const std::vector<double>& v, double L) {
    double s = 0;
    for (double x : v) s += x;
    return s * (2 * L / v.size());  // rectangle rule: spectrally exact on the period
}

}  // namespace

ResidualInfo advance_delay_residual(const FourierProfile& Q, const LatticeParams& lp,
                                    const WaveParams& wp, const Potential& pot) {
    const int K = Q.kmax();
    TrigTransform tt(Q.L, K, quad_grid(K, pot));
    std::vector<double> qg, wg(tt.m_grid());
    tt.synthesize(Q.coef, qg);
    for (int j = 0; j < tt.m_grid(); ++j) wg[j] = eval_dv(pot, qg[j]);

    FourierProfile r(Q.L, K);
    tt.analyze(wg, r.coef);
    const double c2 = wp.c * wp.c;
    for (int k = 1; k <= K; ++k) r.coef[k - 1] += c2 * nu(k, lp, wp) * Q.coef[k - 1];
    r = project_odd(r);

    ResidualInfo out{std::move(r), 0, 0};
    ProfileNorms n = norms(out.residual);
    out.l2 = n.l2;
    out.linf = n.linf;
    return out;
}

FunctionalBreakdown wave_energy(const FourierProfile& Q, const LatticeParams& lp,
                                const WaveParams& wp, const Potential& pot) {
    const int K = Q.kmax();
    TrigTransform tt(Q.L, K, quad_grid(K, pot));
    std::vector<double> qg, dg, sg;
    tt.synthesize(Q.coef, qg);
    tt.synthesize(shift(Q, 1.0).coef, sg);

    // derivative samples: synthesize i*Omega*k*qhat_k
    FourierProfile d1(Q.L, K);
    const double Om = lp.Omega;
    for (int k = 1; k <= K; ++k)
        d1.coef[k - 1] = std::complex<double>(0, Om * k) * Q.coef[k - 1];
    tt.synthesize(d1.coef, dg);

    const double c2 = wp.c * wp.c;
    std::vector<double> kin(tt.m_grid()), ons(tt.m_grid()), cpl(tt.m_grid());
    for (int j = 0; j < tt.m_grid(); ++j) {
        kin[j] = 0.5 * c2 * dg[j] * dg[j];
        ons[j] = eval_potential(pot, qg[j]).v;
        const double diff = sg[j] - qg[j];
        cpl[j] = 0.5 * lp.kappa * diff * diff;
    }
    FunctionalBreakdown out{};
    out.kinetic = ring_sum(kin, Q.L);
    out.onsite = ring_sum(ons, Q.L);
    out.coupling = ring_sum(cpl, Q.L);
    out.value = out.kinetic + out.onsite + out.coupling;
    return out;
}

FunctionalBreakdown soft_action(const FourierProfile& Q, const LatticeParams& lp,
                                const WaveParams& wp, const SoftPotential& sp) {
    const int K = Q.kmax();
    TrigTransform tt(Q.L, K, dealias_grid(K, sp.p + 1));
    std::vector<double> qg, dg, sg;
    tt.synthesize(Q.coef, qg);
    tt.synthesize(shift(Q, 1.0).coef, sg);
    FourierProfile d1(Q.L, K);
    for (int k = 1; k <= K; ++k)
        d1.coef[k - 1] = std::complex<double>(0, lp.Omega * k) * Q.coef[k - 1];
    tt.synthesize(d1.coef, dg);

    const double c2 = wp.c * wp.c;
    std::vector<double> kin(tt.m_grid()), ons(tt.m_grid()), cpl(tt.m_grid());
    for (int j = 0; j < tt.m_grid(); ++j) {
        kin[j] = 0.5 * c2 * dg[j] * dg[j];
        ons[j] = -sp.v(qg[j]);  // (omega0^2/2) q^2 - a/(p+1) q^(p+1)
        const double diff = sg[j] - qg[j];
        cpl[j] = -0.5 * lp.kappa * diff * diff;
    }
    FunctionalBreakdown out{};
    out.kinetic = ring_sum(kin, Q.L);
    out.onsite = ring_sum(ons, Q.L);
    out.coupling = ring_sum(cpl, Q.L);
    out.value = out.kinetic + out.onsite + out.coupling;
    return out;
}

FourierProfile soft_action_gradient(const FourierProfile& Q, const LatticeParams& lp,
                                    const WaveParams& wp, const SoftPotential& sp) {
    const int K = Q.kmax();
    TrigTransform tt(Q.L, K, dealias_grid(K, sp.p + 1));
    std::vector<double> qg, wg(tt.m_grid());
    tt.synthesize(Q.coef, qg);
    for (int j = 0; j < tt.m_grid(); ++j) wg[j] = std::pow(qg[j], sp.p);

    FourierProfile g(Q.L, K);
    tt.analyze(wg, g.coef);
    const double c2 = wp.c * wp.c, w02 = sp.omega0 * sp.omega0;
    for (int k = 1; k <= K; ++k) {
        const double w2 = (lp.Omega * k) * (lp.Omega * k);
        const double s = std::sin(lp.Omega * k / 2);
        const double lin = c2 * w2 + w02 - 4 * lp.kappa * s * s;
        g.coef[k - 1] = lin * Q.coef[k - 1] - sp.a * g.coef[k - 1];
    }
    return project_odd(g);
}

double kinetic_energy(const FourierProfile& Q) {
    const double Om = std::numbers::pi / Q.L;
    double h1sq = 0;
    for (int k = 1; k <= Q.kmax(); ++k)
        h1sq += 2 * (Om * k) * (Om * k) * std::norm(Q.coef[k - 1]);
    return Q.L * h1sq;
}

double lattice_hamiltonian(const std::vector<double>& q, const std::vector<double>& p,
                           const LatticeParams& lp, const Potential& pot) {
    if (q.size() != p.size() || static_cast<int>(q.size()) != lp.N)
        throw PreconditionError("lattice_hamiltonian: state size mismatch");
    double H = 0;
    for (int n = 0; n < lp.N; ++n) {
        const double dq = q[(n + 1) % lp.N] - q[n];
        H += 0.5 * p[n] * p[n] + eval_potential(pot, q[n]).v + 0.5 * lp.kappa * dq * dq;
    }
    return H;
}

}  // namespace latwave
