#include "latwave/thresholds.hpp"

#include <cmath>
#include <numbers>

#include "latwave/errors.hpp"
#include "latwave/functionals.hpp"

namespace latwave {

EmbeddingConstants embedding_constants(double L) {
    if (!(L > 0)) throw PreconditionError("embedding_constants: L must be positive");
    const double pi = std::numbers::pi;
    const double Om = pi / L;
    EmbeddingConstants ec{};
    ec.c_l = L * L / (pi * pi);
    ec.c_star = pi / std::sqrt(3.0) / Om;            // sqrt(2 zeta(2)) / Omega
    ec.c0_star = 1.0 / (Om * Om);
    ec.c2_star = pi * pi / std::sqrt(45.0) / (Om * Om);  // sqrt(2 zeta(4)) / Omega^2
    ec.c3_star = ec.c2_star / ec.c0_star;
    return ec;
}

RingBounds ring_bounds(const LatticeParams& lp, const WaveParams& wp,
                       const HardPotential& hp, const EmbeddingConstants& ec) {
    const double gap = wp.c * wp.c * lp.Omega * lp.Omega - 4 * lp.kappa;
    if (!(gap > 0))
        throw InvalidRegimeError("ring bounds need c^2 Omega^2 - 4 kappa > 0");
    RingBounds rb{};
    rb.base = gap / (hp.bigK * std::pow(ec.c3_star, hp.beta));
    rb.r_max = std::pow(rb.base, 1.0 / hp.beta);
    rb.r_crit = std::pow(rb.base, 1.0 / (1.0 + hp.beta));
    rb.ring_nonempty = rb.base > 1.0;
    return rb;
}

double energy_threshold(double r_crit, bool printed) {
    if (!(r_crit >= 0)) throw PreconditionError("energy_threshold: r_crit must be >= 0");
    return printed ? std::sqrt(2 * r_crit) : 0.5 * r_crit * r_crit;
}

double contraction_constant_hard(const LatticeParams& lp, const WaveParams& wp,
                                 const HardPotential& hp, double R,
                                 const EmbeddingConstants& ec) {
    if (!(R > 0)) throw PreconditionError("contraction_constant_hard: R must be positive");
    return 2.0 / (wp.c * wp.c) * (lp.kappa + hp.bigK * ec.c_star * std::pow(R, hp.beta));
}

double velocity_upper_bound(const LatticeParams& lp, const HardPotential& hp, double R,
                            const EmbeddingConstants& ec, bool printed) {
    if (!(R > 0)) throw PreconditionError("velocity_upper_bound: R must be positive");
    const double factor = printed ? ec.c_l : std::sqrt(ec.c_l);
    return 2.0 * (lp.kappa + hp.bigK * ec.c_star * std::pow(R, hp.beta)) * factor;
}

SoftThresholds soft_thresholds(const LatticeParams& lp, const WaveParams& wp,
                               const SoftPotential& sp, const EmbeddingConstants& ec,
                               double R) {
    SoftThresholds st{};
    const double w02 = sp.omega0 * sp.omega0;
    const double ccrit2 = std::sqrt(ec.c_l) * (2 * lp.kappa + ec.c_l * w02);
    st.c_crit = std::sqrt(ccrit2);
    const double c2 = wp.c * wp.c;
    if (c2 > ccrit2) {
        const double e = 2.0 / (sp.p - 1);
        st.t_thresh = std::pow((c2 - ccrit2) / ec.c_l, e) *
                      std::pow(1.0 / (sp.p * sp.a * std::pow(ec.c_star, sp.p - 1)), e);
    } else {
        st.t_thresh = 0.0;
    }
    st.m_soft = (2 * lp.kappa + ec.c_l * w02 +
                 sp.p * std::sqrt(ec.c_l) * sp.a * std::pow(ec.c_star, sp.p - 1) *
                     std::pow(R, sp.p - 1)) /
                c2;
    return st;
}

KineticCheck kinetic_threshold_check(const FourierProfile& Q, const LatticeParams& lp,
                                     const WaveParams& wp, const SoftPotential& sp,
                                     const EmbeddingConstants& ec) {
    const SoftThresholds st = soft_thresholds(lp, wp, sp, ec);
    KineticCheck kc{};
    kc.t_thresh = st.t_thresh;
    kc.t_kinetic = kinetic_energy(Q);
    kc.applicable = wp.c > st.c_crit;
    kc.holds = kc.applicable ? (st.t_thresh < 2 * kc.t_kinetic) : true;
    return kc;
}

ThresholdReport threshold_report(const LatticeParams& lp, const WaveParams& wp,
                                 const Potential& pot, double R, bool printed) {
    ThresholdReport tr;
    tr.condition_as = condition_as(lp, wp);
    const EmbeddingConstants ec = embedding_constants(lp.L);
    if (const auto* hp = std::get_if<HardPotential>(&pot)) {
        const double gap = wp.c * wp.c * lp.Omega * lp.Omega - 4 * lp.kappa;
        if (gap > 0) {
            const RingBounds rb = ring_bounds(lp, wp, *hp, ec);
            tr.base = rb.base;
            tr.r_max = rb.r_max;
            tr.r_crit = rb.r_crit;
            tr.ring_nonempty = rb.ring_nonempty;
            tr.e_crit = energy_threshold(rb.r_crit, printed);
        }
        tr.contraction_m = contraction_constant_hard(lp, wp, *hp, R, ec);
        tr.velocity_bound_c2 = velocity_upper_bound(lp, *hp, R, ec, printed);
    } else {
        const auto& sp = std::get<SoftPotential>(pot);
        const SoftThresholds st = soft_thresholds(lp, wp, sp, ec, R);
        tr.c_crit = st.c_crit;
        tr.t_thresh = st.t_thresh;
        tr.m_soft = st.m_soft;
    }
    return tr;
}

}  // namespace latwave
