#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "latwave/errors.hpp"
#include "latwave/thresholds.hpp"
#include "reference_values.hpp"

using namespace latwave;
namespace nums = std::numbers;

TEST_CASE("embedding constants: frozen values and L-scaling") {
    const EmbeddingConstants ec = embedding_constants(nums::pi);
    CHECK(ec.c_l == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ec.c_star == doctest::Approx(refvals::C_STAR_L_PI).epsilon(1e-15));
    CHECK(ec.c0_star == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ec.c2_star == doctest::Approx(refvals::C2_STAR_L_PI).epsilon(1e-15));
    CHECK(ec.c3_star == doctest::Approx(refvals::C3_STAR).epsilon(1e-15));

    CHECK(embedding_constants(2.0).c_star ==
          doctest::Approx(refvals::C_STAR_L_2).epsilon(1e-15));
    // the quotient c2*/c0* is scale-free
    CHECK(embedding_constants(5.0).c3_star ==
          doctest::Approx(refvals::C3_STAR).epsilon(1e-15));
    CHECK_THROWS_AS(embedding_constants(0.0), PreconditionError);
}

TEST_CASE("ring radii: frozen values in the empty-ring regime") {
    const LatticeParams lp(nums::pi, 6, 0.1);
    const WaveParams wp(1.0);
    const HardPotential hp = hard_quartic(1.0, 7.0, 1.0, /*bigK=*/1.0, /*beta=*/2.0);
    const RingBounds rb = ring_bounds(lp, wp, hp, embedding_constants(nums::pi));
    CHECK(rb.base == doctest::Approx(refvals::RING_BASE_LPI).epsilon(1e-14));
    CHECK(rb.r_max == doctest::Approx(refvals::R_MAX_LPI).epsilon(1e-14));
    CHECK(rb.r_crit == doctest::Approx(refvals::R_CRIT_LPI).epsilon(1e-14));
    CHECK_FALSE(rb.ring_nonempty);
    CHECK(rb.r_crit > rb.r_max);  // base < 1 inverts the radii order

    CHECK_THROWS_AS(
        ring_bounds(LatticeParams(nums::pi, 6, 0.5), wp, hp, embedding_constants(nums::pi)),
        InvalidRegimeError);
}

TEST_CASE("degenerate ring: base tuned to one collapses both radii") {
    const LatticeParams lp(nums::pi, 6, 0.1);
    const WaveParams wp(1.0);
    const double gap = 1.0 - 0.4;
    const double c3sq = std::pow(refvals::C3_STAR, 2);
    const HardPotential hp = hard_quartic(1.0, 7.0, 1.0, gap / c3sq, 2.0);
    const RingBounds rb = ring_bounds(lp, wp, hp, embedding_constants(nums::pi));
    CHECK(rb.base == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rb.r_max == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rb.r_crit == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("nonempty ring is equivalent to the strengthened frequency condition") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> uL(0.8, 10.0), uc(0.3, 4.0), uk(0.01, 1.5),
        uK(0.2, 5.0);
    int nonempty_seen = 0;
    for (int t = 0; t < 10000; ++t) {
        const double L = uL(rng), c = uc(rng), kappa = uk(rng), K = uK(rng);
        const LatticeParams lp(L, 4, kappa);
        const WaveParams wp(c);
        const double Om2 = lp.Omega * lp.Omega;
        if (!(c * c * Om2 - 4 * kappa > 0)) continue;
        const HardPotential hp = hard_quartic(1.0, 7.0, 1.0, K, 2.0);
        const RingBounds rb = ring_bounds(lp, wp, hp, embedding_constants(L));
        const bool as1 =
            Om2 > (4 * kappa + K * std::pow(refvals::C3_STAR, 2.0)) / (c * c);
        CHECK(rb.ring_nonempty == as1);
        CHECK(rb.ring_nonempty == (rb.r_crit < rb.r_max));
        if (rb.ring_nonempty) ++nonempty_seen;
    }
    CHECK(nonempty_seen > 100);  // both branches exercised
}

TEST_CASE("energy threshold and its compatibility variant") {
    CHECK(energy_threshold(refvals::R_CRIT_LPI) ==
          doctest::Approx(refvals::E_CRIT_LPI).epsilon(1e-14));
    CHECK(energy_threshold(refvals::R_CRIT_LPI, /*printed=*/true) ==
          doctest::Approx(refvals::E_CRIT_LPI_PRINTED).epsilon(1e-14));
    CHECK(energy_threshold(1.0) == doctest::Approx(0.5));
    CHECK(energy_threshold(0.0) == doctest::Approx(0.0));
    // monotone increasing
    double prev = -1;
    for (double r : {0.1, 0.5, 1.0, 2.0, 7.0}) {
        const double e = energy_threshold(r);
        CHECK(e > prev);
        prev = e;
    }
}

TEST_CASE("hard contraction constant") {
    const LatticeParams lp(nums::pi, 6, 0.1);
    const WaveParams wp(1.0);
    const HardPotential hp = hard_quartic(1.0, 7.0, 1.0, 1.0, 2.0);
    CHECK(contraction_constant_hard(lp, wp, hp, 1.0, embedding_constants(nums::pi)) ==
          doctest::Approx(refvals::M_HARD_LPI_R1).epsilon(1e-14));
    CHECK_THROWS_AS(contraction_constant_hard(lp, wp, hp, 0.0, embedding_constants(nums::pi)),
                    PreconditionError);
}

TEST_CASE("velocity upper bound: frozen values, plain and printed") {
    const HardPotential hp = hard_quartic(1.0, 7.0, 1.0, 1.0, 2.0);
    CHECK(velocity_upper_bound(LatticeParams(nums::pi, 6, 0.5), hp, 1.0,
                               embedding_constants(nums::pi)) ==
          doctest::Approx(refvals::C2_MAX_LPI).epsilon(1e-14));
    CHECK(velocity_upper_bound(LatticeParams(2.0, 4, 0.5), hp, 1.0,
                               embedding_constants(2.0)) ==
          doctest::Approx(refvals::C2_MAX_L2_PLAIN).epsilon(1e-14));
    CHECK(velocity_upper_bound(LatticeParams(2.0, 4, 0.5), hp, 1.0,
                               embedding_constants(2.0), /*printed=*/true) ==
          doctest::Approx(refvals::C2_MAX_L2_PRINTED).epsilon(1e-14));
}

TEST_CASE("double-well thresholds: critical speed, kinetic threshold, contraction") {
    const SoftPotential sp(1.0, 1.0, 3);
    {
        const LatticeParams lp(nums::pi, 6, 0.5);
        const SoftThresholds st =
            soft_thresholds(lp, WaveParams(2.0), sp, embedding_constants(nums::pi), 1.0);
        CHECK(st.c_crit == doctest::Approx(refvals::C_CRIT_LPI_K05_W1).epsilon(1e-14));
        CHECK(st.t_thresh == doctest::Approx(refvals::T_THRESH_LPI_C2).epsilon(1e-14));
        CHECK(st.m_soft == doctest::Approx(refvals::M_SOFT_LPI_C2_R1).epsilon(1e-14));
    }
    {
        // below the critical speed the kinetic threshold degenerates to zero
        const LatticeParams lp(nums::pi, 6, 0.5);
        const SoftThresholds st =
            soft_thresholds(lp, WaveParams(1.2), sp, embedding_constants(nums::pi), 1.0);
        CHECK(st.t_thresh == 0.0);
    }
    CHECK(soft_thresholds(LatticeParams(8.0, 16, 0.1), WaveParams(1.2), sp,
                          embedding_constants(8.0), 1.0)
              .c_crit == doctest::Approx(refvals::C_CRIT_L8_K01_W1).epsilon(1e-14));
}

TEST_CASE("kinetic-energy check: applicable above c_crit, vacuous below") {
    const SoftPotential sp(1.0, 1.0, 3);
    const LatticeParams lp(nums::pi, 6, 0.5);
    const FourierProfile Q = single_mode(nums::pi, 1, 1.0);  // 2T = pi
    {
        const KineticCheck kc =
            kinetic_threshold_check(Q, lp, WaveParams(2.0), sp, embedding_constants(nums::pi));
        CHECK(kc.applicable);
        CHECK(kc.t_kinetic == doctest::Approx(refvals::KINETIC_T_SIN_LPI).epsilon(1e-14));
        CHECK(kc.holds);  // 0.2026 < pi
    }
    {
        const KineticCheck kc =
            kinetic_threshold_check(Q, lp, WaveParams(1.0), sp, embedding_constants(nums::pi));
        CHECK_FALSE(kc.applicable);
        CHECK(kc.holds);
    }
}

TEST_CASE("threshold report: field presence tracks the potential family and regime") {
    const double pi = nums::pi;
    {
        // hard, invertible regime: ring block present
        const ThresholdReport tr =
            threshold_report(LatticeParams(pi, 6, 0.1), WaveParams(1.0),
                             Potential{hard_quartic(1.0, 7.0, 1.0, 1.0, 2.0)}, 1.0);
        CHECK(tr.condition_as);
        REQUIRE(tr.base.has_value());
        CHECK(*tr.r_max == doctest::Approx(refvals::R_MAX_LPI).epsilon(1e-14));
        CHECK(*tr.e_crit == doctest::Approx(refvals::E_CRIT_LPI).epsilon(1e-14));
        CHECK(tr.ring_nonempty.has_value());
        CHECK(tr.contraction_m.has_value());
        CHECK(tr.velocity_bound_c2.has_value());
        CHECK_FALSE(tr.c_crit.has_value());
    }
    {
        // hard, outside the regime: ring block absent, Lipschitz data still present
        const ThresholdReport tr =
            threshold_report(LatticeParams(pi, 6, 0.5), WaveParams(1.0),
                             Potential{hard_quartic()}, 1.0);
        CHECK_FALSE(tr.condition_as);
        CHECK_FALSE(tr.base.has_value());
        CHECK_FALSE(tr.e_crit.has_value());
        CHECK(tr.contraction_m.has_value());
        CHECK(tr.velocity_bound_c2.has_value());
    }
    {
        // soft: only the double-well block
        const ThresholdReport tr = threshold_report(
            LatticeParams(pi, 6, 0.5), WaveParams(2.0), Potential{SoftPotential(1, 1, 3)}, 1.0);
        CHECK(tr.condition_as);
        CHECK_FALSE(tr.base.has_value());
        REQUIRE(tr.c_crit.has_value());
        CHECK(*tr.c_crit == doctest::Approx(refvals::C_CRIT_LPI_K05_W1).epsilon(1e-14));
        CHECK(tr.t_thresh.has_value());
        CHECK(tr.m_soft.has_value());
    }
    {
        // printed variants propagate
        const ThresholdReport tr =
            threshold_report(LatticeParams(pi, 6, 0.1), WaveParams(1.0),
                             Potential{hard_quartic(1.0, 7.0, 1.0, 1.0, 2.0)}, 1.0,
                             /*printed=*/true);
        CHECK(*tr.e_crit == doctest::Approx(refvals::E_CRIT_LPI_PRINTED).epsilon(1e-14));
    }
}

TEST_CASE("ring radii grow without bound in the velocity") {
    const LatticeParams lp(nums::pi, 6, 0.1);
    const HardPotential hp = hard_quartic(1.0, 7.0, 1.0, 1.0, 2.0);
    const EmbeddingConstants ec = embedding_constants(nums::pi);
    double prev_max = 0, prev_crit = 0;
    for (double c : {1.0, 2.0, 4.0, 8.0, 16.0}) {
        const RingBounds rb = ring_bounds(lp, WaveParams(c), hp, ec);
        CHECK(rb.r_max > prev_max);
        CHECK(rb.r_crit > prev_crit);
        prev_max = rb.r_max;
        prev_crit = rb.r_crit;
    }
    const RingBounds far = ring_bounds(lp, WaveParams(1e10), hp, ec);
    CHECK(far.r_max > 1e6);
    CHECK(far.r_crit > 1e6);
}
