#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "latwave/dynamics.hpp"
#include "latwave/errors.hpp"
#include "latwave/functionals.hpp"
#include "reference_values.hpp"

using namespace latwave;
namespace nums = std::numbers;

namespace {

HardPotential linear_well() {
    return HardPotential([](double x) { return 0.5 * x * x; }, [](double x) { return x; },
                         [](double) { return 1.0; }, 1.0, 1.0, 1.0, 1.0, 2);
}

// inverted parabola: every displacement grows exponentially
HardPotential unstable_well() {
    return HardPotential([](double x) { return -0.5 * x * x; }, [](double x) { return -x; },
                         [](double) { return -1.0; }, 1.0, 1.0, 1.0, 1.0, 2);
}

}  // namespace

TEST_CASE("travelling-wave initial data is the sampled profile") {
    const double L = 8;
    const LatticeParams lp(L, 16, 0.1);
    const WaveParams wp(1.5);
    const double Om = nums::pi / L;
    const FourierProfile prof = single_mode(L, 1, 1.0);  // sin(Omega z)
    const LatticeState s = init_from_profile(prof, lp, wp, 0.0);
    REQUIRE(s.q.size() == 16);
    REQUIRE(s.p.size() == 16);
    CHECK(s.t == 0.0);
    for (int n = 0; n < 16; ++n) {
        CHECK(s.q[n] == doctest::Approx(std::sin(Om * n)).epsilon(1e-13));
        CHECK(s.p[n] == doctest::Approx(-1.5 * Om * std::cos(Om * n)).epsilon(1e-13));
    }
    // shifted start time
    const LatticeState s2 = init_from_profile(prof, lp, wp, 0.7);
    CHECK(s2.q[3] == doctest::Approx(std::sin(Om * (3 - 1.5 * 0.7))).epsilon(1e-13));
    CHECK(s2.t == 0.7);
}

TEST_CASE("initialization requires the lattice period to match the profile") {
    const FourierProfile prof = single_mode(8, 1, 1.0);
    CHECK_THROWS_AS(
        init_from_profile(prof, LatticeParams(8, 15, 0.1), WaveParams(1.5), 0.0),
        PreconditionError);
    // L = pi cannot be realized by an integer site count
    CHECK_THROWS_AS(init_from_profile(single_mode(nums::pi, 1, 1.0),
                                      LatticeParams(nums::pi, 6, 0.1), WaveParams(1.5), 0.0),
                    PreconditionError);
}

TEST_CASE("Verlet is time-reversible") {
    const LatticeParams lp(8, 16, 0.3);
    const Potential pot{hard_quartic()};
    LatticeState s = init_from_profile(single_mode(8, 1, 0.8), lp, WaveParams(1.2), 0.0);
    const std::vector<double> q0 = s.q, p0 = s.p;
    const double dt = 0.02;
    for (int i = 0; i < 200; ++i) s = step_verlet(s, lp, pot, dt);
    for (double& p : s.p) p = -p;  // reverse momenta
    for (int i = 0; i < 200; ++i) s = step_verlet(s, lp, pot, dt);
    for (int n = 0; n < 16; ++n) {
        CHECK(s.q[n] == doctest::Approx(q0[n]).epsilon(1e-10));
        CHECK(s.p[n] == doctest::Approx(-p0[n]).epsilon(1e-10));
    }
}

TEST_CASE("linear lattice: the exact travelling wave is reproduced to Verlet accuracy") {
    // with V' = x the mode-1 ansatz A sin(Omega(n - ct)) solves the lattice exactly
    // when c^2 = (1 + 4 kappa sin^2(Omega/2)) / Omega^2
    const double L = 8, kappa = 0.3;
    const LatticeParams lp(L, 16, kappa);
    const double Om = nums::pi / L;
    const double s = std::sin(Om / 2);
    const double c = std::sqrt((1 + 4 * kappa * s * s) / (Om * Om));
    const WaveParams wp(c);
    const Potential pot{linear_well()};
    const FourierProfile prof = single_mode(L, 1, 1.0);

    const LatticeState s0 = init_from_profile(prof, lp, wp, 0.0);
    const double transit = 2 * L / c;
    const IntegrationResult traj = integrate(s0, lp, pot, 1e-3, 2 * transit, 100);

    const TravellingCheck tc = verify_travelling(traj, prof, lp, wp, 1e-5);
    CHECK(tc.pass);
    CHECK(tc.max_dev < 1e-5);
    CHECK(tc.max_dev > 0);  // discretization leaves a measurable residue
    CHECK(std::abs(traj.h_drift) < 1e-10);
    CHECK(traj.h_osc < 1e-6);
    CHECK(traj.final_state.t == doctest::Approx(2 * transit));
}

TEST_CASE("energy bookkeeping over a nonlinear run") {
    const LatticeParams lp(8, 16, 0.2);
    const Potential pot{hard_quartic()};
    const LatticeState s0 = init_from_profile(single_mode(8, 1, 0.5), lp, WaveParams(1.2), 0.0);
    const IntegrationResult traj = integrate(s0, lp, pot, 1e-3, 20.0, 50);
    CHECK(traj.h_initial ==
          doctest::Approx(lattice_hamiltonian(s0.q, s0.p, lp, pot)).epsilon(1e-14));
    CHECK(traj.h_min <= traj.h_initial);
    CHECK(traj.h_max >= traj.h_initial);
    CHECK(traj.h_osc >= 0);
    CHECK(traj.h_osc < 1e-5);  // bounded oscillation, no secular growth
    // decile-mean drift carries a residue of the bounded oscillation, nothing secular
    CHECK(std::abs(traj.h_drift) < 5e-8);
    // snapshots cover start and end
    REQUIRE(traj.snapshots.size() >= 2);
    CHECK(traj.snapshots.front().t == 0.0);
    CHECK(traj.snapshots.back().t == doctest::Approx(20.0));
}

TEST_CASE("integration lands on T when T/dt is fractional") {
    const LatticeParams lp(8, 16, 0.1);
    const Potential pot{hard_quartic()};
    LatticeState s0;
    s0.q.assign(16, 0.0);
    s0.p.assign(16, 0.0);
    s0.q[4] = 0.1;
    const IntegrationResult traj = integrate(s0, lp, pot, 0.1, 0.35, 1);
    CHECK(traj.final_state.t == doctest::Approx(0.35).epsilon(1e-15));
    CHECK(traj.snapshots.back().t == doctest::Approx(0.35).epsilon(1e-15));
}

TEST_CASE("runaway orbits raise a blow-up error") {
    const LatticeParams lp(8, 16, 0.1);
    const Potential pot{unstable_well()};
    LatticeState s0;
    s0.q.assign(16, 0.0);
    s0.p.assign(16, 0.0);
    s0.q[0] = 1.0;
    CHECK_THROWS_AS(integrate(s0, lp, pot, 0.05, 100.0, 10), BlowupError);
}

TEST_CASE("dispersion relation value") {
    CHECK(std::sqrt(dispersion_omega2(nums::pi / 4, 0.25, 1.0)) ==
          doctest::Approx(refvals::DISPERSION_OMEGA_Q_PI4).epsilon(1e-14));
    CHECK(dispersion_omega2(0.0, 0.7, 2.0) == doctest::Approx(2.0));
}

TEST_CASE("cosine frequency fit recovers an exact tone") {
    const double omega = 1.37, dt = 0.05, phase = 0.4;
    std::vector<double> samples(400);
    for (int j = 0; j < 400; ++j) samples[j] = 3.0 * std::cos(omega * dt * j + phase);
    CHECK(fit_cosine_frequency(samples, dt) == doctest::Approx(omega).epsilon(1e-12));
    CHECK_THROWS_AS(fit_cosine_frequency({1.0, 2.0}, dt), PreconditionError);
}
