#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "latwave/errors.hpp"
#include "latwave/functionals.hpp"
#include "reference_values.hpp"

using namespace latwave;
namespace nums = std::numbers;

namespace {

HardPotential linear_well() {
    // V = x^2/2: makes the advance-delay residual exactly linear in Q
    return HardPotential([](double x) { return 0.5 * x * x; },
                         [](double x) { return x; }, [](double) { return 1.0; },
                         /*mbar=*/1, /*alpha=*/1, /*bigK=*/1, /*beta=*/1,
                         /*poly_degree=*/2);
}

FourierProfile random_odd(double L, int kmax, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    FourierProfile p(L, kmax);
    for (int k = 1; k <= kmax; ++k)
        p.coef[k - 1] = {0.0, u(rng) / (1.0 + 0.4 * k * k)};
    return p;
}

}  // namespace

TEST_CASE("residual of a single mode under a linear on-site force") {
    // r = (c^2 nu_1 + 1) sin z; |r|_l2 = |c^2 nu_1 + 1| / sqrt(2)
    const LatticeParams lp(nums::pi, 6, 0.2);
    const WaveParams wp(1.3);
    const Potential pot{linear_well()};
    const ResidualInfo ri = advance_delay_residual(single_mode(nums::pi, 1, 1.0), lp, wp, pot);
    CHECK(ri.l2 == doctest::Approx(refvals::RES_L2_LINEAR_MODE).epsilon(1e-13));
    // the residual profile is odd: purely imaginary coefficients
    for (const auto& c : ri.residual.coef) CHECK(c.real() == 0.0);
}

TEST_CASE("residual is invariant under the quadrature grid refinement") {
    std::mt19937 rng(5);
    const LatticeParams lp(4.0, 8, 0.15);
    const WaveParams wp(1.1);
    const Potential pot{hard_quartic()};
    const FourierProfile Q = random_odd(4.0, 12, rng);

    const ResidualInfo coarse = advance_delay_residual(Q, lp, wp, pot);
    // same computation with a much denser quadrature: dealiasing was already exact
    GridFunction g = synthesize(Q, 512);
    for (auto& v : g.values) v = eval_dv(pot, v);
    FourierProfile r = analyze(g, 12);
    for (int k = 1; k <= 12; ++k)
        r.coef[k - 1] += wp.c * wp.c * nu(k, lp, wp) * Q.coef[k - 1];
    r = project_odd(r);
    double worst = 0;
    for (int k = 1; k <= 12; ++k)
        worst = std::max(worst, std::abs(r.coef[k - 1] - coarse.residual.coef[k - 1]));
    CHECK(worst < 1e-13);
}

TEST_CASE("wave energy of a small mode approaches its quadratic form") {
    const LatticeParams lp(nums::pi, 6, 0.1);
    const WaveParams wp(1.5);
    const Potential pot{hard_quartic()};
    const double eps = 1e-6;
    const FunctionalBreakdown e = wave_energy(single_mode(nums::pi, 1, eps), lp, wp, pot);
    CHECK(e.value / (eps * eps) ==
          doctest::Approx(refvals::ENERGY_QUADRATIC_LIMIT).epsilon(1e-9));
    // component closed forms at quadratic order
    CHECK(e.kinetic / (eps * eps) == doctest::Approx(nums::pi * 1.125).epsilon(1e-9));
    CHECK(e.onsite / (eps * eps) == doctest::Approx(nums::pi * 0.5).epsilon(1e-9));
    CHECK(e.coupling / (eps * eps) ==
          doctest::Approx(nums::pi * 0.2 * std::pow(std::sin(0.5), 2)).epsilon(1e-9));
    CHECK(e.value == doctest::Approx(e.kinetic + e.onsite + e.coupling));
}

TEST_CASE("wave energy at finite amplitude includes the quartic term") {
    // E(A sin z) = pi [ (c^2/2) A^2 + A^2/2 + (3/16) A^4 + 2 kappa A^2 sin^2(1/2) ]
    const LatticeParams lp(nums::pi, 6, 0.1);
    const WaveParams wp(1.5);
    const double A = 0.9;
    const FunctionalBreakdown e = wave_energy(single_mode(nums::pi, 1, A), lp, wp,
                                              Potential{hard_quartic()});
    const double expect =
        nums::pi * (1.125 * A * A + 0.5 * A * A + 3.0 / 16 * A * A * A * A +
                    0.2 * A * A * std::pow(std::sin(0.5), 2));
    CHECK(e.value == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("action of the unit mode matches the frozen value") {
    const LatticeParams lp(nums::pi, 6, 0.5);
    const WaveParams wp(2.0);
    const SoftPotential sp(1.0, 1.0, 3);
    const FunctionalBreakdown s = soft_action(single_mode(nums::pi, 1, 1.0), lp, wp, sp);
    CHECK(s.value == doctest::Approx(refvals::ACTION_UNIT_MODE_SOFT).epsilon(1e-13));
    CHECK(s.kinetic == doctest::Approx(2 * nums::pi).epsilon(1e-13));
    CHECK(s.coupling < 0);  // the lattice coupling enters the action negatively
}

TEST_CASE("gradient representer matches central differences of the action") {
    std::mt19937 rng(17);
    const LatticeParams lp(8.0, 16, 0.1);
    const WaveParams wp(1.2);
    const SoftPotential sp(1.0, 1.0, 3);
    const double eps = 1e-5;
    for (int trial = 0; trial < 8; ++trial) {
        const FourierProfile Q = random_odd(8.0, 12, rng);
        const FourierProfile P = random_odd(8.0, 12, rng);
        const FourierProfile g = soft_action_gradient(Q, lp, wp, sp);
        const double lhs = inner_product(g, P);

        FourierProfile Qp = Q, Qm = Q;
        for (int k = 0; k < 12; ++k) {
            Qp.coef[k] += eps * P.coef[k];
            Qm.coef[k] -= eps * P.coef[k];
        }
        const double rhs = (soft_action(Qp, lp, wp, sp).value -
                            soft_action(Qm, lp, wp, sp).value) /
                           (2 * eps);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
    }
}

TEST_CASE("double-well residual is the negated action gradient") {
    std::mt19937 rng(29);
    const LatticeParams lp(8.0, 16, 0.3);
    const WaveParams wp(1.7);
    const SoftPotential sp(1.2, 0.8, 3);
    const FourierProfile Q = random_odd(8.0, 10, rng);
    const FourierProfile g = soft_action_gradient(Q, lp, wp, sp);
    const ResidualInfo ri = advance_delay_residual(Q, lp, wp, Potential{sp});
    double worst = 0;
    for (int k = 1; k <= 10; ++k)
        worst = std::max(worst, std::abs(ri.residual.coef[k - 1] + g.coef[k - 1]));
    CHECK(worst < 1e-12);
}

TEST_CASE("average kinetic energy") {
    CHECK(kinetic_energy(single_mode(nums::pi, 1, 1.0)) ==
          doctest::Approx(refvals::KINETIC_T_SIN_LPI).epsilon(1e-14));
    // scales with (k Omega)^2
    CHECK(kinetic_energy(single_mode(nums::pi, 3, 1.0)) ==
          doctest::Approx(9 * refvals::KINETIC_T_SIN_LPI).epsilon(1e-14));
}

TEST_CASE("lattice Hamiltonian bookkeeping") {
    const LatticeParams lp(2.0, 4, 0.5);
    const Potential pot{hard_quartic()};
    const std::vector<double> q{0.1, -0.2, 0.0, 0.3}, p{1.0, 0.0, -0.5, 0.25};
    double expect = 0;
    for (int n = 0; n < 4; ++n) {
        const double dq = q[(n + 1) % 4] - q[n];
        expect += 0.5 * p[n] * p[n] + 0.5 * q[n] * q[n] + 0.25 * std::pow(q[n], 4) +
                  0.25 * dq * dq;
    }
    CHECK(lattice_hamiltonian(q, p, lp, pot) == doctest::Approx(expect).epsilon(1e-15));
    CHECK_THROWS_AS(lattice_hamiltonian(q, {1.0}, lp, pot), PreconditionError);
}
