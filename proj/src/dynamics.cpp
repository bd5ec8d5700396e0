#include "latwave/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "latwave/errors.hpp"
#include "latwave/functionals.hpp"

namespace latwave {

LatticeState init_from_profile(const FourierProfile& prof, const LatticeParams& lp,
                               const WaveParams& wp, double t0) {
    if (std::abs(lp.N - 2 * prof.L) > 1e-9)
        throw PreconditionError("lattice size N must equal the profile period 2L for "
                                "commensurate travelling-wave initial data");
    LatticeState s;
    s.t = t0;
    s.q.resize(lp.N);
    s.p.resize(lp.N);
    for (int n = 0; n < lp.N; ++n) {
        const double z = n - wp.c * t0;
        s.q[n] = prof.eval(z);
        s.p[n] = -wp.c * prof.eval_derivative(z);
    }
    return s;
}

namespace {

void forces(const std::vector<double>& q, const LatticeParams& lp, const Potential& pot,
            std::vector<double>& f) {
    const int N = lp.N;
    f.resize(N);
    for (int n = 0; n < N; ++n) {
        const double qp = q[(n + 1) % N], qm = q[(n - 1 + N) % N];
        f[n] = lp.kappa * (qp - 2 * q[n] + qm) - eval_dv(pot, q[n]);
    }
}

}  // namespace

LatticeState step_verlet(const LatticeState& s, const LatticeParams& lp, const Potential& pot,
                         double dt) {
    LatticeState out = s;
    std::vector<double> f;
    forces(out.q, lp, pot, f);
    for (int n = 0; n < lp.N; ++n) out.p[n] += 0.5 * dt * f[n];
    for (int n = 0; n < lp.N; ++n) out.q[n] += dt * out.p[n];
    forces(out.q, lp, pot, f);
    for (int n = 0; n < lp.N; ++n) out.p[n] += 0.5 * dt * f[n];
    out.t += dt;
    return out;
}

IntegrationResult integrate(const LatticeState& s0, const LatticeParams& lp,
                            const Potential& pot, double dt, double T, int snapshot_stride) {
    if (!(dt > 0)) throw PreconditionError("integrate: dt must be > 0");
    if (!(T > 0)) throw PreconditionError("integrate: T must be > 0");

    IntegrationResult r;
    LatticeState s = s0;
    std::vector<double> f(lp.N);
    std::vector<double> h_series;

    const long steps = std::lround(std::ceil(T / dt - 1e-12));
    const double h0 = lattice_hamiltonian(s.q, s.p, lp, pot);
    r.h_initial = r.h_min = r.h_max = h0;
    h_series.push_back(h0);
    if (snapshot_stride > 0) r.snapshots.push_back({s.t, s.q, s.p});

    for (long i = 0; i < steps; ++i) {
        const double step_dt = std::min(dt, s0.t + T - s.t);
        forces(s.q, lp, pot, f);
        for (int n = 0; n < lp.N; ++n) s.p[n] += 0.5 * step_dt * f[n];
        for (int n = 0; n < lp.N; ++n) s.q[n] += step_dt * s.p[n];
        forces(s.q, lp, pot, f);
        for (int n = 0; n < lp.N; ++n) s.p[n] += 0.5 * step_dt * f[n];
        s.t += step_dt;

        for (int n = 0; n < lp.N; ++n)
            if (!std::isfinite(s.q[n]) || std::abs(s.q[n]) > 1e6)
                throw BlowupError("solution exceeded amplitude guard at t = " +
                                  std::to_string(s.t));

        const double h = lattice_hamiltonian(s.q, s.p, lp, pot);
        h_series.push_back(h);
        r.h_min = std::min(r.h_min, h);
        r.h_max = std::max(r.h_max, h);
        if (snapshot_stride > 0 && ((i + 1) % snapshot_stride == 0 || i + 1 == steps))
            r.snapshots.push_back({s.t, s.q, s.p});
    }

    r.h_final = h_series.back();
    const double scale = std::max(std::abs(r.h_initial), 1e-300);
    r.h_osc = (r.h_max - r.h_min) / scale;

    // secular drift: compare the first and last deciles of the energy history;
    // this averages out the bounded symplectic oscillation
    const size_t m = h_series.size();
    const size_t dec = std::max<size_t>(1, m / 10);
    const double head =
        std::accumulate(h_series.begin(), h_series.begin() + dec, 0.0) / dec;
    const double tail =
        std::accumulate(h_series.end() - dec, h_series.end(), 0.0) / dec;
    r.h_drift = std::abs(tail - head) / scale;

    r.final_state = std::move(s);
    return r;
}

TravellingCheck verify_travelling(const IntegrationResult& traj, const FourierProfile& prof,
                                  const LatticeParams& lp, const WaveParams& wp, double tol) {
    TravellingCheck tc;
    tc.max_dev = 0;
    for (const auto& samp : traj.snapshots) {
        for (int n = 0; n < lp.N && n < static_cast<int>(samp.q.size()); ++n) {
            const double ref = prof.eval(n - wp.c * samp.t);
            tc.max_dev = std::max(tc.max_dev, std::abs(samp.q[n] - ref));
        }
    }
    tc.pass = tc.max_dev < tol;
    return tc;
}

double dispersion_omega2(double q, double kappa, double ddv0) {
    const double s = std::sin(q / 2);
    return ddv0 + 4 * kappa * s * s;
}

double fit_cosine_frequency(const std::vector<double>& samples, double dt_sample) {
    if (samples.size() < 3)
        throw PreconditionError("fit_cosine_frequency needs at least 3 samples");
    // for A_j = A cos(omega t_j + phi): A_{j+1} + A_{j-1} = 2 cos(omega dt) A_j;
    // least squares over all interior samples
    double num = 0, den = 0;
    for (size_t j = 1; j + 1 < samples.size(); ++j) {
        num += samples[j] * (samples[j + 1] + samples[j - 1]);
        den += 2 * samples[j] * samples[j];
    }
    if (den == 0) throw PreconditionError("fit_cosine_frequency: zero signal");
    const double c = std::clamp(num / den, -1.0, 1.0);
    return std::acos(c) / dt_sample;
}

}  // namespace latwave
