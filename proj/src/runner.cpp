#include "latwave/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "latwave/dynamics.hpp"
#include "latwave/errors.hpp"
#include "latwave/functionals.hpp"
#include "latwave/solvers.hpp"
#include "latwave/textio.hpp"
#include "latwave/thresholds.hpp"

namespace latwave {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json params_json(const RunConfig& rc, const LatticeParams& lp) {
    ordered_json j;
    j["subcommand"] = rc.subcommand;
    j["L"] = lp.L;
    j["N"] = lp.N;
    j["kappa"] = lp.kappa;
    j["c"] = rc.c;
    j["potential"] = rc.potential_kind;
    if (rc.potential_kind == "hard_quartic") {
        j["g"] = rc.quartic_g;
        j["mbar"] = rc.mbar;
        j["alpha"] = rc.alpha;
        j["K"] = rc.bigK;
        j["beta"] = rc.beta;
    } else {
        j["omega0"] = rc.omega0;
        j["a"] = rc.a;
        j["p"] = rc.p;
    }
    j["kmax"] = rc.solver.kmax;
    j["R"] = rc.thresholds_R;
    j["printed_formulas"] = rc.printed_formulas;
    return j;
}

ordered_json threshold_json(const ThresholdReport& tr) {
    ordered_json j;
    j["condition_as"] = tr.condition_as;
    if (tr.base) j["base"] = *tr.base;
    if (tr.r_max) j["r_max"] = *tr.r_max;
    if (tr.r_crit) j["r_crit"] = *tr.r_crit;
    if (tr.ring_nonempty) j["ring_nonempty"] = *tr.ring_nonempty;
    if (tr.e_crit) j["e_crit"] = *tr.e_crit;
    if (tr.contraction_m) j["contraction_m"] = *tr.contraction_m;
    if (tr.velocity_bound_c2) j["velocity_bound_c2"] = *tr.velocity_bound_c2;
    if (tr.c_crit) j["c_crit"] = *tr.c_crit;
    if (tr.t_thresh) j["t_thresh"] = *tr.t_thresh;
    if (tr.m_soft) j["m_soft"] = *tr.m_soft;
    return j;
}

ordered_json solve_json(const SolveOutcome& so) {
    ordered_json j;
    j["status"] = to_string(so.status);
    j["iterations"] = so.iterations;
    j["final_residual_l2"] = so.final_residual_l2;
    j["norm_l2"] = so.norm_l2;
    j["norm_h1"] = so.norm_h1;
    return j;
}

const char* thresholds_csv_header() {
    return "L,N,kappa,c,potential,condition_as,base,r_max,r_crit,ring_nonempty,e_crit,"
           "contraction_m,velocity_bound_c2,c_crit,t_thresh,m_soft\n";
}

std::string thresholds_csv_row(const LatticeParams& lp, double c, const std::string& kind,
                               const ThresholdReport& tr) {
    return csv_row({g17(lp.L), std::to_string(lp.N), g17(lp.kappa), g17(c), kind,
                    tr.condition_as ? "true" : "false", opt_field(tr.base),
                    opt_field(tr.r_max), opt_field(tr.r_crit), opt_field(tr.ring_nonempty),
                    opt_field(tr.e_crit), opt_field(tr.contraction_m),
                    opt_field(tr.velocity_bound_c2), opt_field(tr.c_crit),
                    opt_field(tr.t_thresh), opt_field(tr.m_soft)});
}

std::string residual_csv(const SolveOutcome& so) {
    std::string out = "iter,res_l2\n";
    for (const auto& [it, r] : so.history) out += csv_row({std::to_string(it), g17(r)});
    return out;
}

void write_json(const std::filesystem::path& dir, const ordered_json& j) {
    write_file((dir / "report.json").string(), j.dump(2) + "\n");
}

int run_solve_hard(const RunConfig& rc, const LatticeParams& lp, const WaveParams& wp,
                   const Potential& pot, const std::filesystem::path& dir) {
    const bool cas = condition_as(lp, wp);
    const ThresholdReport tr =
        threshold_report(lp, wp, pot, rc.thresholds_R, rc.printed_formulas);

    ordered_json j;
    j["params"] = params_json(rc, lp);
    j["thresholds"] = threshold_json(tr);

    if (rc.require_condition_as && !cas) {
        write_json(dir, j);
        if (!rc.quiet)
            std::cerr << "solve-hard: operator not invertible here (4 kappa / c^2 >= "
                         "Omega^2); set solver.require_condition_as = false to force\n";
        return 3;
    }

    const SolveOutcome so = solve_hard(lp, wp, pot, rc.solver);
    j["solve"] = solve_json(so);
    if (so.status == SolveStatus::Trivial || so.status == SolveStatus::NonTrivial) {
        const FunctionalBreakdown en = wave_energy(so.profile, lp, wp, pot);
        j["energy"] = {{"value", en.value},
                       {"kinetic", en.kinetic},
                       {"onsite", en.onsite},
                       {"coupling", en.coupling}};
    }
    write_json(dir, j);
    write_file((dir / "profile.txt").string(), to_text(so.profile));
    write_file((dir / "residual.csv").string(), residual_csv(so));

    if (!rc.quiet)
        std::cout << "solve-hard: status=" << to_string(so.status)
                  << " iterations=" << so.iterations
                  << " residual=" << g17(so.final_residual_l2)
                  << " norm_l2=" << g17(so.norm_l2) << "\n";
    return (so.status == SolveStatus::Trivial || so.status == SolveStatus::NonTrivial) ? 0 : 2;
}

int run_solve_soft(const RunConfig& rc, const LatticeParams& lp, const WaveParams& wp,
                   const Potential& pot, const std::filesystem::path& dir) {
    if (rc.potential_kind != "soft")
        throw ConfigError("solve-soft requires [potential] kind = soft");
    const SoftPotential& sp = std::get<SoftPotential>(pot);

    ordered_json j;
    j["params"] = params_json(rc, lp);
    j["thresholds"] =
        threshold_json(threshold_report(lp, wp, pot, rc.thresholds_R, rc.printed_formulas));

    MountainPassOutcome mp;
    try {
        mp = mountain_pass_solve(lp, wp, sp, rc.solver);
    } catch (const PreconditionError& e) {
        write_json(dir, j);
        if (!rc.quiet) std::cerr << "solve-soft: " << e.what() << "\n";
        return 3;
    }

    j["solve"] = solve_json(mp.outcome);
    j["action"] = {{"value", mp.action_value}, {"grad_norm", mp.grad_norm}};
    if (mp.outcome.status == SolveStatus::NonTrivial) {
        const KineticCheck kc = kinetic_threshold_check(mp.outcome.profile, lp, wp, sp,
                                                        embedding_constants(lp.L));
        j["kinetic_check"] = {{"applicable", kc.applicable},
                              {"holds", kc.holds},
                              {"t_thresh", kc.t_thresh},
                              {"t_kinetic", kc.t_kinetic}};
    }
    write_json(dir, j);
    write_file((dir / "profile.txt").string(), to_text(mp.outcome.profile));
    write_file((dir / "residual.csv").string(), residual_csv(mp.outcome));

    if (!rc.quiet)
        std::cout << "solve-soft: status=" << to_string(mp.outcome.status)
                  << " action=" << g17(mp.action_value)
                  << " grad_norm=" << g17(mp.grad_norm) << "\n";
    return (mp.outcome.status == SolveStatus::Trivial ||
            mp.outcome.status == SolveStatus::NonTrivial)
               ? 0
               : 2;
}

int run_thresholds(const RunConfig& rc, const LatticeParams& lp, const WaveParams& wp,
                   const Potential& pot, const std::filesystem::path& dir) {
    const ThresholdReport tr =
        threshold_report(lp, wp, pot, rc.thresholds_R, rc.printed_formulas);
    std::string csv = thresholds_csv_header();
    csv += thresholds_csv_row(lp, wp.c, rc.potential_kind, tr);
    write_file((dir / "thresholds.csv").string(), csv);

    ordered_json j;
    j["params"] = params_json(rc, lp);
    j["thresholds"] = threshold_json(tr);
    write_json(dir, j);

    if (!rc.quiet) {
        std::cout << "thresholds: condition_as=" << (tr.condition_as ? "true" : "false");
        if (tr.r_crit) std::cout << " r_crit=" << g17(*tr.r_crit);
        if (tr.r_max) std::cout << " r_max=" << g17(*tr.r_max);
        if (tr.c_crit) std::cout << " c_crit=" << g17(*tr.c_crit);
        std::cout << "\n";
    }
    const bool hard = std::holds_alternative<HardPotential>(pot);
    if (hard && !tr.condition_as) {
        if (!rc.quiet)
            std::cerr << "thresholds: outside the invertibility regime "
                         "(4 kappa / c^2 >= Omega^2)\n";
        return 3;
    }
    return 0;
}

int run_simulate(const RunConfig& rc, const LatticeParams& lp, const WaveParams& wp,
                 const Potential& pot, const std::filesystem::path& dir) {
    if (rc.sim_profile.empty())
        throw ConfigError("simulate requires [simulate] profile = <path to profile.txt>");
    const FourierProfile prof = profile_from_text(read_file(rc.sim_profile));

    const LatticeState s0 = init_from_profile(prof, lp, wp, 0.0);
    const double T = rc.sim_periods * 2 * prof.L / wp.c;

    ordered_json j;
    j["params"] = params_json(rc, lp);
    j["simulate"] = {{"dt", rc.sim_dt}, {"periods", rc.sim_periods}, {"T", T},
                     {"stride", rc.sim_stride}, {"verify_tol", rc.verify_tol}};

    IntegrationResult res;
    try {
        res = integrate(s0, lp, pot, rc.sim_dt, T, rc.sim_stride);
    } catch (const BlowupError& e) {
        j["blowup"] = true;
        write_json(dir, j);
        if (!rc.quiet) std::cerr << "simulate: " << e.what() << "\n";
        return 2;
    }
    const TravellingCheck tc = verify_travelling(res, prof, lp, wp, rc.verify_tol);

    std::string traj = "t,n,q,p\n";
    std::string ham = "t,H\n";
    for (const auto& s : res.snapshots) {
        for (int n = 0; n < lp.N; ++n)
            traj += csv_row({g17(s.t), std::to_string(n), g17(s.q[n]), g17(s.p[n])});
        ham += csv_row({g17(s.t), g17(lattice_hamiltonian(s.q, s.p, lp, pot))});
    }
    write_file((dir / "trajectory.csv").string(), traj);
    write_file((dir / "hamiltonian.csv").string(), ham);

    j["energy"] = {{"h_initial", res.h_initial}, {"h_final", res.h_final},
                   {"h_osc", res.h_osc}, {"h_drift", res.h_drift}};
    j["travelling"] = {{"max_dev", tc.max_dev}, {"pass", tc.pass}};
    write_json(dir, j);

    if (!rc.quiet)
        std::cout << "simulate: T=" << g17(T) << " max_dev=" << g17(tc.max_dev)
                  << " h_drift=" << g17(res.h_drift)
                  << " travelling=" << (tc.pass ? "pass" : "fail") << "\n";
    return 0;
}

int run_sweep(const RunConfig& rc, const std::filesystem::path& dir) {
    if (rc.sweep_parameter.empty())
        throw ConfigError("sweep requires [sweep] parameter = c | kappa");
    if (rc.sweep_steps < 1) throw ConfigError("sweep requires [sweep] steps >= 1");
    const int steps = rc.sweep_steps;

    std::vector<double> values(steps);
    for (int i = 0; i < steps; ++i)
        values[i] = steps == 1 ? rc.sweep_from
                               : rc.sweep_from +
                                     i * (rc.sweep_to - rc.sweep_from) / (steps - 1);

    const bool solve_task = rc.sweep_task == "solve-hard";
    std::vector<std::string> rows(steps);

    unsigned hw = std::thread::hardware_concurrency();
    int nthreads = rc.sweep_threads > 0 ? rc.sweep_threads : static_cast<int>(hw ? hw : 1);
    nthreads = std::min(nthreads, steps);

    std::atomic<int> next{0};
    auto worker = [&] {
        const Potential pot = make_potential(rc);
        for (int i = next.fetch_add(1); i < steps; i = next.fetch_add(1)) {
            const double kappa = rc.sweep_parameter == "kappa" ? values[i] : rc.kappa;
            const double c = rc.sweep_parameter == "c" ? values[i] : rc.c;
            try {
                const LatticeParams lpi(rc.L, rc.N != 0 ? rc.N
                                                        : static_cast<int>(std::lround(2 * rc.L)),
                                        kappa);
                const WaveParams wpi(c);
                const ThresholdReport tr =
                    threshold_report(lpi, wpi, pot, rc.thresholds_R, rc.printed_formulas);
                if (!solve_task) {
                    rows[i] = thresholds_csv_row(lpi, c, rc.potential_kind, tr);
                } else {
                    const SolveOutcome so = solve_hard(lpi, wpi, pot, rc.solver);
                    rows[i] = csv_row({g17(lpi.L), std::to_string(lpi.N), g17(kappa), g17(c),
                                       to_string(so.status), std::to_string(so.iterations),
                                       g17(so.final_residual_l2), g17(so.norm_l2),
                                       g17(so.norm_h1), opt_field(tr.base),
                                       opt_field(tr.r_max), opt_field(tr.r_crit)});
                }
            } catch (const std::exception& e) {
                rows[i] = csv_row({g17(rc.L), "", g17(kappa), g17(c), "Error", e.what()});
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::string csv = solve_task ? "L,N,kappa,c,status,iterations,res_l2,norm_l2,norm_h1,"
                                   "base,r_max,r_crit\n"
                                 : std::string(thresholds_csv_header());
    for (const auto& r : rows) csv += r;
    write_file((dir / "sweep.csv").string(), csv);

    ordered_json j;
    j["params"] = params_json(rc, LatticeParams(rc.L,
                                                rc.N != 0 ? rc.N
                                                          : static_cast<int>(std::lround(2 * rc.L)),
                                                rc.kappa));
    j["sweep"] = {{"parameter", rc.sweep_parameter}, {"from", rc.sweep_from},
                  {"to", rc.sweep_to}, {"steps", steps}, {"task", rc.sweep_task},
                  {"threads", nthreads}};
    write_json(dir, j);

    if (!rc.quiet)
        std::cout << "sweep: " << steps << " x " << rc.sweep_parameter << " in ["
                  << g17(rc.sweep_from) << ", " << g17(rc.sweep_to) << "] task="
                  << rc.sweep_task << "\n";
    return 0;
}

}  // namespace

int run(const RunConfig& rc) {
    const std::filesystem::path dir = rc.out_dir;
    std::filesystem::create_directories(dir);

    if (rc.subcommand == "sweep") return run_sweep(rc, dir);

    const LatticeParams lp = make_lattice(rc);
    const WaveParams wp(rc.c);
    const Potential pot = make_potential(rc);

    if (rc.subcommand == "solve-hard") return run_solve_hard(rc, lp, wp, pot, dir);
    if (rc.subcommand == "solve-soft") return run_solve_soft(rc, lp, wp, pot, dir);
    if (rc.subcommand == "thresholds") return run_thresholds(rc, lp, wp, pot, dir);
    if (rc.subcommand == "simulate") return run_simulate(rc, lp, wp, pot, dir);
    throw ConfigError("unknown subcommand '" + rc.subcommand + "'");
}

}  // namespace latwave
