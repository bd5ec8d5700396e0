#include "latwave/config.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "latwave/errors.hpp"

namespace latwave {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& file, int line, const std::string& msg) {
    throw ConfigError(file + ":" + std::to_string(line) + ": " + msg);
}

double to_double(const std::string& file, int line, const std::string& key,
                 const std::string& val) {
    try {
        size_t pos = 0;
        const double x = std::stod(val, &pos);
        if (pos != val.size()) throw std::invalid_argument(val);
        return x;
    } catch (const std::exception&) {
        fail(file, line, "expected a number for '" + key + "', got '" + val + "'");
    }
}

int to_int(const std::string& file, int line, const std::string& key,
           const std::string& val) {
    try {
        size_t pos = 0;
        const int x = std::stoi(val, &pos);
        if (pos != val.size()) throw std::invalid_argument(val);
        return x;
    } catch (const std::exception&) {
        fail(file, line, "expected an integer for '" + key + "', got '" + val + "'");
    }
}

bool to_bool(const std::string& file, int line, const std::string& key,
             const std::string& val) {
    if (val == "true" || val == "yes" || val == "on" || val == "1") return true;
    if (val == "false" || val == "no" || val == "off" || val == "0") return false;
    fail(file, line, "expected a boolean for '" + key + "', got '" + val + "'");
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& filename) {
    RunConfig rc;
    std::istringstream in(text);
    std::string raw, section;
    int lineno = 0;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail(filename, lineno, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "lattice" && section != "wave" && section != "potential" &&
                section != "solver" && section != "thresholds" && section != "simulate" &&
                section != "sweep" && section != "output")
                fail(filename, lineno, "unknown section [" + section + "]");
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(filename, lineno, "expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) fail(filename, lineno, "empty key");
        if (section.empty())
            fail(filename, lineno, "key '" + key + "' outside of any section");

        auto num = [&] { return to_double(filename, lineno, key, val); };
        auto integer = [&] { return to_int(filename, lineno, key, val); };
        auto boolean = [&] { return to_bool(filename, lineno, key, val); };

        if (section == "lattice") {
            if (key == "L") rc.L = num();
            else if (key == "N") rc.N = integer();
            else if (key == "kappa") rc.kappa = num();
            else fail(filename, lineno, "unknown key '" + key + "' in [lattice]");
        } else if (section == "wave") {
            if (key == "c") rc.c = num();
            else fail(filename, lineno, "unknown key '" + key + "' in [wave]");
        } else if (section == "potential") {
            if (key == "kind") rc.potential_kind = val;
            else if (key == "g") rc.quartic_g = num();
            else if (key == "mbar") rc.mbar = num();
            else if (key == "alpha") rc.alpha = num();
            else if (key == "K") rc.bigK = num();
            else if (key == "beta") rc.beta = num();
            else if (key == "omega0") rc.omega0 = num();
            else if (key == "a") rc.a = num();
            else if (key == "p") rc.p = integer();
            else fail(filename, lineno, "unknown key '" + key + "' in [potential]");
        } else if (section == "solver") {
            if (key == "kmax") rc.solver.kmax = integer();
            else if (key == "tol_residual") rc.solver.tol_residual = num();
            else if (key == "max_iter") rc.solver.max_iter = integer();
            else if (key == "theta") rc.solver.theta = num();
            else if (key == "seed_mode") rc.solver.seed_mode = integer();
            else if (key == "seed_amplitude") rc.solver.seed_amplitude = num();
            else if (key == "newton_enabled") rc.solver.newton_enabled = boolean();
            else if (key == "newton_tol") rc.solver.newton_tol = num();
            else if (key == "mpa_path_points") rc.solver.mpa_path_points = integer();
            else if (key == "mpa_step") rc.solver.mpa_step = num();
            else if (key == "mpa_max_deform") rc.solver.mpa_max_deform = integer();
            else if (key == "require_condition_as") rc.require_condition_as = boolean();
            else fail(filename, lineno, "unknown key '" + key + "' in [solver]");
        } else if (section == "thresholds") {
            if (key == "R") rc.thresholds_R = num();
            else fail(filename, lineno, "unknown key '" + key + "' in [thresholds]");
        } else if (section == "simulate") {
            if (key == "profile") rc.sim_profile = val;
            else if (key == "dt") rc.sim_dt = num();
            else if (key == "periods") rc.sim_periods = num();
            else if (key == "stride") rc.sim_stride = integer();
            else if (key == "verify_tol") rc.verify_tol = num();
            else fail(filename, lineno, "unknown key '" + key + "' in [simulate]");
        } else if (section == "sweep") {
            if (key == "parameter") rc.sweep_parameter = val;
            else if (key == "from") rc.sweep_from = num();
            else if (key == "to") rc.sweep_to = num();
            else if (key == "steps") rc.sweep_steps = integer();
            else if (key == "task") rc.sweep_task = val;
            else if (key == "threads") rc.sweep_threads = integer();
            else fail(filename, lineno, "unknown key '" + key + "' in [sweep]");
        } else if (section == "output") {
            if (key == "dir") rc.out_dir = val;
            else if (key == "printed_formulas") rc.printed_formulas = boolean();
            else if (key == "quiet") rc.quiet = boolean();
            else fail(filename, lineno, "unknown key '" + key + "' in [output]");
        }
    }

    if (rc.potential_kind.empty())
        throw ConfigError(filename + ": [potential] kind is required");
    if (rc.potential_kind != "hard_quartic" && rc.potential_kind != "soft")
        throw ConfigError(filename + ": unknown potential kind '" + rc.potential_kind +
                          "' (expected hard_quartic or soft)");
    if (!(rc.kappa > 0)) throw ConfigError(filename + ": [lattice] kappa must be set > 0");
    if (rc.sweep_parameter != "" && rc.sweep_parameter != "c" && rc.sweep_parameter != "kappa")
        throw ConfigError(filename + ": [sweep] parameter must be 'c' or 'kappa'");
    if (rc.sweep_task != "thresholds" && rc.sweep_task != "solve-hard")
        throw ConfigError(filename + ": [sweep] task must be 'thresholds' or 'solve-hard'");
    return rc;
}

LatticeParams make_lattice(const RunConfig& rc) {
    const int N = rc.N != 0 ? rc.N : static_cast<int>(std::lround(2 * rc.L));
    return LatticeParams(rc.L, N, rc.kappa);
}

Potential make_potential(const RunConfig& rc) {
    if (rc.potential_kind == "hard_quartic") return hard_quartic(rc.quartic_g, rc.mbar, rc.alpha, rc.bigK, rc.beta);
    return SoftPotential(rc.omega0, rc.a, rc.p);
}

}  // namespace latwave
