#include "corrsim/timeloop.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

#include "corrsim/assembly.hpp"
#include "corrsim/csv_io.hpp"
#include "corrsim/errors.hpp"

namespace corrsim {

Field InitSpec::resolve(const Grid& g) const {
    if (kind == Kind::Constant) return constant_field(g, value);
    return read_field_csv(path, g.nodes());
}

double RunConfig::resolved_dt() const {
    if (dt_auto) return safety * tau_formula(params);
    return dt;
}

const SimState& Trajectory::at_time(double t) const {
    if (states.empty()) throw NumericsError("trajectory has no states");
    if (dt <= 0.0 || states.size() == 1) return states.front();
    long k = std::lround(t / dt);
    if (k < 0) k = 0;
    if (k >= static_cast<long>(states.size())) k = static_cast<long>(states.size()) - 1;
    return states[static_cast<size_t>(k)];
}

namespace {

void check_initial_box(const Field& f, double ceiling, const char* name) {
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        if (!(f[i] >= 0.0 && f[i] <= ceiling)) {
            std::ostringstream msg;
            msg << "initial " << name << " out of [0, " << ceiling << "] at node " << i
                << ": value " << f[i];
            throw ConfigError(msg.str());
        }
    }
}

// NaN-robust: any non-finite value counts as a violation.
bool in_box(double v, double ceiling, double tol) {
    return v >= -tol && v <= ceiling + tol;
}

} // namespace

SimState init(const RunConfig& cfg) {
    Field P0 = cfg.init_P.resolve(cfg.grid);
    Field N0 = cfg.init_N.resolve(cfg.grid);
    check_initial_box(P0, cfg.params.Pm, "cation density P");
    check_initial_box(N0, cfg.params.Nm, "electron density N");

    SimState s;
    s.k = 0;
    s.t = 0.0;
    s.Psi = solve_poisson(P0, N0, cfg.params, cfg.grid);
    s.P = std::move(P0);
    s.N = std::move(N0);
    return s;
}

SimState step(const SimState& s, double dt, const ModelParams& p, const Grid& g,
              const StepOptions& opts) {
    if (!(dt > 0.0)) throw ConfigError("step: dt must be positive");
    if (!opts.unsafe_dt) {
        const double cap = opts.safety * tau_formula(p);
        if (dt > cap * (1.0 + 1e-12)) {
            std::ostringstream msg;
            msg << "step: dt = " << dt << " exceeds the density-bound limit "
                << "safety * tau = " << cap << " (tau = " << tau_formula(p)
                << "); pass the unsafe-dt override to proceed anyway";
            throw ConfigError(msg.str());
        }
    }

    // The stored potential is the solve of this state's own densities, which
    // is exactly the lagged potential the decoupled step prescribes.
    assert((s.Psi - solve_poisson(s.P, s.N, p, g)).lpNorm<Eigen::Infinity>() <
           1e-11 * (1.0 + s.Psi.lpNorm<Eigen::Infinity>()));

    SimState next;
    next.P = solve_carrier(Species::CationP, s.P, s.Psi, dt, p, g);
    next.N = solve_carrier(Species::ElectronN, s.N, s.Psi, dt, p, g);
    next.Psi = solve_poisson(next.P, next.N, p, g);
    next.k = s.k + 1;
    next.t = static_cast<double>(next.k) * dt;
    return next;
}

Trajectory run(const RunConfig& cfg) {
    if (!(cfg.T >= 0.0)) throw ConfigError("run: final time T must be nonnegative");
    if (!(cfg.safety > 0.0 && cfg.safety <= 1.0)) {
        throw ConfigError("run: safety factor must lie in (0, 1]");
    }
    const double dt = cfg.resolved_dt();
    if (cfg.T > 0.0 && !(dt > 0.0)) throw ConfigError("run: resolved dt must be positive");

    const long steps =
        cfg.T <= 0.0 ? 0
                     : std::max<long>(1, static_cast<long>(std::ceil(cfg.T / dt - 1e-9)));

    Trajectory traj;
    traj.grid = cfg.grid;
    traj.dt = dt;
    traj.params = cfg.params;
    traj.snapshot_times = cfg.output.snapshot_times;
    traj.states.reserve(static_cast<size_t>(steps) + 1);
    traj.diagnostics.reserve(static_cast<size_t>(steps));
    traj.states.push_back(init(cfg));

    const StepOptions opts{cfg.safety, cfg.unsafe_dt};
    // unsafe_pzc only waives the admissibility gate; a run that then leaves
    // the density box still aborts unless the dt override asks for raw output
    const bool enforce_bounds = !cfg.unsafe_dt;
    constexpr double tol = 1e-10;

    for (long k = 0; k < steps; ++k) {
        const SimState& prev = traj.states.back();
        SimState next = step(prev, dt, cfg.params, cfg.grid, opts);
        traj.diagnostics.push_back(make_record(prev, next, dt, cfg.params, cfg.grid));

        if (enforce_bounds) {
            const DiagnosticsRecord& rec = traj.diagnostics.back();
            const bool okP = in_box(rec.minP, cfg.params.Pm, tol) &&
                             in_box(rec.maxP, cfg.params.Pm, tol);
            const bool okN = in_box(rec.minN, cfg.params.Nm, tol) &&
                             in_box(rec.maxN, cfg.params.Nm, tol);
            if (!okP || !okN) {
                const Field& f = okP ? next.N : next.P;
                const double ceiling = okP ? cfg.params.Nm : cfg.params.Pm;
                int worst = 0;
                double worst_excess = -1.0;
                for (Eigen::Index i = 0; i < f.size(); ++i) {
                    const double excess = std::max(-f[i], f[i] - ceiling);
                    if (!(excess <= worst_excess)) {
                        worst_excess = excess;
                        worst = static_cast<int>(i);
                    }
                }
                std::ostringstream msg;
                msg << "density bound violated at step " << next.k << ", species "
                    << (okP ? "N" : "P") << ", node " << worst << ": value " << f[worst]
                    << " outside [0, " << ceiling << "] by more than " << tol;
                throw BoundViolation(msg.str(), next.k, okP ? "N" : "P", worst, f[worst]);
            }
        }
        traj.states.push_back(std::move(next));
    }
    return traj;
}

} // namespace corrsim
