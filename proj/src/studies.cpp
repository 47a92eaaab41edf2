#include "corrsim/studies.hpp"

#include <cmath>
#include <limits>

#include "corrsim/assembly.hpp"
#include "corrsim/errors.hpp"
#include "corrsim/tridiag.hpp"

namespace corrsim {

namespace {

const Field& pick(const SimState& s, TrajField which) {
    switch (which) {
        case TrajField::P: return s.P;
        case TrajField::N: return s.N;
        default: return s.Psi;
    }
}

} // namespace

double l2l2_time_translate(const Trajectory& traj, TrajField which) {
    if (traj.steps() < 2) {
        throw NumericsError("l2l2_time_translate: trajectory too short, need at least 2 steps");
    }
    double acc = 0.0;
    for (size_t k = 0; k + 1 < traj.states.size(); ++k) {
        Field diff = pick(traj.states[k + 1], which) - pick(traj.states[k], which);
        acc += traj.dt * l2_norm_sq(diff, traj.grid);
    }
    return std::sqrt(acc);
}

double l2h1_norm(const Trajectory& traj, TrajField which) {
    double acc = 0.0;
    for (size_t k = 1; k < traj.states.size(); ++k) {
        acc += traj.dt * h1_norm_sq(pick(traj.states[k], which), traj.grid, H1Variant::Usual);
    }
    return std::sqrt(acc);
}

double weak_residual(const Trajectory& traj, ResidualForm which) {
    if (traj.states.empty()) throw NumericsError("weak_residual: empty trajectory");

    double worst = 0.0;
    if (which == ResidualForm::Poisson) {
        for (const SimState& s : traj.states) {
            const TridiagonalSystem sys =
                assemble_poisson(s.P, s.N, traj.params, traj.grid);
            worst = std::max(worst,
                             tridiagonal_residual(sys, s.Psi).lpNorm<Eigen::Infinity>());
        }
        return worst;
    }

    const Species u = (which == ResidualForm::CarrierP) ? Species::CationP : Species::ElectronN;
    for (size_t k = 0; k + 1 < traj.states.size(); ++k) {
        const SimState& prev = traj.states[k];
        const SimState& next = traj.states[k + 1];
        const Field& old_f = (u == Species::CationP) ? prev.P : prev.N;
        const Field& new_f = (u == Species::CationP) ? next.P : next.N;
        const TridiagonalSystem sys =
            assemble_carrier(u, old_f, prev.Psi, traj.dt, traj.params, traj.grid);
        worst = std::max(worst, tridiagonal_residual(sys, new_f).lpNorm<Eigen::Infinity>());
    }
    return worst;
}

OrderEstimate temporal_order(const RunConfig& cfg, const std::vector<double>& dts) {
    if (dts.size() < 3) {
        throw ConfigError("temporal_order: need at least 3 time steps in the sequence");
    }
    const double tau = tau_formula(cfg.params);
    for (size_t i = 0; i < dts.size(); ++i) {
        if (!(dts[i] > 0.0) || dts[i] > tau * (1.0 + 1e-12)) {
            throw ConfigError("temporal_order: every dt must lie in (0, tau]");
        }
        // slack admits hand-typed decimals of a halving sequence
        if (i > 0 && std::abs(dts[i] - 0.5 * dts[i - 1]) > 1e-5 * dts[i - 1]) {
            throw ConfigError("temporal_order: dt sequence must halve at every entry");
        }
        const double q = cfg.T / dts[i];
        if (std::abs(q - std::round(q)) > 1e-4 * std::max(1.0, q)) {
            throw ConfigError("temporal_order: T must be a near-exact multiple of every dt");
        }
    }

    std::vector<Trajectory> runs;
    runs.reserve(dts.size());
    for (double d : dts) {
        RunConfig c = cfg;
        c.dt_auto = false;
        c.dt = d;
        c.safety = 1.0; // the sequence is already gated against tau
        // snap to a whole number of steps; hand-typed decimal dts would
        // otherwise round T/dt up and run one step past the common endpoint
        c.T = static_cast<double>(std::llround(cfg.T / d)) * d;
        runs.push_back(run(c));
    }

    // Consecutive-pair differences: e(dt) = ||u_dt(T) - u_{dt/2}(T)||. Using
    // the single finest run as the reference for every entry would halve the
    // finest measured error (C(dt - dt_ref) instead of C dt) and bias the
    // fitted slope of a first-order method to about 1.4; the pairwise form
    // keeps the slope at the genuine order.
    OrderEstimate est;
    est.dts.assign(dts.begin(), dts.end() - 1);
    for (size_t j = 0; j + 1 < runs.size(); ++j) {
        const SimState& fin = runs[j].states.back();
        const SimState& finer = runs[j + 1].states.back();
        const double e2 = l2_norm_sq(Field(fin.P - finer.P), cfg.grid) +
                          l2_norm_sq(Field(fin.N - finer.N), cfg.grid);
        est.errors.push_back(std::sqrt(e2));
    }

    double max_err = 0.0;
    double min_err = std::numeric_limits<double>::infinity();
    for (double e : est.errors) {
        max_err = std::max(max_err, e);
        min_err = std::min(min_err, e);
    }
    if (max_err <= 1e-12 || min_err <= 1e-15) {
        // Already stationary: differences sit at solver noise and carry no
        // convergence information.
        est.indeterminate = true;
        return est;
    }

    // Least-squares slope of log(error) vs log(dt).
    const size_t m = est.errors.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t j = 0; j < m; ++j) {
        const double x = std::log(est.dts[j]);
        const double y = std::log(est.errors[j]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    est.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return est;
}

} // namespace corrsim
