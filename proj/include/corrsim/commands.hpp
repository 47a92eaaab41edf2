#pragma once

#include <string>
#include <vector>

namespace corrsim {

// Exit codes shared by all commands: 0 success, 1 usage or configuration
// error, 2 bound violation or numerical failure.

struct SimulateOptions {
    std::string config_path;
    std::string out_dir;
    std::vector<std::string> overrides;
    bool unsafe_dt = false;
    bool unsafe_pzc = false;
};

struct SweepOptions {
    std::string config_path;
    std::string param; // dotted config key of one scalar
    double from = 0.0;
    double to = 0.0;
    int points = 0;
    std::string out_dir;
};

struct ConvergenceOptions {
    std::string config_path;
    std::string dts; // comma-separated halving sequence
    std::string out_dir;
};

// Prints the admissibility report (text, then one JSON line); exit 0 iff the
// verdict is pass.
int cmd_check(const std::string& config_path);

// Runs one simulation and writes snapshots plus the time series. The output
// directory carries an INCOMPLETE sentinel until the run finishes cleanly.
int cmd_simulate(const SimulateOptions& opts);

// Varies one scalar over a linear range, one run directory per point, and
// writes a summary of the final boundary currents after all members finish.
int cmd_sweep(const SweepOptions& opts);

// Temporal self-convergence study: error table and fitted slope.
int cmd_convergence(const ConvergenceOptions& opts);

} // namespace corrsim
