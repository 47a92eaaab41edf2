#pragma once

#include <string>
#include <vector>

#include "corrsim/diagnostics.hpp"
#include "corrsim/grid.hpp"
#include "corrsim/params.hpp"

namespace corrsim {

// One time level of the decoupled iteration. Psi is always the potential
// solve of this state's own densities, so every stored state satisfies the
// discrete potential equation at its own level.
struct SimState {
    long k = 0;
    double t = 0.0;
    Field P;
    Field N;
    Field Psi;
};

// Initial-field specifier: a constant value or a CSV file of M + 1 values.
struct InitSpec {
    enum class Kind { Constant, File };
    Kind kind = Kind::Constant;
    double value = 0.0;
    std::string path;

    Field resolve(const Grid& g) const;

    friend bool operator==(const InitSpec&, const InitSpec&) = default;
};

struct OutputSpec {
    std::vector<double> snapshot_times; // defaults to {0, T} at config load
    bool series = true;

    friend bool operator==(const OutputSpec&, const OutputSpec&) = default;
};

struct RunConfig {
    ModelParams params;
    Grid grid = Grid::uniform(100);
    bool dt_auto = true; // dt resolves to safety * tau
    double dt = 0.0;     // used when dt_auto is false
    double safety = 0.9; // in (0, 1]
    double T = 1.0;      // final time, >= 0
    InitSpec init_P{InitSpec::Kind::Constant, 1.0, {}};
    InitSpec init_N{InitSpec::Kind::Constant, 0.5, {}};
    OutputSpec output;
    bool unsafe_dt = false;  // waives the dt <= safety*tau gate and bound aborts
    bool unsafe_pzc = false; // config was loaded with pzc outside its window

    double resolved_dt() const;
};

struct Trajectory {
    Grid grid;
    double dt = 0.0;
    ModelParams params;
    std::vector<SimState> states; // every computed level, 0..K
    std::vector<DiagnosticsRecord> diagnostics; // one per step
    std::vector<double> snapshot_times;

    long steps() const { return static_cast<long>(states.size()) - 1; }
    // Level whose time is nearest to t.
    const SimState& at_time(double t) const;
};

struct StepOptions {
    double safety = 1.0;
    bool unsafe_dt = false;
};

// Builds level 0: validates 0 <= P0 <= Pm and 0 <= N0 <= Nm nodewise and
// computes the initial potential.
SimState init(const RunConfig& cfg);

// One decoupled implicit step: both carriers advance with the lagged
// potential of the current state, then the potential is recomputed from the
// new densities. Rejects dt above safety * tau unless overridden.
SimState step(const SimState& s, double dt, const ModelParams& p, const Grid& g,
              const StepOptions& opts = {});

// ceil(T/dt) steps from the initial state, one diagnostics record per step.
// A density leaving its box by more than 1e-10 aborts with BoundViolation
// unless an unsafe flag is set. Deterministic: identical configs give
// bit-identical trajectories.
Trajectory run(const RunConfig& cfg);

} // namespace corrsim
