#pragma once

#include <stdexcept>
#include <string>

namespace corrsim {

// Bad configuration or parameters outside the model hypotheses.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure: overflowing exponentials, zero pivots, size mismatches.
struct NumericsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A carrier density left its admissible box during a run.
struct BoundViolation : std::runtime_error {
    BoundViolation(const std::string& msg, long step_, const std::string& species_,
                   int node_, double value_)
        : std::runtime_error(msg), step(step_), species(species_), node(node_), value(value_) {}

    long step;
    std::string species;
    int node;
    double value;
};

} // namespace corrsim
