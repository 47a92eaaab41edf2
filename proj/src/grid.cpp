#include "corrsim/grid.hpp"

#include <string>

#include "corrsim/errors.hpp"

namespace corrsim {

Grid Grid::uniform(int intervals) {
    if (intervals < 2) {
        throw ConfigError("grid must have at least 2 intervals, got " +
                          std::to_string(intervals));
    }
    Grid g;
    g.M = intervals;
    g.h = 1.0 / intervals;
    return g;
}

Field constant_field(const Grid& g, double value) {
    return Field::Constant(g.nodes(), value);
}

bool all_finite(const Field& f) {
    return f.allFinite();
}

} // namespace corrsim
