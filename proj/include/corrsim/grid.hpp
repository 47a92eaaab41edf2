#pragma once

#include <Eigen/Dense>

namespace corrsim {

// Nodal values on the uniform grid over (0, 1); size M + 1.
using Field = Eigen::VectorXd;

struct Grid {
    int M = 100;     // number of intervals, >= 2
    double h = 0.01; // spacing, 1 / M

    static Grid uniform(int intervals);

    int nodes() const { return M + 1; }
    double x(int i) const { return static_cast<double>(i) / M; }
};

Field constant_field(const Grid& g, double value);

bool all_finite(const Field& f);

} // namespace corrsim
