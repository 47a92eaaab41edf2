#pragma once

#include <Eigen/Dense>

namespace corrsim {

// One tridiagonal linear system A u = rhs with n unknowns; sub and sup hold
// the n - 1 off-diagonal entries.
struct TridiagonalSystem {
    Eigen::VectorXd sub;
    Eigen::VectorXd diag;
    Eigen::VectorXd sup;
    Eigen::VectorXd rhs;

    Eigen::Index n() const { return diag.size(); }
};

// Thomas algorithm: one forward elimination and one back substitution.
// Throws NumericsError naming the row on a vanishing pivot.
Eigen::VectorXd solve_tridiagonal(const TridiagonalSystem& sys);

// A u - rhs, for residual checks.
Eigen::VectorXd tridiagonal_residual(const TridiagonalSystem& sys, const Eigen::VectorXd& u);

} // namespace corrsim
