#pragma once

#include <vector>

#include "corrsim/timeloop.hpp"

namespace corrsim {

enum class TrajField { P, N, Psi };

enum class ResidualForm { CarrierP, CarrierN, Poisson };

// Discrete L2(0,T; L2) norm of the one-step time translate,
//   ( sum_k dt * ||u^{k+1} - u^k||_L2^2 )^{1/2},
// with trapezoid spatial quadrature. Requires at least two steps.
double l2l2_time_translate(const Trajectory& traj, TrajField which);

// Discrete L2(0,T; H1) norm of the piecewise-constant interpolant,
//   ( sum_{k=1..K} dt * ||u^k||_H1^2 )^{1/2}  (usual H1 variant).
double l2h1_norm(const Trajectory& traj, TrajField which);

// Maximum absolute residual of the discrete weak form over every nodal hat
// test function, every recorded step (or every state, for the potential).
// The scheme is the finite-volume realization of those forms, so this must
// sit at linear-solver tolerance for an unperturbed trajectory.
double weak_residual(const Trajectory& traj, ResidualForm which);

struct OrderEstimate {
    double slope = 0.0;
    bool indeterminate = false; // errors at solver-noise level
    std::vector<double> dts;
    std::vector<double> errors; // one per dt except the reference (finest)
};

// Self-convergence in time: runs the configuration at each dt in the halving
// sequence, measures the final-time L2 difference of (P, N) between each run
// and the next finer one, and fits the slope of log(error) vs log(dt).
OrderEstimate temporal_order(const RunConfig& cfg, const std::vector<double>& dts);

} // namespace corrsim
