#pragma once

#include "corrsim/grid.hpp"
#include "corrsim/params.hpp"

namespace corrsim {

enum class H1Variant {
    Usual,   // gradient term + trapezoid L2 term
    Boundary // gradient term + f(0)^2 + f(1)^2
};

// Trapezoid quadrature of f^2 on the grid.
double l2_norm_sq(const Field& f, const Grid& g);

// Squared discrete H1 norm; the gradient part is sum_i h * ((f_{i+1}-f_i)/h)^2.
double h1_norm_sq(const Field& f, const Grid& g, H1Variant variant);

// Per-step observables recorded by the time loop.
struct DiagnosticsRecord {
    long k = 0;   // time level reached by the step
    double t = 0.0;
    double minP = 0.0, maxP = 0.0;
    double minN = 0.0, maxN = 0.0;
    double h1Psi = 0.0, h1P = 0.0, h1N = 0.0; // squared discrete H1 norms
    double JP0 = 0.0, JP1 = 0.0;              // cation boundary currents
    double JN0 = 0.0, JN1 = 0.0;              // electron boundary currents
    double massResP = 0.0, massResN = 0.0;    // finite-volume budget residuals
    double stationarity = 0.0;                // max_u ||u_new - u_old||_inf / dt
};

struct SimState; // defined in timeloop.hpp

// Observables of one step prev -> next. Boundary currents are evaluated with
// the lagged potential prev.Psi, consistent with the step equations, so the
// mass budget eps_u * sum_i w_i (u_new - u_old)/dt + J(1) - J(0) telescopes
// to solver roundoff.
DiagnosticsRecord make_record(const SimState& prev, const SimState& next, double dt,
                              const ModelParams& p, const Grid& g);

} // namespace corrsim
