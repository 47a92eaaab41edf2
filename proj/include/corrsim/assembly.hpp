#pragma once

#include "corrsim/grid.hpp"
#include "corrsim/params.hpp"
#include "corrsim/tridiag.hpp"

namespace corrsim {

// Bernoulli function x / (e^x - 1), extended by continuity at 0; series
// branch below |x| = 1e-5, relative accuracy 1e-14 throughout.
double bernoulli(double x);

// Scharfetter-Gummel exponential-fitting flux across one interval,
//   J = ( B(z*dpsi) * u_left - B(-z*dpsi) * u_right ) / h,
// with dpsi = Psi_right - Psi_left. Exact for the local constant-coefficient
// drift-diffusion problem; reduces to pure diffusion at dpsi = 0 and to pure
// drift -z*u*dpsi/h for constant u.
double sg_flux(Species u, double u_left, double u_right, double dpsi, double h);

// Vertex-centered finite-volume system for the potential,
//   -lambda2 * Psi'' = 3P - N + rho_hl,
// with the capacitance (Robin) relations eliminating the one-sided fluxes
// through half-cell balances at nodes 0 and M. Interior row i:
//   lambda2 * (-Psi_{i-1} + 2 Psi_i - Psi_{i+1}) / h = h * (3P_i - N_i + rho_hl).
// The matrix is symmetric, diagonally dominant, with positive diagonal.
TridiagonalSystem assemble_poisson(const Field& P, const Field& N, const ModelParams& p,
                                   const Grid& g);

Field solve_poisson(const Field& P, const Field& N, const ModelParams& p, const Grid& g);

// Fully implicit finite-volume system for one carrier over one time step,
// with the potential lagged at the previous level:
//   (eps_u h / dt) u_i + J_{i+1/2} - J_{i-1/2} = (eps_u h / dt) u_old_i,
// J the Scharfetter-Gummel flux in the unknowns, half cells at the ends
// where the flux is replaced by the Butler-Volmer reaction rate. Positive
// diagonal, nonpositive off-diagonals, strictly dominant columns: the system
// is an M-matrix, so nonnegative data yield a nonnegative solution for any
// dt > 0.
TridiagonalSystem assemble_carrier(Species u, const Field& u_old, const Field& Psi, double dt,
                                   const ModelParams& p, const Grid& g);

Field solve_carrier(Species u, const Field& u_old, const Field& Psi, double dt,
                    const ModelParams& p, const Grid& g);

} // namespace corrsim
