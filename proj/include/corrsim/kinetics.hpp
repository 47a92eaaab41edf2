#pragma once

#include "corrsim/params.hpp"

namespace corrsim {

// Butler-Volmer coefficient functions of the interface reactions. The
// reaction flux at an interface is affine in the carrier density,
//   r(u, x) = beta(x) * u - gamma(x),
// with x the interfacial potential argument (Psi at x = 0, V - Psi at x = 1).
//
//   beta(x)  = m * exp(-z*b*x) + k * exp(z*a*x)      (> 0)
//   gamma(x) = m * u^m * exp(-z*b*x)   at x = 0      (> 0)
//   gamma(x) = k * u^m * exp(z*a*x)    at x = 1      (> 0)
//
// Exponential arguments beyond 700 in magnitude are rejected rather than
// allowed to overflow into the linear solves.
double beta(const ModelParams& p, Species u, Side s, double x);
double gamma(const ModelParams& p, Species u, Side s, double x);

// Signed reaction flux at an interface. Strictly increasing in u_boundary
// with slope beta > 0; Side::X1 forms its potential argument as V - psi.
double reaction_rate(const ModelParams& p, Species u, Side s, double u_boundary,
                     double psi_boundary);

// Boundary defect of the ceiling u^m: xi(x) <= 0 for all x is exactly what
// makes the constant u^m an upper barrier at the interface. Definition form:
//   side 0:  gamma(x) - u^m*beta(x) + u^m*(z/alpha0)*(x - dpsi0_pzc)
//   side 1:  gamma(x) - u^m*beta(x) - u^m*(z/alpha1)*(x - dpsi1_pzc)
double xi(const ModelParams& p, Species u, Side s, double x);

// Algebraically collapsed form of xi; must agree with xi to roundoff.
//   side 0:  u^m * (-k * exp(z*a*x) + (z/alpha0)*(x - dpsi0_pzc))
//   side 1:  u^m * (-m * exp(-z*b*x) - (z/alpha1)*(x - dpsi1_pzc))
double xi_reduced(const ModelParams& p, Species u, Side s, double x);

struct SupremumEstimate {
    double value = 0.0; // sup of xi over the search window
    double arg = 0.0;   // where it is attained
};

// Supremum of xi over x in [-50, 50]: dense scan refined by golden-section
// search, accurate to 1e-8 in the function value. Negative iff the pzc drop
// sits strictly inside the admissible window, zero at its endpoints.
SupremumEstimate xi_sup(const ModelParams& p, Species u, Side s);

} // namespace corrsim
