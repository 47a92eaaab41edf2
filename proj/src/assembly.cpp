#include "corrsim/assembly.hpp"

#include <cmath>
#include <string>

#include "corrsim/errors.hpp"
#include "corrsim/kinetics.hpp"

namespace corrsim {

namespace {

void check_field(const Field& f, const Grid& g, const char* what) {
    if (f.size() != g.nodes()) {
        throw NumericsError(std::string(what) + ": field has " + std::to_string(f.size()) +
                            " entries, grid expects " + std::to_string(g.nodes()));
    }
}

} // namespace

double bernoulli(double x) {
    if (std::abs(x) < 1e-5) {
        // x/(e^x - 1) = 1 - x/2 + x^2/12 - x^4/720 + ...; the dropped term
        // is below 1.4e-23 here.
        return 1.0 - 0.5 * x + x * x / 12.0;
    }
    // expm1 keeps the denominator accurate; for x beyond +-745 this saturates
    // to the correct limits 0 and -x.
    return x / std::expm1(x);
}

double sg_flux(Species u, double u_left, double u_right, double dpsi, double h) {
    if (!(h > 0.0)) throw NumericsError("sg_flux: spacing must be positive");
    const double s = charge_number(u) * dpsi;
    return (bernoulli(s) * u_left - bernoulli(-s) * u_right) / h;
}

TridiagonalSystem assemble_poisson(const Field& P, const Field& N, const ModelParams& p,
                                   const Grid& g) {
    check_field(P, g, "assemble_poisson(P)");
    check_field(N, g, "assemble_poisson(N)");

    const Eigen::Index n = g.nodes();
    const double h = g.h;
    const double lam = p.lambda2;

    const Field source = 3.0 * P - N + Field::Constant(n, p.rho_hl);

    TridiagonalSystem sys;
    sys.sub.resize(n - 1);
    sys.diag.resize(n);
    sys.sup.resize(n - 1);
    sys.rhs.resize(n);

    for (Eigen::Index i = 1; i + 1 < n; ++i) {
        sys.sub[i - 1] = -lam / h;
        sys.diag[i] = 2.0 * lam / h;
        sys.sup[i] = -lam / h;
        sys.rhs[i] = h * source[i];
    }

    // Half-cell balances at the ends; the capacitance relations give the
    // one-sided flux: Psi'(0) = (Psi(0) - dpsi0)/alpha0 and
    // Psi'(1) = (V - dpsi1 - Psi(1))/alpha1.
    sys.diag[0] = lam * (1.0 / h + 1.0 / p.alpha0);
    sys.sup[0] = -lam / h;
    sys.rhs[0] = 0.5 * h * source[0] + lam * p.dpsi0_pzc / p.alpha0;

    sys.diag[n - 1] = lam * (1.0 / h + 1.0 / p.alpha1);
    sys.sub[n - 2] = -lam / h;
    sys.rhs[n - 1] = 0.5 * h * source[n - 1] + lam * (p.V - p.dpsi1_pzc) / p.alpha1;

    return sys;
}

Field solve_poisson(const Field& P, const Field& N, const ModelParams& p, const Grid& g) {
    return solve_tridiagonal(assemble_poisson(P, N, p, g));
}

TridiagonalSystem assemble_carrier(Species u, const Field& u_old, const Field& Psi, double dt,
                                   const ModelParams& p, const Grid& g) {
    check_field(u_old, g, "assemble_carrier(u_old)");
    check_field(Psi, g, "assemble_carrier(Psi)");
    if (!(dt > 0.0)) throw NumericsError("assemble_carrier: dt must be positive");

    const Eigen::Index n = g.nodes();
    const double h = g.h;
    const double z = charge_number(u);
    const double eps_u = p.time_coefficient(u);
    const double mass = eps_u * h / dt;

    // Bernoulli weights of the interval fluxes
    //   J_{i+1/2} = ( Bp_i u_i - Bm_i u_{i+1} ) / h.
    Eigen::VectorXd Bp(n - 1);
    Eigen::VectorXd Bm(n - 1);
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        const double s = z * (Psi[i + 1] - Psi[i]);
        Bp[i] = bernoulli(s);
        Bm[i] = bernoulli(-s);
    }

    TridiagonalSystem sys;
    sys.sub.resize(n - 1);
    sys.diag.resize(n);
    sys.sup.resize(n - 1);
    sys.rhs.resize(n);

    for (Eigen::Index i = 1; i + 1 < n; ++i) {
        sys.sub[i - 1] = -Bp[i - 1] / h;
        sys.diag[i] = mass + (Bp[i] + Bm[i - 1]) / h;
        sys.sup[i] = -Bm[i] / h;
        sys.rhs[i] = mass * u_old[i];
    }

    // Half cells at the interfaces: the outward flux is the Butler-Volmer
    // reaction rate in the new unknown, evaluated at the lagged potential.
    const double b0 = beta(p, u, Side::X0, Psi[0]);
    const double g0 = gamma(p, u, Side::X0, Psi[0]);
    sys.diag[0] = 0.5 * mass + Bp[0] / h + b0;
    sys.sup[0] = -Bm[0] / h;
    sys.rhs[0] = 0.5 * mass * u_old[0] + g0;

    const double x1 = p.V - Psi[n - 1];
    const double b1 = beta(p, u, Side::X1, x1);
    const double g1 = gamma(p, u, Side::X1, x1);
    sys.diag[n - 1] = 0.5 * mass + Bm[n - 2] / h + b1;
    sys.sub[n - 2] = -Bp[n - 2] / h;
    sys.rhs[n - 1] = 0.5 * mass * u_old[n - 1] + g1;

    return sys;
}

Field solve_carrier(Species u, const Field& u_old, const Field& Psi, double dt,
                    const ModelParams& p, const Grid& g) {
    return solve_tridiagonal(assemble_carrier(u, u_old, Psi, dt, p, g));
}

} // namespace corrsim
