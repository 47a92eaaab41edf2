#include "corrsim/diagnostics.hpp"

#include <string>

#include "corrsim/errors.hpp"
#include "corrsim/kinetics.hpp"
#include "corrsim/timeloop.hpp"

namespace corrsim {

namespace {

void check_field(const Field& f, const Grid& g, const char* what) {
    if (f.size() != g.nodes()) {
        throw NumericsError(std::string(what) + ": field size " + std::to_string(f.size()) +
                            " does not match grid with " + std::to_string(g.nodes()) + " nodes");
    }
}

// Finite-volume node weights: h/2 at the ends, h inside.
double fv_weight(const Grid& g, Eigen::Index i) {
    return (i == 0 || i == g.M) ? 0.5 * g.h : g.h;
}

} // namespace

double l2_norm_sq(const Field& f, const Grid& g) {
    check_field(f, g, "l2_norm_sq");
    double acc = 0.0;
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        acc += fv_weight(g, i) * f[i] * f[i];
    }
    return acc;
}

double h1_norm_sq(const Field& f, const Grid& g, H1Variant variant) {
    check_field(f, g, "h1_norm_sq");
    double grad = 0.0;
    for (Eigen::Index i = 0; i + 1 < f.size(); ++i) {
        const double d = f[i + 1] - f[i];
        grad += d * d / g.h;
    }
    if (variant == H1Variant::Usual) return grad + l2_norm_sq(f, g);
    return grad + f[0] * f[0] + f[f.size() - 1] * f[f.size() - 1];
}

DiagnosticsRecord make_record(const SimState& prev, const SimState& next, double dt,
                              const ModelParams& p, const Grid& g) {
    DiagnosticsRecord rec;
    rec.k = next.k;
    rec.t = next.t;
    rec.minP = next.P.minCoeff();
    rec.maxP = next.P.maxCoeff();
    rec.minN = next.N.minCoeff();
    rec.maxN = next.N.maxCoeff();
    rec.h1Psi = h1_norm_sq(next.Psi, g, H1Variant::Usual);
    rec.h1P = h1_norm_sq(next.P, g, H1Variant::Usual);
    rec.h1N = h1_norm_sq(next.N, g, H1Variant::Usual);

    const Eigen::Index last = g.M;
    // Boundary currents of the step equations: J(0) = -r0, J(1) = r1, taken
    // at the new densities and the lagged potential.
    rec.JP0 = -reaction_rate(p, Species::CationP, Side::X0, next.P[0], prev.Psi[0]);
    rec.JP1 = reaction_rate(p, Species::CationP, Side::X1, next.P[last], prev.Psi[last]);
    rec.JN0 = -reaction_rate(p, Species::ElectronN, Side::X0, next.N[0], prev.Psi[0]);
    rec.JN1 = reaction_rate(p, Species::ElectronN, Side::X1, next.N[last], prev.Psi[last]);

    auto budget = [&](const Field& u_new, const Field& u_old, Species u, double j0, double j1) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < u_new.size(); ++i) {
            acc += fv_weight(g, i) * (u_new[i] - u_old[i]);
        }
        return p.time_coefficient(u) * acc / dt + j1 - j0;
    };
    rec.massResP = budget(next.P, prev.P, Species::CationP, rec.JP0, rec.JP1);
    rec.massResN = budget(next.N, prev.N, Species::ElectronN, rec.JN0, rec.JN1);

    const double dP = (next.P - prev.P).lpNorm<Eigen::Infinity>();
    const double dN = (next.N - prev.N).lpNorm<Eigen::Infinity>();
    rec.stationarity = std::max(dP, dN) / dt;
    return rec;
}

} // namespace corrsim
