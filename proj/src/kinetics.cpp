#include "corrsim/kinetics.hpp"

#include <cmath>
#include <sstream>

#include "corrsim/errors.hpp"

namespace corrsim {

namespace {

// exp(arg) with a loud failure instead of silent overflow into a solve.
double checked_exp(double arg, const char* where) {
    if (!(std::abs(arg) <= 700.0)) {
        std::ostringstream msg;
        msg << where << ": exponential argument " << arg << " exceeds the overflow guard";
        throw NumericsError(msg.str());
    }
    return std::exp(arg);
}

} // namespace

double beta(const ModelParams& p, Species u, Side s, double x) {
    const auto& kk = p.kinetics(u, s);
    const double z = charge_number(u);
    return kk.m * checked_exp(-z * kk.b * x, "beta") + kk.k * checked_exp(z * kk.a * x, "beta");
}

double gamma(const ModelParams& p, Species u, Side s, double x) {
    const auto& kk = p.kinetics(u, s);
    const double z = charge_number(u);
    const double um = p.ceiling(u);
    if (s == Side::X0) return kk.m * um * checked_exp(-z * kk.b * x, "gamma");
    return kk.k * um * checked_exp(z * kk.a * x, "gamma");
}

double reaction_rate(const ModelParams& p, Species u, Side s, double u_boundary,
                     double psi_boundary) {
    const double x = (s == Side::X0) ? psi_boundary : p.V - psi_boundary;
    return beta(p, u, s, x) * u_boundary - gamma(p, u, s, x);
}

double xi(const ModelParams& p, Species u, Side s, double x) {
    const double um = p.ceiling(u);
    const double z = charge_number(u);
    const double drift = um * (z / p.alpha(s)) * (x - p.dpsi_pzc(s));
    const double core = gamma(p, u, s, x) - um * beta(p, u, s, x);
    return (s == Side::X0) ? core + drift : core - drift;
}

double xi_reduced(const ModelParams& p, Species u, Side s, double x) {
    const auto& kk = p.kinetics(u, s);
    const double um = p.ceiling(u);
    const double z = charge_number(u);
    if (s == Side::X0) {
        return um * (-kk.k * checked_exp(z * kk.a * x, "xi") +
                     (z / p.alpha0) * (x - p.dpsi0_pzc));
    }
    return um * (-kk.m * checked_exp(-z * kk.b * x, "xi") -
                 (z / p.alpha1) * (x - p.dpsi1_pzc));
}

SupremumEstimate xi_sup(const ModelParams& p, Species u, Side s) {
    constexpr double lo = -50.0;
    constexpr double hi = 50.0;
    constexpr int samples = 4001;
    const double step = (hi - lo) / (samples - 1);

    // Coarse scan; xi is concave on the window, so this brackets the maximum.
    double best_x = lo;
    double best_v = xi(p, u, s, lo);
    for (int i = 1; i < samples; ++i) {
        const double x = lo + i * step;
        const double v = xi(p, u, s, x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }

    double a = std::max(lo, best_x - step);
    double b = std::min(hi, best_x + step);
    constexpr double inv_phi = 0.6180339887498949; // 1/golden ratio
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = xi(p, u, s, x1);
    double f2 = xi(p, u, s, x2);
    while (b - a > 1e-10) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = xi(p, u, s, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = xi(p, u, s, x1);
        }
    }
    const double xm = 0.5 * (a + b);
    const double fm = xi(p, u, s, xm);
    SupremumEstimate est{fm, xm};
    if (f1 > est.value) est = {f1, x1};
    if (f2 > est.value) est = {f2, x2};
    if (best_v > est.value) est = {best_v, best_x};
    return est;
}

} // namespace corrsim
