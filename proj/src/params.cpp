#include "corrsim/params.hpp"

#include <cmath>
#include <sstream>

#include "corrsim/errors.hpp"

namespace corrsim {

Interval pzc_window(const ModelParams& p, Side s) {
    // The window endpoints are where the supremum of the corresponding
    // boundary defect function crosses zero (see kinetics.hpp). At x = 0 the
    // cation defect fixes the lower endpoint and the electron defect the
    // upper one; at x = 1 the roles swap.
    if (s == Side::X0) {
        const auto& kp = p.kinetics(Species::CationP, Side::X0);
        const auto& kn = p.kinetics(Species::ElectronN, Side::X0);
        const double lo = -(1.0 / (3.0 * kp.a)) * (1.0 + std::log(kp.a * kp.k * p.alpha0));
        const double hi = (1.0 / kn.a) * (1.0 + std::log(kn.a * kn.k * p.alpha0));
        return {lo, hi};
    }
    const auto& kp = p.kinetics(Species::CationP, Side::X1);
    const auto& kn = p.kinetics(Species::ElectronN, Side::X1);
    const double lo = -(1.0 / kn.b) * (1.0 + std::log(kn.b * kn.m * p.alpha1));
    const double hi = (1.0 / (3.0 * kp.b)) * (1.0 + std::log(kp.b * kp.m * p.alpha1));
    return {lo, hi};
}

AdmissibilityReport check_admissibility(const ModelParams& p) {
    AdmissibilityReport rep;

    bool finite = std::isfinite(p.lambda2) && std::isfinite(p.epsilon) &&
                  std::isfinite(p.rho_hl) && std::isfinite(p.alpha0) && std::isfinite(p.alpha1) &&
                  std::isfinite(p.V) && std::isfinite(p.dpsi0_pzc) && std::isfinite(p.dpsi1_pzc) &&
                  std::isfinite(p.Pm) && std::isfinite(p.Nm);
    for (Species u : kAllSpecies) {
        for (Side s : kBothSides) {
            const auto& kk = p.kinetics(u, s);
            finite = finite && std::isfinite(kk.m) && std::isfinite(kk.k) &&
                     std::isfinite(kk.a) && std::isfinite(kk.b);
        }
    }
    rep.inputs_finite = finite;
    if (!finite) return rep; // remaining checks would be meaningless

    rep.scales_positive = p.lambda2 > 0 && p.epsilon > 0 && p.alpha0 > 0 && p.alpha1 > 0 &&
                          p.Pm > 0 && p.Nm > 0;

    rep.rates_positive = true;
    rep.transfers_in_range = true;
    for (Species u : kAllSpecies) {
        for (Side s : kBothSides) {
            const auto& kk = p.kinetics(u, s);
            rep.rates_positive = rep.rates_positive && kk.m > 0 && kk.k > 0;
            rep.transfers_in_range = rep.transfers_in_range && 0.0 <= kk.a && kk.a <= 1.0 &&
                                     0.0 <= kk.b && kk.b <= 1.0;
        }
    }

    rep.charge_residual = 3.0 * p.Pm - p.Nm + p.rho_hl;
    rep.charge_relation = std::abs(rep.charge_residual) <= 1e-12;

    rep.pzc_window0 = pzc_window(p, Side::X0);
    rep.pzc_window1 = pzc_window(p, Side::X1);
    rep.pzc0_in_window = rep.pzc_window0.contains(p.dpsi0_pzc);
    rep.pzc1_in_window = rep.pzc_window1.contains(p.dpsi1_pzc);

    return rep;
}

std::string AdmissibilityReport::summary() const {
    std::ostringstream out;
    auto line = [&out](bool ok, const std::string& what) {
        out << (ok ? "  [ok]   " : "  [FAIL] ") << what << "\n";
    };
    out << "admissibility report\n";
    if (!inputs_finite) {
        line(false, "non-finite parameter value present; no further checks performed");
        out << "verdict: FAIL\n";
        return out.str();
    }
    line(inputs_finite, "all parameter values finite");
    line(scales_positive, "lambda2, epsilon, alpha0, alpha1, Pm, Nm positive");
    line(rates_positive, "rate coefficients m, k positive for every reaction");
    line(transfers_in_range, "transfer coefficients a, b within [0, 1]");
    {
        std::ostringstream s;
        s << "charge balance 3*Pm - Nm + rho_hl = 0 (residual " << charge_residual << ")";
        line(charge_relation, s.str());
    }
    {
        std::ostringstream s;
        s << "dpsi0_pzc within [" << pzc_window0.lo << ", " << pzc_window0.hi << "]";
        line(pzc0_in_window, s.str());
    }
    {
        std::ostringstream s;
        s << "dpsi1_pzc within [" << pzc_window1.lo << ", " << pzc_window1.hi << "]";
        line(pzc1_in_window, s.str());
    }
    out << "verdict: " << (pass() ? "pass" : "FAIL") << "\n";
    return out.str();
}

double tau_formula(const ModelParams& p) {
    return p.lambda2 * std::min(1.0 / (9.0 * p.Pm), p.epsilon / p.Nm);
}

double tau_max(const ModelParams& p) {
    const AdmissibilityReport rep = check_admissibility(p);
    if (!rep.pass()) {
        throw ConfigError("tau_max: parameters fail admissibility\n" + rep.summary());
    }
    return tau_formula(p);
}

} // namespace corrsim
