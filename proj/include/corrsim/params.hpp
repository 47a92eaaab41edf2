#pragma once

#include <array>
#include <string>

namespace corrsim {

// The two charge carriers of the oxide layer: Fe3+ cations (density P)
// and electrons (density N).
enum class Species { CationP, ElectronN };

inline constexpr std::array<Species, 2> kAllSpecies{Species::CationP, Species::ElectronN};

constexpr double charge_number(Species u) {
    return u == Species::CationP ? 3.0 : -1.0;
}

constexpr const char* species_name(Species u) {
    return u == Species::CationP ? "P" : "N";
}

// The two interfaces of the unit-interval layer: x = 0 faces the metal,
// x = 1 faces the solution.
enum class Side { X0, X1 };

inline constexpr std::array<Side, 2> kBothSides{Side::X0, Side::X1};

// Butler-Volmer rate constants of one electrochemical surface reaction.
struct InterfaceKinetics {
    double m = 1.0; // rate coefficient, > 0
    double k = 1.0; // rate coefficient, > 0
    double a = 0.5; // transfer coefficient, in [0, 1]
    double b = 0.5; // transfer coefficient, in [0, 1]
};

// All dimensionless constants of the corrosion model. Defaults are the
// application values rho_hl = -5, Pm = 2, Nm = 1 together with symmetric
// unit kinetics; these place 0 inside both pzc admissibility windows.
struct ModelParams {
    double lambda2 = 1.0;   // squared scaled Debye length, > 0
    double epsilon = 0.1;   // cation/electron mobility ratio, > 0
    double rho_hl = -5.0;   // host-lattice charge density
    double alpha0 = 1.0;    // Helmholtz capacitance length at x = 0, > 0
    double alpha1 = 1.0;    // Helmholtz capacitance length at x = 1, > 0
    double V = 0.0;         // applied potential (potentiostatic)
    double dpsi0_pzc = 0.0; // point-of-zero-charge voltage drop at x = 0
    double dpsi1_pzc = 0.0; // point-of-zero-charge voltage drop at x = 1
    double Pm = 2.0;        // maximum cation density, > 0
    double Nm = 1.0;        // electron density in the metal state, > 0

    // Indexed by [species][side].
    std::array<std::array<InterfaceKinetics, 2>, 2> kin{};

    const InterfaceKinetics& kinetics(Species u, Side s) const {
        return kin[static_cast<int>(u)][static_cast<int>(s)];
    }
    InterfaceKinetics& kinetics(Species u, Side s) {
        return kin[static_cast<int>(u)][static_cast<int>(s)];
    }

    // Coefficient of the time derivative: 1 for cations, epsilon for electrons.
    double time_coefficient(Species u) const {
        return u == Species::CationP ? 1.0 : epsilon;
    }
    // Density ceiling u^m of the carrier.
    double ceiling(Species u) const {
        return u == Species::CationP ? Pm : Nm;
    }
    double alpha(Side s) const { return s == Side::X0 ? alpha0 : alpha1; }
    double dpsi_pzc(Side s) const { return s == Side::X0 ? dpsi0_pzc : dpsi1_pzc; }
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double x) const { return lo <= x && x <= hi; }
    double width() const { return hi - lo; }
};

// Admissible window for the pzc voltage drop at one interface: the range in
// which the boundary defect functions (see kinetics.hpp) stay nonpositive,
// so that the density ceilings are honored. May be empty (lo > hi).
Interval pzc_window(const ModelParams& p, Side s);

// Outcome of checking every standing hypothesis of the model.
struct AdmissibilityReport {
    bool inputs_finite = false;      // all parameter values finite
    bool scales_positive = false;    // lambda2, epsilon, alpha0, alpha1, Pm, Nm > 0
    bool rates_positive = false;     // all m, k > 0
    bool transfers_in_range = false; // all a, b in [0, 1]
    bool charge_relation = false;    // 3*Pm - Nm + rho_hl = 0 (tol 1e-12)
    double charge_residual = 0.0;
    Interval pzc_window0{};
    Interval pzc_window1{};
    bool pzc0_in_window = false;
    bool pzc1_in_window = false;

    bool pass() const {
        return inputs_finite && scales_positive && rates_positive && transfers_in_range &&
               charge_relation && pzc0_in_window && pzc1_in_window;
    }

    // One line per hypothesis plus the overall verdict.
    std::string summary() const;
};

// Pure function of the parameters; never throws, reports instead.
AdmissibilityReport check_admissibility(const ModelParams& p);

// Largest time step covered by the density-bound argument,
// lambda2 * min(1/(9*Pm), epsilon/Nm). Requires admissible parameters.
double tau_max(const ModelParams& p);

// Same formula without the admissibility gate.
double tau_formula(const ModelParams& p);

} // namespace corrsim
