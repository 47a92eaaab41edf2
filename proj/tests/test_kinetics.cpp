#include <cmath>
#include <random>

#include <doctest.h>

#include "corrsim/errors.hpp"
#include "corrsim/kinetics.hpp"

using namespace corrsim;

TEST_SUITE("kinetics") {

TEST_CASE("beta at zero argument is m + k") {
    ModelParams p;
    for (Species u : kAllSpecies) {
        for (Side s : kBothSides) {
            p.kinetics(u, s) = {2.0, 3.0, 0.7, 0.2};
            CHECK(beta(p, u, s, 0.0) == doctest::Approx(5.0).epsilon(1e-15));
        }
    }
}

TEST_CASE("beta hand evaluations") {
    ModelParams p;
    p.kinetics(Species::ElectronN, Side::X0) = {1.0, 1.0, 0.0, 1.0};
    // z = -1: m e^{+x} + k e^{0} at x = ln 2
    CHECK(beta(p, Species::ElectronN, Side::X0, std::log(2.0)) ==
          doctest::Approx(3.0).epsilon(1e-14));

    p.kinetics(Species::CationP, Side::X1) = {1.0, 1.0, 0.5, 0.5};
    // z = 3: e^{-1.5} + e^{1.5}
    CHECK(beta(p, Species::CationP, Side::X1, 1.0) ==
          doctest::Approx(4.7048192304864944).epsilon(1e-14));
}

TEST_CASE("gamma hand evaluations") {
    ModelParams p; // Pm = 2, Nm = 1
    p.kinetics(Species::CationP, Side::X0) = {1.7, 1.0, 0.5, 0.5};
    CHECK(gamma(p, Species::CationP, Side::X0, 0.0) == doctest::Approx(3.4).epsilon(1e-15));

    p.kinetics(Species::CationP, Side::X1) = {1.0, 1.0, 0.5, 0.5};
    CHECK(gamma(p, Species::CationP, Side::X1, 0.0) == doctest::Approx(2.0).epsilon(1e-15));

    p.kinetics(Species::ElectronN, Side::X0) = {1.0, 1.0, 0.5, 1.0};
    // z = -1: m * Nm * e^{+x} at x = ln 3
    CHECK(gamma(p, Species::ElectronN, Side::X0, std::log(3.0)) ==
          doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("both coefficient functions stay positive") {
    ModelParams p;
    std::mt19937 gen(77);
    std::uniform_real_distribution<double> ux(-40.0, 40.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = ux(gen);
        for (Species u : kAllSpecies) {
            for (Side s : kBothSides) {
                CHECK(beta(p, u, s, x) > 0.0);
                CHECK(gamma(p, u, s, x) > 0.0);
            }
        }
    }
}

TEST_CASE("reaction rate vanishes at gamma/beta and is affine in the density") {
    ModelParams p;
    p.V = 0.4;
    std::mt19937 gen(19);
    std::uniform_real_distribution<double> ux(-3.0, 3.0);
    std::uniform_real_distribution<double> us(0.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        const double psi = ux(gen);
        for (Species u : kAllSpecies) {
            for (Side s : kBothSides) {
                const double arg = (s == Side::X0) ? psi : p.V - psi;
                const double root = gamma(p, u, s, arg) / beta(p, u, s, arg);
                CHECK(std::abs(reaction_rate(p, u, s, root, psi)) < 1e-13);

                // three-point collinearity
                const double s1 = us(gen), s2 = us(gen);
                const double mid = 0.5 * (s1 + s2);
                const double r1 = reaction_rate(p, u, s, s1, psi);
                const double r2 = reaction_rate(p, u, s, s2, psi);
                const double rm = reaction_rate(p, u, s, mid, psi);
                CHECK(std::abs(rm - 0.5 * (r1 + r2)) <
                      1e-12 * std::max({1.0, std::abs(r1), std::abs(r2)}));

                // slope is beta > 0
                const double slope = (r2 - r1) / (s2 - s1 + 1e-300);
                if (std::abs(s2 - s1) > 1e-6) {
                    CHECK(slope == doctest::Approx(beta(p, u, s, arg)).epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("reaction rate at the ceiling with unit kinetics") {
    ModelParams p; // m = k = 1 everywhere
    // beta(0) = 2, gamma(0) = u^m, so r(u^m) = u^m at x = 0
    CHECK(reaction_rate(p, Species::CationP, Side::X0, p.Pm, 0.0) ==
          doctest::Approx(p.Pm).epsilon(1e-15));
    CHECK(reaction_rate(p, Species::ElectronN, Side::X0, p.Nm, 0.0) ==
          doctest::Approx(p.Nm).epsilon(1e-15));
}

TEST_CASE("xi at the pzc drop is strictly negative") {
    ModelParams p;
    p.dpsi0_pzc = 0.1;
    p.dpsi1_pzc = -0.2;
    for (Species u : kAllSpecies) {
        const double um = p.ceiling(u);
        const double z = charge_number(u);
        {
            const auto& kk = p.kinetics(u, Side::X0);
            const double expected = -um * kk.k * std::exp(z * kk.a * p.dpsi0_pzc);
            CHECK(xi(p, u, Side::X0, p.dpsi0_pzc) == doctest::Approx(expected).epsilon(1e-12));
            CHECK(expected < 0.0);
        }
        {
            const auto& kk = p.kinetics(u, Side::X1);
            const double expected = -um * kk.m * std::exp(-z * kk.b * p.dpsi1_pzc);
            CHECK(xi(p, u, Side::X1, p.dpsi1_pzc) == doctest::Approx(expected).epsilon(1e-12));
            CHECK(expected < 0.0);
        }
    }
}

TEST_CASE("the two algebraic forms of xi agree on a dense sample") {
    ModelParams p;
    p.kinetics(Species::CationP, Side::X0) = {1.4, 0.6, 0.8, 0.3};
    p.kinetics(Species::ElectronN, Side::X0) = {0.7, 2.0, 0.2, 0.9};
    p.kinetics(Species::CationP, Side::X1) = {1.1, 0.9, 0.6, 0.7};
    p.kinetics(Species::ElectronN, Side::X1) = {1.9, 0.4, 0.5, 0.1};
    p.alpha0 = 0.7;
    p.alpha1 = 1.8;
    p.dpsi0_pzc = 0.05;
    p.dpsi1_pzc = -0.1;

    constexpr int samples = 10000;
    for (int i = 0; i < samples; ++i) {
        const double x = -50.0 + 100.0 * i / (samples - 1);
        for (Species u : kAllSpecies) {
            for (Side s : kBothSides) {
                const double a = xi(p, u, s, x);
                const double b = xi_reduced(p, u, s, x);
                // scale by the cancelled intermediate u^m * beta
                const double scale = std::max(1.0, p.ceiling(u) * beta(p, u, s, x));
                CHECK(std::abs(a - b) <= 1e-12 * scale);
            }
        }
    }
}

TEST_CASE("under the pzc hypothesis xi is nonpositive on the sample") {
    ModelParams p; // defaults sit strictly inside both windows
    constexpr int samples = 10000;
    for (int i = 0; i < samples; ++i) {
        const double x = -50.0 + 100.0 * i / (samples - 1);
        for (Species u : kAllSpecies) {
            for (Side s : kBothSides) {
                CHECK(xi(p, u, s, x) <= 1e-10);
            }
        }
    }
}

TEST_CASE("xi_sup sign tracks the window") {
    ModelParams p;
    SUBCASE("strictly inside: negative") {
        for (Species u : kAllSpecies) {
            for (Side s : kBothSides) {
                CHECK(xi_sup(p, u, s).value < 0.0);
            }
        }
    }
    SUBCASE("at the lower endpoint: zero, attained at the stationary point") {
        const Interval w0 = pzc_window(p, Side::X0);
        p.dpsi0_pzc = w0.lo;
        const SupremumEstimate est = xi_sup(p, Species::CationP, Side::X0);
        CHECK(std::abs(est.value) <= 1e-8);
        // stationary point of the reduced form: -ln(a k alpha0) / (3a)
        const double xstar = -std::log(0.5) / 1.5;
        CHECK(est.arg == doctest::Approx(xstar).epsilon(1e-5));
    }
    SUBCASE("outside by 0.1: positive") {
        const Interval w0 = pzc_window(p, Side::X0);
        p.dpsi0_pzc = w0.lo - 0.1;
        CHECK(xi_sup(p, Species::CationP, Side::X0).value > 0.0);
        p.dpsi0_pzc = w0.hi + 0.1;
        CHECK(xi_sup(p, Species::ElectronN, Side::X0).value > 0.0);
    }
}

TEST_CASE("exponential overflow is rejected loudly") {
    ModelParams p; // cation side 0: z*a = 1.5
    CHECK_THROWS_AS(beta(p, Species::CationP, Side::X0, 500.0), NumericsError);
    CHECK_THROWS_WITH_AS(beta(p, Species::CationP, Side::X0, 500.0),
                         doctest::Contains("overflow"), NumericsError);
    CHECK_THROWS_AS(gamma(p, Species::CationP, Side::X0, -500.0), NumericsError);
    // within the guard nothing throws
    CHECK_NOTHROW(beta(p, Species::CationP, Side::X0, 50.0));
}

} // TEST_SUITE
