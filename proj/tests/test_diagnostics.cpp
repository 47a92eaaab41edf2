#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <doctest.h>

#include "corrsim/csv_io.hpp"
#include "corrsim/diagnostics.hpp"
#include "corrsim/errors.hpp"
#include "corrsim/studies.hpp"
#include "corrsim/timeloop.hpp"

using namespace corrsim;

namespace {

RunConfig default_config() {
    RunConfig cfg;
    cfg.grid = Grid::uniform(100);
    cfg.init_P = {InitSpec::Kind::Constant, 1.0, {}};
    cfg.init_N = {InitSpec::Kind::Constant, 0.5, {}};
    cfg.T = 0.5;
    return cfg;
}

Trajectory constant_trajectory(const Grid& g, const ModelParams& p, int levels, double dt) {
    Trajectory traj;
    traj.grid = g;
    traj.dt = dt;
    traj.params = p;
    SimState s;
    s.P = constant_field(g, 1.0);
    s.N = constant_field(g, 0.5);
    s.Psi = constant_field(g, 0.0);
    for (int k = 0; k < levels; ++k) {
        s.k = k;
        s.t = k * dt;
        traj.states.push_back(s);
    }
    return traj;
}

} // namespace

TEST_SUITE("diagnostics") {

TEST_CASE("h1 norms of a constant field") {
    const Grid g = Grid::uniform(10);
    const double c = 1.7;
    const Field f = constant_field(g, c);
    CHECK(h1_norm_sq(f, g, H1Variant::Usual) == doctest::Approx(c * c).epsilon(1e-14));
    CHECK(h1_norm_sq(f, g, H1Variant::Boundary) ==
          doctest::Approx(2.0 * c * c).epsilon(1e-14));

    const Field zero = constant_field(g, 0.0);
    CHECK(h1_norm_sq(zero, g, H1Variant::Usual) == 0.0);
}

TEST_CASE("h1 norms of the identity profile at M = 10") {
    const Grid g = Grid::uniform(10);
    Field f(g.nodes());
    for (int i = 0; i <= g.M; ++i) f[i] = g.x(i);
    // gradient term 1, trapezoid of x^2 is 1/3 + h^2/6 = 0.335
    CHECK(h1_norm_sq(f, g, H1Variant::Usual) == doctest::Approx(1.335).epsilon(1e-13));
    CHECK(h1_norm_sq(f, g, H1Variant::Boundary) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("the two h1 variants are equivalent with a measured constant") {
    const Grid g = Grid::uniform(50);
    std::mt19937 gen(4242);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double kappa = 1.0;
    for (int trial = 0; trial < 100; ++trial) {
        Field f(g.nodes());
        for (int i = 0; i <= g.M; ++i) f[i] = u(gen);
        const double usual = h1_norm_sq(f, g, H1Variant::Usual);
        const double boundary = h1_norm_sq(f, g, H1Variant::Boundary);
        REQUIRE(usual > 0.0);
        REQUIRE(boundary > 0.0);
        kappa = std::max({kappa, usual / boundary, boundary / usual});
    }
    CHECK(std::isfinite(kappa));
    MESSAGE("measured h1 norm-equivalence constant over 100 random fields: ", kappa);
    // sanity: with the measured constant both directions hold by construction
    CHECK(kappa >= 1.0);
}

TEST_CASE("time translate of a constant trajectory vanishes") {
    const Trajectory traj = constant_trajectory(Grid::uniform(20), ModelParams{}, 6, 0.01);
    CHECK(l2l2_time_translate(traj, TrajField::P) == 0.0);
    CHECK(l2l2_time_translate(traj, TrajField::N) == 0.0);
    CHECK(l2l2_time_translate(traj, TrajField::Psi) == 0.0);
}

TEST_CASE("time translate rejects too-short trajectories") {
    const Trajectory traj = constant_trajectory(Grid::uniform(20), ModelParams{}, 2, 0.01);
    CHECK_THROWS_AS(l2l2_time_translate(traj, TrajField::P), NumericsError);
}

TEST_CASE("translate-to-dt ratio is stable under halving") {
    RunConfig cfg = default_config();
    const double tau = tau_max(cfg.params);
    auto ratio = [&](double dt) {
        RunConfig c = cfg;
        c.dt_auto = false;
        c.dt = dt;
        const Trajectory traj = run(c);
        return l2l2_time_translate(traj, TrajField::P) / dt;
    };
    const double r1 = ratio(tau / 2.0);
    const double r2 = ratio(tau / 4.0);
    CHECK(std::max(r1, r2) / std::min(r1, r2) < 2.0);
}

TEST_CASE("weak residuals sit at solver tolerance") {
    RunConfig cfg = default_config();
    cfg.params.V = 0.3;
    Trajectory traj = run(cfg);
    CHECK(weak_residual(traj, ResidualForm::Poisson) <= 1e-9);
    CHECK(weak_residual(traj, ResidualForm::CarrierP) <= 1e-9);
    CHECK(weak_residual(traj, ResidualForm::CarrierN) <= 1e-9);

    SUBCASE("a perturbed density is detected") {
        traj.states.back().P[traj.grid.M / 2] += 1e-3;
        CHECK(weak_residual(traj, ResidualForm::CarrierP) > 1e-5);
        CHECK(weak_residual(traj, ResidualForm::Poisson) > 1e-5);
    }
}

TEST_CASE("weak poisson residual of a zero-step trajectory") {
    RunConfig cfg = default_config();
    cfg.T = 0.0;
    const Trajectory traj = run(cfg);
    CHECK(weak_residual(traj, ResidualForm::Poisson) <= 1e-12);
    CHECK(weak_residual(traj, ResidualForm::CarrierP) == 0.0);
}

TEST_CASE("temporal order of the default transient is near one") {
    RunConfig cfg = default_config();
    const double tau = tau_max(cfg.params);
    const std::vector<double> dts{tau / 2.0, tau / 4.0, tau / 8.0, tau / 16.0};
    const OrderEstimate est = temporal_order(cfg, dts);
    REQUIRE_FALSE(est.indeterminate);
    MESSAGE("observed temporal order: ", est.slope);
    CHECK(est.slope > 0.8);
    CHECK(est.slope < 1.2);
}

TEST_CASE("temporal order validates its dt sequence") {
    RunConfig cfg = default_config();
    const double tau = tau_max(cfg.params);
    CHECK_THROWS_AS(temporal_order(cfg, {tau / 2.0, tau / 4.0}), ConfigError);
    CHECK_THROWS_AS(temporal_order(cfg, {tau / 2.0, tau / 3.0, tau / 6.0}), ConfigError);
    CHECK_THROWS_AS(temporal_order(cfg, {2.0 * tau, tau, tau / 2.0}), ConfigError);
}

TEST_CASE("a machine-stationary start makes the order indeterminate") {
    RunConfig cfg = default_config();
    // march to the stationary state, far past visible decay
    RunConfig warm = cfg;
    warm.T = 200.0;
    const Trajectory long_run = run(warm);
    const SimState& fixed = long_run.states.back();

    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "corrsim_stationary_init";
    fs::create_directories(dir);
    auto dump = [&](const Field& f, const fs::path& path) {
        std::ofstream out(path);
        for (Eigen::Index i = 0; i < f.size(); ++i) out << fmt17(f[i]) << "\n";
    };
    dump(fixed.P, dir / "P.csv");
    dump(fixed.N, dir / "N.csv");

    cfg.init_P = {InitSpec::Kind::File, 0.0, (dir / "P.csv").string()};
    cfg.init_N = {InitSpec::Kind::File, 0.0, (dir / "N.csv").string()};
    const double tau = tau_max(cfg.params);
    const OrderEstimate est =
        temporal_order(cfg, {tau / 2.0, tau / 4.0, tau / 8.0, tau / 16.0});
    CHECK(est.indeterminate);
}

TEST_CASE("spatial self-convergence is second order for smooth data") {
    RunConfig base = default_config();
    base.T = 0.1;
    base.dt_auto = false;
    base.dt = tau_max(base.params) / 16.0;
    base.safety = 1.0;

    auto final_state = [&](int M) {
        RunConfig c = base;
        c.grid = Grid::uniform(M);
        return run(c).states.back();
    };
    const SimState fine = final_state(100);
    auto error_vs_fine = [&](int M) {
        const SimState coarse = final_state(M);
        const int stride = 100 / M;
        double err = 0.0;
        for (int i = 0; i <= M; ++i) {
            err = std::max(err, std::abs(coarse.P[i] - fine.P[i * stride]));
            err = std::max(err, std::abs(coarse.N[i] - fine.N[i * stride]));
        }
        return err;
    };
    const double e25 = error_vs_fine(25);
    const double e50 = error_vs_fine(50);
    const double order = std::log2(e25 / e50);
    MESSAGE("observed spatial order: ", order);
    CHECK(order >= 1.8);
}

} // TEST_SUITE
