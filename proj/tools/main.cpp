#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corrsim/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"corrsim: 1D drift-diffusion simulator of a corroding oxide layer"};
    app.require_subcommand(1);

    std::string check_config;
    CLI::App* check = app.add_subcommand("check", "validate a configuration against the "
                                                  "model hypotheses and print the report");
    check->add_option("--config", check_config, "JSON configuration file")->required();

    corrsim::SimulateOptions sim;
    CLI::App* simulate = app.add_subcommand("simulate", "run one simulation");
    simulate->add_option("--config", sim.config_path, "JSON configuration file")->required();
    simulate->add_option("--out", sim.out_dir, "output directory")->required();
    simulate->add_flag("--unsafe-dt", sim.unsafe_dt,
                       "waive the dt <= safety*tau limit and density-bound aborts");
    simulate->add_flag("--unsafe-pzc", sim.unsafe_pzc,
                       "accept pzc drops outside their admissible window");
    simulate->add_option("--set", sim.overrides, "configuration override key=value")
        ->take_all();

    corrsim::SweepOptions sweep;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "vary one scalar over a linear range");
    sweep_cmd->add_option("--config", sweep.config_path, "JSON configuration file")->required();
    sweep_cmd->add_option("--param", sweep.param, "dotted config key to vary")->required();
    sweep_cmd->add_option("--from", sweep.from, "first value")->required();
    sweep_cmd->add_option("--to", sweep.to, "last value")->required();
    sweep_cmd->add_option("--points", sweep.points, "number of points")->required();
    sweep_cmd->add_option("--out", sweep.out_dir, "output directory")->required();

    corrsim::ConvergenceOptions conv;
    CLI::App* convergence =
        app.add_subcommand("convergence", "temporal self-convergence study");
    convergence->add_option("--config", conv.config_path, "JSON configuration file")
        ->required();
    convergence->add_option("--dts", conv.dts, "comma-separated halving dt sequence")
        ->required();
    convergence->add_option("--out", conv.out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (*check) return corrsim::cmd_check(check_config);
    if (*simulate) return corrsim::cmd_simulate(sim);
    if (*sweep_cmd) return corrsim::cmd_sweep(sweep);
    if (*convergence) return corrsim::cmd_convergence(conv);
    return 1;
}
