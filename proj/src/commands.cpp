#include "corrsim/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>

#include "corrsim/config.hpp"
#include "corrsim/csv_io.hpp"
#include "corrsim/errors.hpp"
#include "corrsim/studies.hpp"
#include "corrsim/timeloop.hpp"

namespace corrsim {

namespace fs = std::filesystem;

namespace {

void write_sentinel(const fs::path& dir) {
    std::ofstream out(dir / "INCOMPLETE");
    out << "run in progress or aborted; outputs in this directory are partial\n";
}

void clear_sentinel(const fs::path& dir) {
    fs::remove(dir / "INCOMPLETE");
}

// Runs one configuration into a directory. Leaves the INCOMPLETE sentinel in
// place on any failure.
int simulate_into(const RunConfig& cfg, const fs::path& out_dir,
                  std::optional<DiagnosticsRecord>* final_record = nullptr) {
    fs::create_directories(out_dir);
    write_sentinel(out_dir);
    try {
        Trajectory traj = run(cfg);

        std::set<std::string> written;
        for (double t : traj.snapshot_times) {
            const std::string name = "snap_t" + time_label(t) + ".csv";
            if (!written.insert(name).second) continue;
            write_snapshot((out_dir / name).string(), traj.at_time(t), traj.grid);
        }
        if (cfg.output.series) {
            write_series((out_dir / "series.csv").string(), traj.diagnostics);
        }
        if (final_record != nullptr && !traj.diagnostics.empty()) {
            *final_record = traj.diagnostics.back();
        }
        clear_sentinel(out_dir);
        return 0;
    } catch (const BoundViolation& e) {
        std::ofstream dump(out_dir / "violation.txt");
        dump << e.what() << "\n";
        std::cerr << "corrsim: " << e.what() << "\n";
        return 2;
    } catch (const NumericsError& e) {
        std::cerr << "corrsim: numerical failure: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int cmd_check(const std::string& config_path) {
    try {
        LoadOptions opts;
        opts.gate_admissibility = false; // the report itself is the product
        const RunConfig cfg = load_config(config_path, opts);
        const AdmissibilityReport rep = check_admissibility(cfg.params);
        std::cout << rep.summary();
        std::cout << report_json(rep) << "\n";
        return rep.pass() ? 0 : 1;
    } catch (const ConfigError& e) {
        std::cerr << "corrsim: " << e.what() << "\n";
        return 1;
    }
}

int cmd_simulate(const SimulateOptions& opts) {
    try {
        LoadOptions load;
        load.overrides = opts.overrides;
        load.unsafe_dt = opts.unsafe_dt;
        load.unsafe_pzc = opts.unsafe_pzc;
        const RunConfig cfg = load_config(opts.config_path, load);
        return simulate_into(cfg, opts.out_dir);
    } catch (const ConfigError& e) {
        std::cerr << "corrsim: " << e.what() << "\n";
        return 1;
    }
}

int cmd_sweep(const SweepOptions& opts) {
    try {
        if (opts.points < 1) throw ConfigError("sweep: --points must be at least 1");
        if (opts.param.empty()) throw ConfigError("sweep: --param must name a config key");

        const fs::path out_dir(opts.out_dir);
        fs::create_directories(out_dir);
        write_sentinel(out_dir);

        struct Row {
            double value;
            DiagnosticsRecord rec;
            bool has_rec;
        };
        std::vector<Row> rows;
        for (int i = 0; i < opts.points; ++i) {
            const double value =
                opts.points == 1
                    ? opts.from
                    : opts.from + (opts.to - opts.from) * i / (opts.points - 1);
            LoadOptions load;
            load.overrides.push_back(opts.param + "=" + fmt17(value));
            const RunConfig cfg = load_config(opts.config_path, load);

            char name[32];
            std::snprintf(name, sizeof(name), "point_%03d", i);
            std::optional<DiagnosticsRecord> final_record;
            const int code = simulate_into(cfg, out_dir / name, &final_record);
            if (code != 0) return code;
            rows.push_back({value, final_record.value_or(DiagnosticsRecord{}),
                            final_record.has_value()});
        }

        std::ofstream summary(out_dir / "summary.csv", std::ios::binary);
        summary << "index,value,JP0,JP1,JN0,JN1\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            summary << i << ',' << fmt17(rows[i].value) << ',';
            if (rows[i].has_rec) {
                summary << fmt17(rows[i].rec.JP0) << ',' << fmt17(rows[i].rec.JP1) << ','
                        << fmt17(rows[i].rec.JN0) << ',' << fmt17(rows[i].rec.JN1);
            } else {
                summary << ",,,"; // zero-step run has no currents
            }
            summary << '\n';
        }
        summary.close();
        clear_sentinel(out_dir);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "corrsim: " << e.what() << "\n";
        return 1;
    }
}

int cmd_convergence(const ConvergenceOptions& opts) {
    try {
        const RunConfig cfg = load_config(opts.config_path);

        std::vector<double> dts;
        std::string token;
        std::istringstream list(opts.dts);
        while (std::getline(list, token, ',')) {
            if (token.empty()) continue;
            try {
                dts.push_back(std::stod(token));
            } catch (const std::exception&) {
                throw ConfigError("convergence: bad dt entry '" + token + "'");
            }
        }

        const OrderEstimate est = temporal_order(cfg, dts);

        const fs::path out_dir(opts.out_dir);
        fs::create_directories(out_dir);
        write_sentinel(out_dir);

        std::ofstream errors(out_dir / "errors.csv", std::ios::binary);
        errors << "dt,error\n";
        for (size_t i = 0; i < est.errors.size(); ++i) {
            errors << fmt17(est.dts[i]) << ',' << fmt17(est.errors[i]) << '\n';
        }
        errors.close();

        std::ofstream order(out_dir / "order.txt", std::ios::binary);
        if (est.indeterminate) {
            order << "indeterminate: errors at solver-noise level\n";
            std::cout << "observed temporal order: indeterminate (errors at solver noise)\n";
        } else {
            order << "slope = " << fmt17(est.slope) << "\n";
            std::cout << "observed temporal order: " << est.slope << "\n";
        }
        order.close();
        clear_sentinel(out_dir);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "corrsim: " << e.what() << "\n";
        return 1;
    } catch (const NumericsError& e) {
        std::cerr << "corrsim: numerical failure: " << e.what() << "\n";
        return 2;
    }
}

} // namespace corrsim
