#include "corrsim/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "corrsim/csv_io.hpp"
#include "corrsim/errors.hpp"

namespace corrsim {

namespace {

using nlohmann::json;

void expect_keys(const json& obj, std::initializer_list<const char*> allowed,
                 const std::string& where) {
    for (const auto& item : obj.items()) {
        const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) {
            return item.key() == k;
        });
        if (!known) {
            throw ConfigError("unknown configuration key '" + where + item.key() + "'");
        }
    }
}

double get_number(const json& obj, const char* key, double fallback, const std::string& where) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) {
        throw ConfigError("configuration key '" + where + key + "' must be a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw ConfigError("configuration key '" + where + key + "' is not finite");
    }
    return x;
}

InterfaceKinetics parse_kinetics_record(const json& obj, const std::string& where) {
    expect_keys(obj, {"m", "k", "a", "b"}, where);
    InterfaceKinetics kk;
    kk.m = get_number(obj, "m", kk.m, where);
    kk.k = get_number(obj, "k", kk.k, where);
    kk.a = get_number(obj, "a", kk.a, where);
    kk.b = get_number(obj, "b", kk.b, where);
    return kk;
}

InitSpec parse_init_record(const json& obj, const std::string& where, double fallback) {
    InitSpec spec{InitSpec::Kind::Constant, fallback, {}};
    if (obj.is_null()) return spec;
    expect_keys(obj, {"constant", "file"}, where);
    if (obj.contains("constant") && obj.contains("file")) {
        throw ConfigError("init record '" + where + "' must give either constant or file");
    }
    if (obj.contains("constant")) {
        spec.kind = InitSpec::Kind::Constant;
        spec.value = get_number(obj, "constant", 0.0, where);
    } else if (obj.contains("file")) {
        if (!obj.at("file").is_string()) {
            throw ConfigError("init key '" + where + "file' must be a string path");
        }
        spec.kind = InitSpec::Kind::File;
        spec.value = 0.0;
        spec.path = obj.at("file").get<std::string>();
    }
    return spec;
}

// Navigates/creates a dotted path and assigns the value, parsed as a JSON
// literal when possible and as a string otherwise.
void apply_override(json& root, const std::string& entry) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError("override must have the form key=value, got '" + entry + "'");
    }
    const std::string path = entry.substr(0, eq);
    const std::string raw = entry.substr(eq + 1);

    json value;
    try {
        value = json::parse(raw);
    } catch (const json::parse_error&) {
        value = raw; // bare words become strings, e.g. dt=auto
    }

    json* node = &root;
    size_t pos = 0;
    while (true) {
        const size_t dot = path.find('.', pos);
        const std::string key = path.substr(pos, dot == std::string::npos ? dot : dot - pos);
        if (key.empty()) throw ConfigError("override path has an empty segment: '" + path + "'");
        if (dot == std::string::npos) {
            (*node)[key] = value;
            break;
        }
        node = &((*node)[key]);
        if (!node->is_object() && !node->is_null()) {
            throw ConfigError("override path '" + path + "' descends through a scalar");
        }
        pos = dot + 1;
    }
}

} // namespace

RunConfig parse_config(const std::string& json_text, const LoadOptions& opts) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("configuration parse error: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("configuration root must be a JSON object");

    for (const std::string& entry : opts.overrides) {
        apply_override(root, entry);
    }

    expect_keys(root,
                {"lambda2", "epsilon", "rho_hl", "alpha0", "alpha1", "V", "dpsi0_pzc",
                 "dpsi1_pzc", "Pm", "Nm", "kinetics", "grid", "time", "init", "output"},
                "");

    RunConfig cfg;
    ModelParams& p = cfg.params;
    p.lambda2 = get_number(root, "lambda2", p.lambda2, "");
    p.epsilon = get_number(root, "epsilon", p.epsilon, "");
    p.rho_hl = get_number(root, "rho_hl", p.rho_hl, "");
    p.alpha0 = get_number(root, "alpha0", p.alpha0, "");
    p.alpha1 = get_number(root, "alpha1", p.alpha1, "");
    p.V = get_number(root, "V", p.V, "");
    p.dpsi0_pzc = get_number(root, "dpsi0_pzc", p.dpsi0_pzc, "");
    p.dpsi1_pzc = get_number(root, "dpsi1_pzc", p.dpsi1_pzc, "");
    p.Pm = get_number(root, "Pm", p.Pm, "");
    p.Nm = get_number(root, "Nm", p.Nm, "");

    if (root.contains("kinetics")) {
        const json& kin = root.at("kinetics");
        expect_keys(kin, {"P", "N"}, "kinetics.");
        const std::pair<const char*, Species> species[] = {{"P", Species::CationP},
                                                           {"N", Species::ElectronN}};
        for (const auto& [name, sp] : species) {
            if (!kin.contains(name)) continue;
            const json& per = kin.at(name);
            const std::string base = std::string("kinetics.") + name + ".";
            expect_keys(per, {"side0", "side1"}, base);
            if (per.contains("side0")) {
                p.kinetics(sp, Side::X0) = parse_kinetics_record(per.at("side0"), base + "side0.");
            }
            if (per.contains("side1")) {
                p.kinetics(sp, Side::X1) = parse_kinetics_record(per.at("side1"), base + "side1.");
            }
        }
    }

    int intervals = 100;
    if (root.contains("grid")) {
        const json& grid = root.at("grid");
        expect_keys(grid, {"M"}, "grid.");
        if (grid.contains("M")) {
            if (!grid.at("M").is_number_integer()) {
                throw ConfigError("grid.M must be an integer");
            }
            intervals = grid.at("M").get<int>();
        }
    }
    cfg.grid = Grid::uniform(intervals);

    if (root.contains("time")) {
        const json& time = root.at("time");
        expect_keys(time, {"dt", "safety", "T"}, "time.");
        cfg.safety = get_number(time, "safety", cfg.safety, "time.");
        cfg.T = get_number(time, "T", cfg.T, "time.");
        if (time.contains("dt")) {
            const json& dt = time.at("dt");
            if (dt.is_string()) {
                if (dt.get<std::string>() != "auto") {
                    throw ConfigError("time.dt must be a positive number or \"auto\"");
                }
                cfg.dt_auto = true;
            } else if (dt.is_number()) {
                cfg.dt_auto = false;
                cfg.dt = dt.get<double>();
            } else {
                throw ConfigError("time.dt must be a positive number or \"auto\"");
            }
        }
    }
    if (!(cfg.safety > 0.0 && cfg.safety <= 1.0)) {
        throw ConfigError("time.safety must lie in (0, 1]");
    }
    if (!(cfg.T >= 0.0) || !std::isfinite(cfg.T)) {
        throw ConfigError("time.T must be a finite nonnegative number");
    }

    cfg.init_P = InitSpec{InitSpec::Kind::Constant, 0.5 * p.Pm, {}};
    cfg.init_N = InitSpec{InitSpec::Kind::Constant, 0.5 * p.Nm, {}};
    if (root.contains("init")) {
        const json& init = root.at("init");
        expect_keys(init, {"P", "N"}, "init.");
        if (init.contains("P")) {
            cfg.init_P = parse_init_record(init.at("P"), "init.P.", 0.5 * p.Pm);
        }
        if (init.contains("N")) {
            cfg.init_N = parse_init_record(init.at("N"), "init.N.", 0.5 * p.Nm);
        }
    }

    cfg.output.snapshot_times = {0.0, cfg.T};
    if (root.contains("output")) {
        const json& output = root.at("output");
        expect_keys(output, {"snapshot_times", "series"}, "output.");
        if (output.contains("snapshot_times")) {
            const json& times = output.at("snapshot_times");
            if (!times.is_array()) throw ConfigError("output.snapshot_times must be an array");
            cfg.output.snapshot_times.clear();
            for (const json& t : times) {
                if (!t.is_number() || !std::isfinite(t.get<double>())) {
                    throw ConfigError("output.snapshot_times entries must be finite numbers");
                }
                cfg.output.snapshot_times.push_back(t.get<double>());
            }
        }
        if (output.contains("series")) {
            if (!output.at("series").is_boolean()) {
                throw ConfigError("output.series must be a boolean");
            }
            cfg.output.series = output.at("series").get<bool>();
        }
    }
    std::sort(cfg.output.snapshot_times.begin(), cfg.output.snapshot_times.end());
    cfg.output.snapshot_times.erase(
        std::unique(cfg.output.snapshot_times.begin(), cfg.output.snapshot_times.end()),
        cfg.output.snapshot_times.end());

    cfg.unsafe_dt = opts.unsafe_dt;
    cfg.unsafe_pzc = opts.unsafe_pzc;

    if (opts.gate_admissibility) {
        const AdmissibilityReport rep = check_admissibility(p);
        if (!rep.pass()) {
            const bool only_pzc = rep.inputs_finite && rep.scales_positive &&
                                  rep.rates_positive && rep.transfers_in_range &&
                                  rep.charge_relation;
            if (!(only_pzc && opts.unsafe_pzc)) {
                throw ConfigError("configuration rejected by the admissibility check\n" +
                                  rep.summary());
            }
        }
        if (!cfg.dt_auto) {
            if (!(cfg.dt > 0.0)) throw ConfigError("time.dt must be positive");
            const double cap = cfg.safety * tau_formula(p);
            if (cfg.dt > cap * (1.0 + 1e-12) && !opts.unsafe_dt) {
                std::ostringstream msg;
                msg << "time.dt = " << cfg.dt << " exceeds safety * tau = " << cap
                    << " (tau = " << tau_formula(p)
                    << "); rerun with --unsafe-dt to waive the density-bound limit";
                throw ConfigError(msg.str());
            }
        }
    }

    return cfg;
}

RunConfig load_config(const std::string& path, const LoadOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open configuration file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), opts);
}

std::string save_config(const RunConfig& cfg) {
    const ModelParams& p = cfg.params;
    json root;
    root["lambda2"] = p.lambda2;
    root["epsilon"] = p.epsilon;
    root["rho_hl"] = p.rho_hl;
    root["alpha0"] = p.alpha0;
    root["alpha1"] = p.alpha1;
    root["V"] = p.V;
    root["dpsi0_pzc"] = p.dpsi0_pzc;
    root["dpsi1_pzc"] = p.dpsi1_pzc;
    root["Pm"] = p.Pm;
    root["Nm"] = p.Nm;

    const std::pair<const char*, Species> species[] = {{"P", Species::CationP},
                                                       {"N", Species::ElectronN}};
    const std::pair<const char*, Side> sides[] = {{"side0", Side::X0}, {"side1", Side::X1}};
    for (const auto& [sname, sp] : species) {
        for (const auto& [dname, sd] : sides) {
            const InterfaceKinetics& kk = p.kinetics(sp, sd);
            root["kinetics"][sname][dname] = {
                {"m", kk.m}, {"k", kk.k}, {"a", kk.a}, {"b", kk.b}};
        }
    }

    root["grid"]["M"] = cfg.grid.M;
    if (cfg.dt_auto) {
        root["time"]["dt"] = "auto";
    } else {
        root["time"]["dt"] = cfg.dt;
    }
    root["time"]["safety"] = cfg.safety;
    root["time"]["T"] = cfg.T;

    auto init_json = [](const InitSpec& spec) {
        json j;
        if (spec.kind == InitSpec::Kind::Constant) {
            j["constant"] = spec.value;
        } else {
            j["file"] = spec.path;
        }
        return j;
    };
    root["init"]["P"] = init_json(cfg.init_P);
    root["init"]["N"] = init_json(cfg.init_N);

    root["output"]["snapshot_times"] = cfg.output.snapshot_times;
    root["output"]["series"] = cfg.output.series;

    return root.dump(2) + "\n";
}

std::string report_json(const AdmissibilityReport& rep) {
    auto window = [](const Interval& w) {
        json j;
        // +-inf endpoints (empty windows) are encoded as strings
        if (std::isfinite(w.lo)) j["lo"] = w.lo; else j["lo"] = w.lo > 0 ? "inf" : "-inf";
        if (std::isfinite(w.hi)) j["hi"] = w.hi; else j["hi"] = w.hi > 0 ? "inf" : "-inf";
        return j;
    };
    json j;
    j["inputs_finite"] = rep.inputs_finite;
    j["scales_positive"] = rep.scales_positive;
    j["rates_positive"] = rep.rates_positive;
    j["transfers_in_range"] = rep.transfers_in_range;
    j["charge_relation"] = rep.charge_relation;
    j["charge_residual"] = rep.charge_residual;
    j["pzc_window0"] = window(rep.pzc_window0);
    j["pzc_window1"] = window(rep.pzc_window1);
    j["pzc0_in_window"] = rep.pzc0_in_window;
    j["pzc1_in_window"] = rep.pzc1_in_window;
    j["pass"] = rep.pass();
    return j.dump();
}

bool config_equal(const RunConfig& a, const RunConfig& b) {
    auto kin_equal = [](const InterfaceKinetics& x, const InterfaceKinetics& y) {
        return x.m == y.m && x.k == y.k && x.a == y.a && x.b == y.b;
    };
    const ModelParams& pa = a.params;
    const ModelParams& pb = b.params;
    bool ok = pa.lambda2 == pb.lambda2 && pa.epsilon == pb.epsilon && pa.rho_hl == pb.rho_hl &&
              pa.alpha0 == pb.alpha0 && pa.alpha1 == pb.alpha1 && pa.V == pb.V &&
              pa.dpsi0_pzc == pb.dpsi0_pzc && pa.dpsi1_pzc == pb.dpsi1_pzc && pa.Pm == pb.Pm &&
              pa.Nm == pb.Nm;
    for (Species u : kAllSpecies) {
        for (Side s : kBothSides) {
            ok = ok && kin_equal(pa.kinetics(u, s), pb.kinetics(u, s));
        }
    }
    ok = ok && a.grid.M == b.grid.M && a.dt_auto == b.dt_auto &&
         (a.dt_auto || a.dt == b.dt) && a.safety == b.safety && a.T == b.T &&
         a.init_P == b.init_P && a.init_N == b.init_N && a.output == b.output;
    return ok;
}

} // namespace corrsim
