#pragma once

#include <string>
#include <vector>

#include "corrsim/params.hpp"
#include "corrsim/timeloop.hpp"

namespace corrsim {

struct LoadOptions {
    std::vector<std::string> overrides; // flat key=value entries, dotted paths
    bool unsafe_dt = false;             // waive the dt <= safety*tau gate
    bool unsafe_pzc = false;            // waive only the pzc-window hypothesis
    bool gate_admissibility = true;     // `check` parses without the gate
};

// Parses the JSON configuration text. Unknown keys are errors; missing keys
// take the documented defaults; the admissibility report gates the result
// unless waived. Serializing the result and reparsing yields an equal config.
RunConfig parse_config(const std::string& json_text, const LoadOptions& opts = {});

// parse_config on the contents of a file.
RunConfig load_config(const std::string& path, const LoadOptions& opts = {});

// Full JSON rendering of a configuration (every key explicit).
std::string save_config(const RunConfig& cfg);

// Machine-readable admissibility report (single-line JSON).
std::string report_json(const AdmissibilityReport& rep);

bool config_equal(const RunConfig& a, const RunConfig& b);

} // namespace corrsim
