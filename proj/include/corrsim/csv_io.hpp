#pragma once

#include <string>
#include <vector>

#include "corrsim/diagnostics.hpp"
#include "corrsim/timeloop.hpp"

namespace corrsim {

// %.17g rendering; rejects non-finite values so files never carry NaN/Inf.
std::string fmt17(double v);

// Compact label for snapshot file names.
std::string time_label(double t);

// Numeric CSV reader for initial fields: whitespace- or comma-separated
// values, exactly `expected` of them.
Field read_field_csv(const std::string& path, Eigen::Index expected);

// Header x,P,N,Psi; M + 1 rows.
void write_snapshot(const std::string& path, const SimState& s, const Grid& g);

// One row per step, header
// k,t,minP,maxP,minN,maxN,h1Psi,h1P,h1N,JP0,JP1,JN0,JN1,massResP,massResN,stationarity.
void write_series(const std::string& path, const std::vector<DiagnosticsRecord>& records);

} // namespace corrsim
