#include "corrsim/csv_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "corrsim/errors.hpp"

namespace corrsim {

std::string fmt17(double v) {
    if (!std::isfinite(v)) {
        throw NumericsError("refusing to write non-finite value to output file");
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string time_label(double t) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", t);
    return buf;
}

Field read_field_csv(const std::string& path, Eigen::Index expected) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open initial-field file: " + path);
    std::ostringstream raw;
    raw << in.rdbuf();
    std::string text = raw.str();
    for (char& c : text) {
        if (c == ',') c = ' ';
    }

    std::vector<double> values;
    std::istringstream stream(text);
    std::string token;
    while (stream >> token) {
        try {
            size_t used = 0;
            const double v = std::stod(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            values.push_back(v);
        } catch (const std::exception&) {
            throw ConfigError("bad numeric token '" + token + "' in " + path);
        }
    }
    if (static_cast<Eigen::Index>(values.size()) != expected) {
        throw ConfigError("initial-field file " + path + " holds " +
                          std::to_string(values.size()) + " values, expected " +
                          std::to_string(expected));
    }
    Field f(expected);
    for (Eigen::Index i = 0; i < expected; ++i) f[i] = values[static_cast<size_t>(i)];
    return f;
}

void write_snapshot(const std::string& path, const SimState& s, const Grid& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open snapshot file for writing: " + path);
    out << "x,P,N,Psi\n";
    for (int i = 0; i <= g.M; ++i) {
        out << fmt17(g.x(i)) << ',' << fmt17(s.P[i]) << ',' << fmt17(s.N[i]) << ','
            << fmt17(s.Psi[i]) << '\n';
    }
    if (!out) throw ConfigError("write failure on snapshot file: " + path);
}

void write_series(const std::string& path, const std::vector<DiagnosticsRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open series file for writing: " + path);
    out << "k,t,minP,maxP,minN,maxN,h1Psi,h1P,h1N,JP0,JP1,JN0,JN1,massResP,massResN,"
           "stationarity\n";
    for (const DiagnosticsRecord& r : records) {
        out << r.k << ',' << fmt17(r.t) << ',' << fmt17(r.minP) << ',' << fmt17(r.maxP) << ','
            << fmt17(r.minN) << ',' << fmt17(r.maxN) << ',' << fmt17(r.h1Psi) << ','
            << fmt17(r.h1P) << ',' << fmt17(r.h1N) << ',' << fmt17(r.JP0) << ','
            << fmt17(r.JP1) << ',' << fmt17(r.JN0) << ',' << fmt17(r.JN1) << ','
            << fmt17(r.massResP) << ',' << fmt17(r.massResN) << ',' << fmt17(r.stationarity)
            << '\n';
    }
    if (!out) throw ConfigError("write failure on series file: " + path);
}

} // namespace corrsim
