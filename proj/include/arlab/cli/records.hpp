#pragma once

// Result records and CSV output. Files are written to a temporary sibling and
// renamed into place.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace arlab::cli {

struct ResultRecord {
    std::string experiment;
    std::string metric;
    double value = 0;
    double lo = 0;  // pass window [lo, hi]
    double hi = 0;
    bool pass = false;
    std::string claim;

    bool recompute() const { return !std::isnan(value) && value >= lo && value <= hi; }
};

inline ResultRecord make_record(std::string experiment, std::string metric, double value, double lo, double hi,
                                std::string claim) {
    ResultRecord r{std::move(experiment), std::move(metric), value, lo, hi, false, std::move(claim)};
    r.pass = r.recompute();
    return r;
}

inline bool all_pass(const std::vector<ResultRecord>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return !rs.empty();
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

inline std::string format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) line += (i ? "," : "") + csv_field(fields[i]);
    return line + "\n";
}

inline std::string records_csv(const std::vector<ResultRecord>& rs) {
    std::string out = csv_row({"experiment", "metric", "value", "lo", "hi", "pass", "claim"});
    for (const auto& r : rs)
        out += csv_row({r.experiment, r.metric, format_number(r.value), format_number(r.lo), format_number(r.hi),
                        r.pass ? "1" : "0", r.claim});
    return out;
}

inline void write_atomic(const std::filesystem::path& path, const std::string& body) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot write " + tmp.string());
        os << body;
        if (!os) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace arlab::cli
