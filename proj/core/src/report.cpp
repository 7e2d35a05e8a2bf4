#include "majolab/report.hpp"

#include <cstdio>
#include <sstream>

#include "majolab/matrix_io.hpp"

namespace majolab {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

std::string to_jsonl_line(const TrialReport& r) {
    std::ostringstream os;
    os << "{\"trial\":" << r.trial << ",\"seed\":" << r.seed << ",\"checker\":\""
       << json_escape(r.check_id) << "\",\"margin\":" << fmt17(r.margin)
       << ",\"worst_k\":" << r.worst_k << ",\"inputs\":{";

    bool first = true;
    for (const auto& [k, v] : r.input_params) {
        os << (first ? "\"" : ",\"") << json_escape(k) << "\":" << fmt17(v);
        first = false;
    }
    for (const auto& [k, m] : r.input_matrices) {
        os << (first ? "\"" : ",\"") << json_escape(k) << "\":" << serialize_matrix(m);
        first = false;
    }
    for (const auto& [k, f] : r.input_fns) {
        os << (first ? "\"" : ",\"") << json_escape(k) << "\":" << serialize_fn(f);
        first = false;
    }

    os << "},\"details\":{\"status\":\"" << json_escape(r.status)
       << "\",\"anomaly\":" << (r.anomaly ? "true" : "false");
    for (const auto& [k, v] : r.values) os << ",\"" << json_escape(k) << "\":" << fmt17(v);
    for (const auto& [k, v] : r.flags)
        os << ",\"" << json_escape(k) << "\":" << (v ? "true" : "false");
    os << "}}";
    return os.str();
}

void write_jsonl(std::ostream& os, const TrialReport& r) {
    os << to_jsonl_line(r) << "\n";
    os.flush();
}

}  // namespace majolab
