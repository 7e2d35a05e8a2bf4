#include "majolab/matrix_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace majolab {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json parse_json_or_throw(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw MatrixIoError(IoErrorCode::malformed_json, "malformed JSON");
    return j;
}

std::vector<std::vector<double>> read_grid(const json& j, const char* key, int n) {
    const json& g = j.at(key);
    if (!g.is_array() || static_cast<int>(g.size()) != n)
        throw MatrixIoError(IoErrorCode::not_square,
                            std::string(key) + " is not an array of " + std::to_string(n) + " rows");
    std::vector<std::vector<double>> out(n);
    for (int i = 0; i < n; ++i) {
        const json& row = g[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw MatrixIoError(IoErrorCode::not_square,
                                std::string(key) + " row " + std::to_string(i) + " has wrong length");
        out[i].resize(n);
        for (int k = 0; k < n; ++k) {
            if (!row[k].is_number())
                throw MatrixIoError(IoErrorCode::bad_value, "non-numeric matrix entry");
            out[i][k] = row[k].get<double>();
        }
    }
    return out;
}

}  // namespace

HermitianMatrix parse_matrix(const std::string& text) {
    const json j = parse_json_or_throw(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("re"))
        throw MatrixIoError(IoErrorCode::malformed_json, "matrix JSON needs \"n\" and \"re\"");
    if (!j["n"].is_number_integer())
        throw MatrixIoError(IoErrorCode::bad_dimension, "\"n\" is not an integer");
    const int n = j["n"].get<int>();
    if (n < kMinDim || n > kMaxDim)
        throw MatrixIoError(IoErrorCode::bad_dimension,
                            "dimension " + std::to_string(n) + " outside [" +
                                std::to_string(kMinDim) + ", " + std::to_string(kMaxDim) + "]");

    const auto re = read_grid(j, "re", n);
    std::vector<std::vector<double>> im;
    if (j.contains("im"))
        im = read_grid(j, "im", n);
    else
        im.assign(n, std::vector<double>(n, 0.0));

    std::vector<cplx> raw(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) raw[static_cast<size_t>(i) * n + k] = {re[i][k], im[i][k]};
    try {
        return HermitianMatrix::from_entries(n, raw);
    } catch (const HermiticityError& e) {
        throw MatrixIoError(IoErrorCode::not_hermitian, e.what());
    }
}

std::string serialize_matrix(const HermitianMatrix& h) {
    const int n = h.n();
    bool any_im = false;
    for (int i = 0; i < n && !any_im; ++i)
        for (int j = 0; j < n; ++j)
            if (h(i, j).imag() != 0.0) {
                any_im = true;
                break;
            }

    std::ostringstream os;
    os << "{\"n\":" << n << ",\"re\":[";
    for (int i = 0; i < n; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < n; ++j) os << (j ? "," : "") << fmt17(h(i, j).real());
        os << "]";
    }
    os << "]";
    if (any_im) {
        os << ",\"im\":[";
        for (int i = 0; i < n; ++i) {
            os << (i ? ",[" : "[");
            for (int j = 0; j < n; ++j) os << (j ? "," : "") << fmt17(h(i, j).imag());
            os << "]";
        }
        os << "]";
    }
    os << "}";
    return os.str();
}

PiecewiseFn parse_fn(const std::string& text) {
    const json j = parse_json_or_throw(text);
    if (!j.is_object())
        throw MatrixIoError(IoErrorCode::malformed_json, "function JSON must be an object");
    const double c = j.value("c", 0.0);
    const double a = j.value("a", 0.0);
    std::vector<AngleTerm> terms;
    if (j.contains("terms")) {
        if (!j["terms"].is_array())
            throw MatrixIoError(IoErrorCode::bad_value, "\"terms\" is not an array");
        for (const json& t : j["terms"]) {
            if (!t.is_array() || t.size() != 2 || !t[0].is_number() || !t[1].is_number())
                throw MatrixIoError(IoErrorCode::bad_value, "each term must be [weight, knot]");
            terms.push_back({t[0].get<double>(), t[1].get<double>()});
        }
    }
    try {
        return PiecewiseFn(c, a, std::move(terms));
    } catch (const DomainError& e) {
        throw MatrixIoError(IoErrorCode::bad_value, e.what());
    }
}

std::string serialize_fn(const PiecewiseFn& f) {
    std::ostringstream os;
    os << "{\"c\":" << fmt17(f.constant()) << ",\"a\":" << fmt17(f.slope()) << ",\"terms\":[";
    bool first = true;
    for (const AngleTerm& t : f.terms()) {
        os << (first ? "[" : ",[") << fmt17(t.weight) << "," << fmt17(t.knot) << "]";
        first = false;
    }
    os << "]}";
    return os.str();
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MatrixIoError(IoErrorCode::malformed_json, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

HermitianMatrix load_matrix_file(const std::string& path) { return parse_matrix(read_file(path)); }

PiecewiseFn load_fn_file(const std::string& path) { return parse_fn(read_file(path)); }

}  // namespace majolab
