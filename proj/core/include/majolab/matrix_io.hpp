#pragma once

#include <string>

#include "majolab/matrix.hpp"
#include "majolab/piecewise.hpp"

namespace majolab {

enum class IoErrorCode {
    malformed_json,
    bad_dimension,
    not_square,
    not_hermitian,
    bad_value,
};

class MatrixIoError : public Error {
public:
    MatrixIoError(IoErrorCode code, const std::string& what) : Error(what), code_(code) {}
    IoErrorCode code() const { return code_; }

private:
    IoErrorCode code_;
};

/// Matrix JSON: {"n": int, "re": n x n numbers, "im": optional n x n numbers
/// (default zeros)}. Serialization emits 17 significant digits, so
/// parse(serialize(h)) reproduces h bit for bit.
HermitianMatrix parse_matrix(const std::string& text);
std::string serialize_matrix(const HermitianMatrix& h);

/// Function JSON: {"c": num, "a": num, "terms": [[b, t], ...]}.
PiecewiseFn parse_fn(const std::string& text);
std::string serialize_fn(const PiecewiseFn& f);

HermitianMatrix load_matrix_file(const std::string& path);
PiecewiseFn load_fn_file(const std::string& path);

}  // namespace majolab
