#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace majolab {

using cplx = std::complex<double>;

// Dimension limits for every matrix handled by this library.
inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 64;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

class HermiticityError : public Error {
public:
    explicit HermiticityError(const std::string& what) : Error(what) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Thrown when the eigensolver fails to reach its convergence threshold.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double offdiag_residual)
        : Error(what), offdiag_residual_(offdiag_residual) {}
    double offdiag_residual() const { return offdiag_residual_; }

private:
    double offdiag_residual_;
};

/// Dense complex matrix, row-major. Used for eigenvector frames and
/// intermediate products; no structural constraints.
class CMatrix {
public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static CMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    CMatrix adjoint() const;

    const std::vector<cplx>& data() const { return data_; }

private:
    int rows_, cols_;
    std::vector<cplx> data_;
};

CMatrix matmul(const CMatrix& a, const CMatrix& b);

/// Largest |entry|.
double entry_max_abs(const CMatrix& m);

/// Dense n x n complex Hermitian matrix. Construction guarantees
/// entries(i,j) == conj(entries(j,i)) exactly and a real diagonal.
class HermitianMatrix {
public:
    /// Zero matrix of dimension n.
    explicit HermitianMatrix(int n);

    /// Build from raw row-major entries. The input is symmetrized as
    /// (M + M*)/2; inputs with max|M - M*| > 1e-9 * max|M| are rejected.
    static HermitianMatrix from_entries(int n, const std::vector<cplx>& raw);

    /// Same validation, starting from a square CMatrix.
    static HermitianMatrix from_cmatrix(const CMatrix& m);

    static HermitianMatrix identity(int n);
    static HermitianMatrix scalar(int n, double a);
    static HermitianMatrix diagonal(const std::vector<double>& d);

    int n() const { return n_; }

    const cplx& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * n_ + j]; }

    /// Set entry (i,j) and its mirror (j,i) = conj(v). Diagonal values keep
    /// only their real part.
    void set(int i, int j, cplx v);

    double entry_max_abs() const;
    double frobenius_norm() const;
    double trace() const;

    CMatrix to_cmatrix() const;
    const std::vector<cplx>& data() const { return data_; }

    HermitianMatrix& operator+=(const HermitianMatrix& rhs);
    HermitianMatrix& operator-=(const HermitianMatrix& rhs);
    HermitianMatrix& operator*=(double s);

    friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
    friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
    friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }
    friend HermitianMatrix operator-(HermitianMatrix a) { return a *= -1.0; }

private:
    int n_;
    std::vector<cplx> data_;
};

/// Block-diagonal direct sum A (+) B.
HermitianMatrix direct_sum(const HermitianMatrix& a, const HermitianMatrix& b);

/// Embed A as the leading block of a total x total zero matrix.
HermitianMatrix pad_with_zeros(const HermitianMatrix& a, int total);

/// max|AB - BA| entrywise; zero iff the matrices commute.
double commutator_max_abs(const HermitianMatrix& a, const HermitianMatrix& b);

}  // namespace majolab
