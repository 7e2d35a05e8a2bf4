#include "majolab/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace majolab {

namespace {

void check_dim(int n) {
    if (n < kMinDim || n > kMaxDim)
        throw DimensionError("matrix dimension " + std::to_string(n) + " outside [" +
                             std::to_string(kMinDim) + ", " + std::to_string(kMaxDim) + "]");
}

}  // namespace

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matmul: inner dimensions differ");
    CMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

double entry_max_abs(const CMatrix& m) {
    double mx = 0.0;
    for (const cplx& v : m.data()) mx = std::max(mx, std::abs(v));
    return mx;
}

HermitianMatrix::HermitianMatrix(int n) : n_(n), data_(static_cast<size_t>(n) * n) {
    check_dim(n);
}

HermitianMatrix HermitianMatrix::from_entries(int n, const std::vector<cplx>& raw) {
    check_dim(n);
    if (raw.size() != static_cast<size_t>(n) * n)
        throw DimensionError("from_entries: expected " + std::to_string(n * n) + " entries, got " +
                             std::to_string(raw.size()));

    double max_entry = 0.0, max_asym = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const cplx mij = raw[static_cast<size_t>(i) * n + j];
            max_entry = std::max(max_entry, std::abs(mij));
            const cplx asym = mij - std::conj(raw[static_cast<size_t>(j) * n + i]);
            max_asym = std::max(max_asym, std::abs(asym));
        }
    }
    if (max_asym > 1e-9 * max_entry)
        throw HermiticityError("input deviates from Hermitian symmetry by " + std::to_string(max_asym));

    HermitianMatrix h(n);
    for (int i = 0; i < n; ++i) {
        h.data_[static_cast<size_t>(i) * n + i] = raw[static_cast<size_t>(i) * n + i].real();
        for (int j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (raw[static_cast<size_t>(i) * n + j] +
                                    std::conj(raw[static_cast<size_t>(j) * n + i]));
            h.data_[static_cast<size_t>(i) * n + j] = avg;
            h.data_[static_cast<size_t>(j) * n + i] = std::conj(avg);
        }
    }
    return h;
}

HermitianMatrix HermitianMatrix::from_cmatrix(const CMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("from_cmatrix: matrix not square");
    return from_entries(m.rows(), m.data());
}

HermitianMatrix HermitianMatrix::identity(int n) { return scalar(n, 1.0); }

HermitianMatrix HermitianMatrix::scalar(int n, double a) {
    HermitianMatrix h(n);
    for (int i = 0; i < n; ++i) h.data_[static_cast<size_t>(i) * n + i] = a;
    return h;
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
    HermitianMatrix h(static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) h.data_[i * d.size() + i] = d[i];
    return h;
}

void HermitianMatrix::set(int i, int j, cplx v) {
    if (i == j) {
        data_[static_cast<size_t>(i) * n_ + i] = v.real();
    } else {
        data_[static_cast<size_t>(i) * n_ + j] = v;
        data_[static_cast<size_t>(j) * n_ + i] = std::conj(v);
    }
}

double HermitianMatrix::entry_max_abs() const {
    double mx = 0.0;
    for (const cplx& v : data_) mx = std::max(mx, std::abs(v));
    return mx;
}

double HermitianMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double HermitianMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i).real();
    return t;
}

CMatrix HermitianMatrix::to_cmatrix() const {
    CMatrix m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& rhs) {
    if (rhs.n_ != n_) throw DimensionError("operator+=: dimension mismatch");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& rhs) {
    if (rhs.n_ != n_) throw DimensionError("operator-=: dimension mismatch");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
    for (cplx& v : data_) v *= s;
    return *this;
}

HermitianMatrix direct_sum(const HermitianMatrix& a, const HermitianMatrix& b) {
    const int n = a.n() + b.n();
    HermitianMatrix out(n);
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) out.set(i, j, a(i, j));
    for (int i = 0; i < b.n(); ++i)
        for (int j = 0; j < b.n(); ++j) out.set(a.n() + i, a.n() + j, b(i, j));
    return out;
}

HermitianMatrix pad_with_zeros(const HermitianMatrix& a, int total) {
    if (total < a.n()) throw DimensionError("pad_with_zeros: target smaller than input");
    HermitianMatrix out(total);
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) out.set(i, j, a(i, j));
    return out;
}

double commutator_max_abs(const HermitianMatrix& a, const HermitianMatrix& b) {
    const CMatrix ab = matmul(a.to_cmatrix(), b.to_cmatrix());
    const CMatrix ba = matmul(b.to_cmatrix(), a.to_cmatrix());
    double mx = 0.0;
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) mx = std::max(mx, std::abs(ab(i, j) - ba(i, j)));
    return mx;
}

}  // namespace majolab
