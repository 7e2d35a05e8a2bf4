#include "majolab/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace majolab {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kConvergenceFactor = 1e-13;

double offdiag_frobenius(const CMatrix& m) {
    double s = 0.0;
    const int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing m(p,q). The 2x2 unitary is
//   [ c          s ]        s = sigma * beta/|beta|,  c^2 + sigma^2 = 1,
//   [ -conj(s)   c ]
// applied as m <- J^* m J, with the frame accumulating v <- v J.
void rotate(CMatrix& m, CMatrix& v, int p, int q) {
    const cplx beta = m(p, q);
    const double ab = std::abs(beta);
    if (ab == 0.0) return;

    const double alpha = m(p, p).real();
    const double gamma = m(q, q).real();
    const double theta = (alpha - gamma) / (2.0 * ab);
    // Smaller-magnitude root of t^2 - 2*theta*t - 1 = 0; overflow-safe.
    const double t = (theta >= 0.0 ? -1.0 : 1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const cplx s = (t * c / ab) * beta;
    const cplx sc = std::conj(s);

    const int n = m.rows();
    // m <- J^* m: rows p and q.
    for (int j = 0; j < n; ++j) {
        const cplx mp = m(p, j), mq = m(q, j);
        m(p, j) = c * mp - s * mq;
        m(q, j) = sc * mp + c * mq;
    }
    // m <- m J: columns p and q.
    for (int i = 0; i < n; ++i) {
        const cplx mp = m(i, p), mq = m(i, q);
        m(i, p) = c * mp - sc * mq;
        m(i, q) = s * mp + c * mq;
    }
    m(p, q) = 0.0;
    m(q, p) = 0.0;
    m(p, p) = m(p, p).real();
    m(q, q) = m(q, q).real();

    for (int i = 0; i < n; ++i) {
        const cplx vp = v(i, p), vq = v(i, q);
        v(i, p) = c * vp - sc * vq;
        v(i, q) = s * vp + c * vq;
    }
}

}  // namespace

SpectralDecomposition eigh(const HermitianMatrix& h) {
    const int n = h.n();
    CMatrix m = h.to_cmatrix();
    CMatrix v = CMatrix::identity(n);
    const double threshold = kConvergenceFactor * h.frobenius_norm();

    double off = offdiag_frobenius(m);
    int sweep = 0;
    while (off > threshold) {
        if (sweep++ >= kMaxSweeps) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) rotate(m, v, p, q);
        off = offdiag_frobenius(m);
    }
    if (off > threshold)
        throw ConvergenceError("eigh: no convergence after " + std::to_string(kMaxSweeps) +
                                   " sweeps, off-diagonal residual " + std::to_string(off),
                               off);

    // Sort non-increasing; ties keep ascending Jacobi column order.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return m(a, a).real() > m(b, b).real(); });

    SpectralDecomposition sd;
    sd.eigenvalues.resize(n);
    sd.frame = CMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        sd.eigenvalues[j] = m(order[j], order[j]).real();
        for (int i = 0; i < n; ++i) sd.frame(i, j) = v(i, order[j]);
    }
    return sd;
}

std::vector<double> eigenvalues_desc(const HermitianMatrix& h) { return eigh(h).eigenvalues; }

HermitianMatrix reconstruct(const SpectralDecomposition& sd) {
    const int n = static_cast<int>(sd.eigenvalues.size());
    CMatrix scaled = sd.frame;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) scaled(i, j) *= sd.eigenvalues[j];
    return HermitianMatrix::from_cmatrix(matmul(scaled, sd.frame.adjoint()));
}

double top_k_eigenvalue_sum(const HermitianMatrix& h, int k) {
    if (k < 1 || k > h.n()) throw DimensionError("top_k_eigenvalue_sum: k out of range");
    const std::vector<double> ev = eigenvalues_desc(h);
    double s = 0.0;
    for (int j = 0; j < k; ++j) s += ev[j];
    return s;
}

}  // namespace majolab
