#include "majolab/matfun.hpp"

#include <algorithm>
#include <cmath>

namespace majolab {

namespace {

HermitianMatrix from_spectrum(const SpectralDecomposition& sd, const std::vector<double>& values) {
    const int n = static_cast<int>(values.size());
    CMatrix scaled = sd.frame;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) scaled(i, j) *= values[j];
    return HermitianMatrix::from_cmatrix(matmul(scaled, sd.frame.adjoint()));
}

}  // namespace

HermitianMatrix apply_fn(const HermitianMatrix& h, const PiecewiseFn& f) {
    const SpectralDecomposition sd = eigh(h);
    std::vector<double> mapped(sd.eigenvalues.size());
    for (size_t j = 0; j < sd.eigenvalues.size(); ++j) {
        double x = sd.eigenvalues[j];
        if (f.domain() == FnDomain::nonneg_axis) {
            if (x < -1e-9)
                throw DomainError("apply_fn: eigenvalue " + std::to_string(x) +
                                  " below domain [0, inf)");
            if (x < 0.0) x = 0.0;
        }
        mapped[j] = f.eval(x);
    }
    return from_spectrum(sd, mapped);
}

HermitianMatrix apply_fn(const HermitianMatrix& h, const std::function<double(double)>& f) {
    const SpectralDecomposition sd = eigh(h);
    std::vector<double> mapped(sd.eigenvalues.size());
    for (size_t j = 0; j < sd.eigenvalues.size(); ++j) mapped[j] = f(sd.eigenvalues[j]);
    return from_spectrum(sd, mapped);
}

HermitianMatrix abs_matrix(const HermitianMatrix& h) {
    const SpectralDecomposition sd = eigh(h);
    std::vector<double> mapped(sd.eigenvalues.size());
    for (size_t j = 0; j < sd.eigenvalues.size(); ++j) mapped[j] = std::abs(sd.eigenvalues[j]);
    return from_spectrum(sd, mapped);
}

HermitianMatrix positive_part(const HermitianMatrix& h) {
    const SpectralDecomposition sd = eigh(h);
    std::vector<double> mapped(sd.eigenvalues.size());
    for (size_t j = 0; j < sd.eigenvalues.size(); ++j) mapped[j] = std::max(sd.eigenvalues[j], 0.0);
    return from_spectrum(sd, mapped);
}

}  // namespace majolab
