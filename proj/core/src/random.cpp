#include "majolab/random.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "majolab/eig.hpp"

namespace majolab {

namespace {

CMatrix gaussian_matrix(Rng& rng, int n) {
    CMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.cgaussian();
    return g;
}

}  // namespace

HermitianMatrix random_psd(Rng& rng, int n) {
    CMatrix g = gaussian_matrix(rng, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) *= scale;
    return HermitianMatrix::from_cmatrix(matmul(g, g.adjoint()));
}

HermitianMatrix random_hermitian(Rng& rng, int n) {
    const CMatrix g = gaussian_matrix(rng, n);
    HermitianMatrix h(n);
    for (int i = 0; i < n; ++i) {
        h.set(i, i, 0.5 * (g(i, i) + std::conj(g(i, i))));
        for (int j = i + 1; j < n; ++j) h.set(i, j, 0.5 * (g(i, j) + std::conj(g(j, i))));
    }
    return h;
}

HermitianMatrix random_diagonal_psd(Rng& rng, int n) {
    std::vector<double> d(n);
    for (double& v : d) v = std::abs(rng.gaussian());
    std::sort(d.begin(), d.end(), std::greater<>());
    return HermitianMatrix::diagonal(d);
}

CMatrix random_unitary(Rng& rng, int n) { return eigh(random_hermitian(rng, n)).frame; }

HermitianMatrix random_psd_degenerate(Rng& rng, int n, const std::vector<int>& multiplicities) {
    int total = 0;
    for (int r : multiplicities) {
        if (r < 1) throw DomainError("random_psd_degenerate: multiplicity below 1");
        total += r;
    }
    if (total != n)
        throw DomainError("random_psd_degenerate: multiplicities sum to " + std::to_string(total) +
                          ", expected " + std::to_string(n));

    const int m = static_cast<int>(multiplicities.size());
    // Distinct values descending with gaps >= 0.25, all > 0.
    std::vector<double> values(m);
    for (int i = 0; i < m; ++i)
        values[i] = 0.5 * static_cast<double>(m - i) + rng.uniform(0.0, 0.25);

    std::vector<double> spectrum;
    spectrum.reserve(n);
    for (int i = 0; i < m; ++i) spectrum.insert(spectrum.end(), multiplicities[i], values[i]);

    const CMatrix v = random_unitary(rng, n);
    CMatrix scaled = v;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) scaled(i, j) *= spectrum[j];
    return HermitianMatrix::from_cmatrix(matmul(scaled, v.adjoint()));
}

std::pair<HermitianMatrix, HermitianMatrix> random_codiagonal_pair(Rng& rng, int n) {
    const CMatrix v = random_unitary(rng, n);
    std::vector<double> da(n), db(n);
    for (double& x : da) x = std::abs(rng.gaussian());
    for (double& x : db) x = std::abs(rng.gaussian());
    std::sort(da.begin(), da.end(), std::greater<>());
    std::sort(db.begin(), db.end(), std::greater<>());

    auto assemble = [&](const std::vector<double>& d) {
        CMatrix scaled = v;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) scaled(i, j) *= d[j];
        return HermitianMatrix::from_cmatrix(matmul(scaled, v.adjoint()));
    };
    return {assemble(da), assemble(db)};
}

HermitianMatrix random_psd(std::uint64_t seed, int n) {
    Rng rng(seed);
    return random_psd(rng, n);
}

HermitianMatrix random_hermitian(std::uint64_t seed, int n) {
    Rng rng(seed);
    return random_hermitian(rng, n);
}

HermitianMatrix random_diagonal_psd(std::uint64_t seed, int n) {
    Rng rng(seed);
    return random_diagonal_psd(rng, n);
}

HermitianMatrix random_psd_degenerate(std::uint64_t seed, int n,
                                      const std::vector<int>& multiplicities) {
    Rng rng(seed);
    return random_psd_degenerate(rng, n, multiplicities);
}

std::pair<HermitianMatrix, HermitianMatrix> random_codiagonal_pair(std::uint64_t seed, int n) {
    Rng rng(seed);
    return random_codiagonal_pair(rng, n);
}

}  // namespace majolab
