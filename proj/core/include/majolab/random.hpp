#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "majolab/matrix.hpp"
#include "majolab/rng.hpp"

namespace majolab {

/// G*G^*/n with i.i.d. standard complex Gaussian entries in G; full rank
/// almost surely, eigenvalues O(1).
HermitianMatrix random_psd(Rng& rng, int n);
HermitianMatrix random_psd(std::uint64_t seed, int n);

/// (G + G^*)/2.
HermitianMatrix random_hermitian(Rng& rng, int n);
HermitianMatrix random_hermitian(std::uint64_t seed, int n);

/// diag(|gaussian|) sorted descending.
HermitianMatrix random_diagonal_psd(Rng& rng, int n);
HermitianMatrix random_diagonal_psd(std::uint64_t seed, int n);

/// V diag(repeated values) V^* with a Haar-ish random unitary V and exactly
/// the requested eigenvalue multiplicities; distinct values are kept at
/// least 0.25 apart so the cluster structure is unambiguous.
HermitianMatrix random_psd_degenerate(Rng& rng, int n, const std::vector<int>& multiplicities);
HermitianMatrix random_psd_degenerate(std::uint64_t seed, int n,
                                      const std::vector<int>& multiplicities);

/// Pair (A, B) simultaneously diagonal in a common random frame, both
/// diagonals sorted non-increasing in that frame.
std::pair<HermitianMatrix, HermitianMatrix> random_codiagonal_pair(Rng& rng, int n);
std::pair<HermitianMatrix, HermitianMatrix> random_codiagonal_pair(std::uint64_t seed, int n);

/// Random unitary: eigenvector frame of a random Hermitian matrix.
CMatrix random_unitary(Rng& rng, int n);

}  // namespace majolab
