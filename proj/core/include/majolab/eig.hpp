#pragma once

#include <vector>

#include "majolab/matrix.hpp"

namespace majolab {

/// Eigendecomposition H = frame * diag(eigenvalues) * frame^*, eigenvalues
/// sorted non-increasing, frame columns orthonormal, column j paired with
/// eigenvalue j.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    CMatrix frame;
};

/// Cyclic Jacobi eigensolver for complex Hermitian matrices. Converges when
/// the off-diagonal Frobenius norm drops below 1e-13 * ||H||_F; capped at
/// 100 sweeps, after which a ConvergenceError carrying the residual is
/// thrown. Deterministic: identical input bits give identical output bits.
SpectralDecomposition eigh(const HermitianMatrix& h);

/// Eigenvalues only, sorted non-increasing.
std::vector<double> eigenvalues_desc(const HermitianMatrix& h);

/// frame * diag(eigenvalues) * frame^* as a Hermitian matrix.
HermitianMatrix reconstruct(const SpectralDecomposition& sd);

/// Sum of the k largest eigenvalues.
double top_k_eigenvalue_sum(const HermitianMatrix& h, int k);

}  // namespace majolab
