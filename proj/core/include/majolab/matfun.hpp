#pragma once

#include <functional>

#include "majolab/eig.hpp"
#include "majolab/matrix.hpp"
#include "majolab/piecewise.hpp"

namespace majolab {

/// f(H) = frame * diag(f(lambda_1), ..., f(lambda_n)) * frame^*.
/// For domain-restricted f, eigenvalues in [-1e-9, 0) are clamped to 0 and
/// anything below that raises DomainError.
HermitianMatrix apply_fn(const HermitianMatrix& h, const PiecewiseFn& f);

/// Same spectral calculus for an arbitrary scalar callable (used for the
/// closed-form functions like sqrt that the piecewise representation cannot
/// hold). No domain checks; the caller owns the preconditions.
HermitianMatrix apply_fn(const HermitianMatrix& h, const std::function<double(double)>& f);

/// |H| = (H^2)^(1/2); for Hermitian input this is |.| applied to eigenvalues.
HermitianMatrix abs_matrix(const HermitianMatrix& h);

/// H_+ = (H + |H|)/2.
HermitianMatrix positive_part(const HermitianMatrix& h);

}  // namespace majolab
