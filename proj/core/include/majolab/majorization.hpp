#pragma once

#include <span>
#include <vector>

#include "majolab/matrix.hpp"

namespace majolab {

/// Outcome of a partial-sum comparison sum_{j<=k} a_j <= sum_{j<=k} b_j.
/// deficit = max_k (sum_a - sum_b); positive deficit means the relation is
/// violated, and worst_k (1-based) is the first maximizing index. The signed
/// deficit doubles as a search score.
struct MajorizationVerdict {
    bool holds;
    int worst_k;
    double deficit;
    std::vector<double> partial_sums_a;
    std::vector<double> partial_sums_b;
};

/// Singular values of a Hermitian matrix: |eigenvalues| sorted descending.
std::vector<double> singular_values(const HermitianMatrix& h);

/// Ky Fan norm: sum of the k largest singular values, 1 <= k <= n.
double kyfan_norm(const HermitianMatrix& h, int k);

/// Schatten p-norm, p >= 1; p = infinity gives the operator norm.
double schatten_norm(const HermitianMatrix& h, double p);

/// Operator norm, = kyfan_norm(h, 1).
double op_norm(const HermitianMatrix& h);

/// Partial sums compared in the given order, no sorting.
MajorizationVerdict weak_major_no_rearrange(std::span<const double> a, std::span<const double> b,
                                            double tol);

/// Classical weak majorization: both vectors sorted descending first.
MajorizationVerdict weak_major_sorted(std::span<const double> a, std::span<const double> b,
                                      double tol);

}  // namespace majolab
