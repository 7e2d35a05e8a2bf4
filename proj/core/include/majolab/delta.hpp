#pragma once

#include <vector>

#include "majolab/eig.hpp"
#include "majolab/majorization.hpp"
#include "majolab/matrix.hpp"
#include "majolab/trial_report.hpp"

namespace majolab {

/// Eigenvalue clusters of a sorted spectrum: distinct values (strictly
/// decreasing), their multiplicities, and the member indices each cluster
/// absorbed.
struct SpectrumClusters {
    std::vector<double> distinct_values;
    std::vector<int> multiplicities;
    std::vector<std::vector<int>> member_indices;

    int count() const { return static_cast<int>(distinct_values.size()); }
};

/// Single-linkage clustering along the sorted chain: consecutive eigenvalues
/// are merged iff their gap is below gap_tol. Each cluster's distinct value
/// is the mean of its members.
SpectrumClusters cluster_spectrum(const std::vector<double>& eigenvalues_desc, double gap_tol);

/// The vector delta(B;A): per eigenvalue cluster of A, the descending
/// spectrum of the compression of B onto that eigenspace, concatenated in
/// cluster order. Its partial sums are the one-sided directional derivatives
/// d/dt+ sum_{j<=k} lambda_j(A + tB) at t = 0.
struct DeltaVector {
    std::vector<double> entries;
    SpectrumClusters clusters;
    std::vector<std::vector<double>> block_spectra;
    /// Set when A's spectrum has gaps inside [1e-9, 1e-6]; the cluster
    /// split is numerically ambiguous there and entries may be unstable.
    bool small_gap_warning = false;
};

/// Default cluster gap tolerance for A: 1e-7 * (1 + max|eigenvalue|).
double default_gap_tol(const std::vector<double>& eigenvalues_desc);

/// Compute delta(B;A). gap_tol <= 0 selects the default tolerance.
DeltaVector delta_vector(const HermitianMatrix& b, const HermitianMatrix& a, double gap_tol = 0.0);

/// Same, reusing a precomputed decomposition of A.
DeltaVector delta_vector(const HermitianMatrix& b, const SpectralDecomposition& a_sd,
                         double gap_tol = 0.0);

/// One-sided difference quotient
/// [sum_{j<=k} lambda_j(A + tB) - sum_{j<=k} lambda_j(A)] / t, t > 0.
double delta_fd_oracle(const HermitianMatrix& b, const HermitianMatrix& a, int k, double t);

/// Dominated majorization: is B A-majorized by C, i.e. does
/// delta(B;A) prec_w delta(C;A) hold without rearrangement?
MajorizationVerdict a_majorizes(const HermitianMatrix& a, const HermitianMatrix& b,
                                const HermitianMatrix& c, double gap_tol, double tol);

/// Samples the hypothesis sum_{j<=k} lambda_j(aA+B) <= sum_{j<=k} lambda_j(aA+C)
/// on a grid of a values and evaluates the conclusion a_majorizes(A,B,C).
/// A sampled-true hypothesis with a false conclusion is flagged as an
/// anomaly.
TrialReport check_prop_ainf(const HermitianMatrix& a, const HermitianMatrix& b,
                            const HermitianMatrix& c, const std::vector<double>& a_grid,
                            double gap_tol, double tol);

/// Default grid for the "all a >= a0" hypotheses.
const std::vector<double>& default_a_grid();

/// Co-diagonal equivalence check (requires A, B co-diagonal): verifies that
/// the three relations
///   (1) lambda(aA+B) prec_w lambda(aA+C) for all sampled a,
///   (2) delta(B;A) prec_w delta(C;A),
///   (3) delta(aA+B;A) prec_w delta(aA+C;A) for all sampled a
/// are mutually consistent. The reported margin combines the exact
/// residual between the deficits of (2) and (3) (they agree identically by
/// shift covariance) and, when (2) holds, the worst sampled deficit of (1)
/// (implied by (2) for every a >= 0). The limit a -> infinity of (1) is (2)
/// itself, so the grid is implicitly augmented with its exact limit point.
TrialReport check_prop3_equiv(const HermitianMatrix& a, const HermitianMatrix& b,
                              const HermitianMatrix& c, const std::vector<double>& a_grid,
                              double gap_tol, double tol);

}  // namespace majolab
