#include "majolab/delta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "majolab/eig.hpp"

namespace majolab {

SpectrumClusters cluster_spectrum(const std::vector<double>& eigenvalues_desc, double gap_tol) {
    if (gap_tol <= 0.0) throw DomainError("cluster_spectrum: gap_tol must be positive");
    SpectrumClusters out;
    const int n = static_cast<int>(eigenvalues_desc.size());
    int i = 0;
    while (i < n) {
        int j = i;
        while (j + 1 < n && eigenvalues_desc[j] - eigenvalues_desc[j + 1] < gap_tol) ++j;
        std::vector<int> members(j - i + 1);
        double sum = 0.0;
        for (int k = i; k <= j; ++k) {
            members[k - i] = k;
            sum += eigenvalues_desc[k];
        }
        out.distinct_values.push_back(sum / static_cast<double>(members.size()));
        out.multiplicities.push_back(static_cast<int>(members.size()));
        out.member_indices.push_back(std::move(members));
        i = j + 1;
    }
    return out;
}

double default_gap_tol(const std::vector<double>& eigenvalues_desc) {
    double mx = 0.0;
    for (double v : eigenvalues_desc) mx = std::max(mx, std::abs(v));
    return 1e-7 * (1.0 + mx);
}

DeltaVector delta_vector(const HermitianMatrix& b, const HermitianMatrix& a, double gap_tol) {
    if (a.n() != b.n()) throw DimensionError("delta_vector: dimension mismatch");
    return delta_vector(b, eigh(a), gap_tol);
}

DeltaVector delta_vector(const HermitianMatrix& b, const SpectralDecomposition& sd,
                         double gap_tol) {
    const int n = b.n();
    if (static_cast<int>(sd.eigenvalues.size()) != n)
        throw DimensionError("delta_vector: dimension mismatch");
    if (gap_tol <= 0.0) gap_tol = default_gap_tol(sd.eigenvalues);

    DeltaVector out;
    out.clusters = cluster_spectrum(sd.eigenvalues, gap_tol);
    for (int j = 0; j + 1 < n; ++j) {
        const double gap = sd.eigenvalues[j] - sd.eigenvalues[j + 1];
        if (gap >= 1e-9 && gap <= 1e-6) out.small_gap_warning = true;
    }

    const CMatrix bc = b.to_cmatrix();
    out.entries.reserve(n);
    for (int ci = 0; ci < out.clusters.count(); ++ci) {
        const std::vector<int>& members = out.clusters.member_indices[ci];
        const int r = static_cast<int>(members.size());
        if (r == 1) {
            // <v|B|v> for the single eigenvector.
            cplx acc = 0.0;
            const int col = members[0];
            for (int i = 0; i < n; ++i) {
                cplx row = 0.0;
                for (int j = 0; j < n; ++j) row += bc(i, j) * sd.frame(j, col);
                acc += std::conj(sd.frame(i, col)) * row;
            }
            out.block_spectra.push_back({acc.real()});
        } else {
            // Compression V^* B V on the cluster's eigenvector sub-frame.
            CMatrix sub(n, r);
            for (int j = 0; j < r; ++j)
                for (int i = 0; i < n; ++i) sub(i, j) = sd.frame(i, members[j]);
            const CMatrix comp = matmul(sub.adjoint(), matmul(bc, sub));
            out.block_spectra.push_back(eigenvalues_desc(HermitianMatrix::from_cmatrix(comp)));
        }
        const std::vector<double>& bs = out.block_spectra.back();
        out.entries.insert(out.entries.end(), bs.begin(), bs.end());
    }
    return out;
}

double delta_fd_oracle(const HermitianMatrix& b, const HermitianMatrix& a, int k, double t) {
    if (t <= 0.0) throw DomainError("delta_fd_oracle: t must be positive");
    const HermitianMatrix perturbed = a + t * b;
    return (top_k_eigenvalue_sum(perturbed, k) - top_k_eigenvalue_sum(a, k)) / t;
}

MajorizationVerdict a_majorizes(const HermitianMatrix& a, const HermitianMatrix& b,
                                const HermitianMatrix& c, double gap_tol, double tol) {
    const DeltaVector db = delta_vector(b, a, gap_tol);
    const DeltaVector dc = delta_vector(c, a, gap_tol);
    return weak_major_no_rearrange(db.entries, dc.entries, tol);
}

const std::vector<double>& default_a_grid() {
    static const std::vector<double> grid = {1.0, 2.0, 5.0, 10.0, 100.0, 1000.0};
    return grid;
}

TrialReport check_prop_ainf(const HermitianMatrix& a, const HermitianMatrix& b,
                            const HermitianMatrix& c, const std::vector<double>& a_grid,
                            double gap_tol, double tol) {
    TrialReport report;
    report.check_id = "prop_ainf";

    bool hypothesis = true;
    double worst_grid_deficit = -std::numeric_limits<double>::infinity();
    double first_failing_a = 0.0;
    for (double av : a_grid) {
        const std::vector<double> lb = eigenvalues_desc(av * a + b);
        const std::vector<double> lc = eigenvalues_desc(av * a + c);
        const MajorizationVerdict v = weak_major_no_rearrange(lb, lc, tol);
        report.add_value("hypothesis_deficit_a=" + std::to_string(av), v.deficit);
        worst_grid_deficit = std::max(worst_grid_deficit, v.deficit);
        if (!v.holds && hypothesis) {
            hypothesis = false;
            first_failing_a = av;
        }
    }

    const MajorizationVerdict conclusion = a_majorizes(a, b, c, gap_tol, tol);
    report.add_value("conclusion_deficit", conclusion.deficit);
    report.add_flag("hypothesis_sampled_true", hypothesis);
    report.add_flag("conclusion_true", conclusion.holds);
    if (!hypothesis) report.add_value("first_failing_a", first_failing_a);

    report.worst_k = conclusion.worst_k;
    report.anomaly = hypothesis && !conclusion.holds;
    report.margin = report.anomaly ? conclusion.deficit : std::min(worst_grid_deficit, 0.0);
    report.status = report.anomaly ? "anomaly" : "ok";
    return report;
}

TrialReport check_prop3_equiv(const HermitianMatrix& a, const HermitianMatrix& b,
                              const HermitianMatrix& c, const std::vector<double>& a_grid,
                              double gap_tol, double tol) {
    TrialReport report;
    report.check_id = "prop3.equiv";

    const DeltaVector db = delta_vector(b, a, gap_tol);
    const DeltaVector dc = delta_vector(c, a, gap_tol);
    const MajorizationVerdict pp2 = weak_major_no_rearrange(db.entries, dc.entries, tol);
    report.add_value("pp2_deficit", pp2.deficit);

    const int n = a.n();
    double shift_residual = 0.0;  // |pp3 partial-sum gap - pp2 partial-sum gap|, exact in theory
    double worst_pp1 = -std::numeric_limits<double>::infinity();
    bool pp1_grid_holds = true;

    for (double av : a_grid) {
        const HermitianMatrix ab = av * a + b;
        const HermitianMatrix ac = av * a + c;

        const std::vector<double> lb = eigenvalues_desc(ab);
        const std::vector<double> lc = eigenvalues_desc(ac);
        const MajorizationVerdict pp1 = weak_major_no_rearrange(lb, lc, tol);
        worst_pp1 = std::max(worst_pp1, pp1.deficit);
        if (!pp1.holds) pp1_grid_holds = false;

        const DeltaVector db3 = delta_vector(ab, a, gap_tol);
        const DeltaVector dc3 = delta_vector(ac, a, gap_tol);
        double sb2 = 0.0, sc2 = 0.0, sb3 = 0.0, sc3 = 0.0;
        for (int k = 0; k < n; ++k) {
            sb2 += db.entries[k];
            sc2 += dc.entries[k];
            sb3 += db3.entries[k];
            sc3 += dc3.entries[k];
            shift_residual = std::max(shift_residual, std::abs((sb3 - sc3) - (sb2 - sc2)));
        }
    }
    report.add_value("pp1_worst_deficit", worst_pp1);
    report.add_value("pp2_pp3_shift_residual", shift_residual);
    report.add_flag("pp1_grid_holds", pp1_grid_holds);
    report.add_flag("pp2_holds", pp2.holds);

    // pp2 implies pp1 for every a >= 0; the grid limit a -> infinity of pp1
    // is pp2 itself, which closes the reverse direction.
    double margin = shift_residual;
    if (pp2.holds) margin = std::max(margin, worst_pp1);
    if (pp1_grid_holds && !pp2.holds)
        report.add_flag("pp1_grid_true_pp2_false_grid_too_coarse", true);

    report.margin = margin;
    report.worst_k = pp2.worst_k;
    report.anomaly = margin > tol;
    report.status = report.anomaly ? "anomaly" : "ok";
    return report;
}

}  // namespace majolab
