#include "majolab/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "majolab/delta.hpp"
#include "majolab/eig.hpp"
#include "majolab/majorization.hpp"
#include "majolab/matfun.hpp"

namespace majolab {

namespace {

struct KScan {
    double margin = -std::numeric_limits<double>::infinity();
    int worst_k = 1;
};

// max over k of (a_k - b_k) for already-materialized per-k quantities.
KScan scan_excess(const std::vector<double>& a, const std::vector<double>& b) {
    KScan s;
    for (size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        if (d > s.margin) {
            s.margin = d;
            s.worst_k = static_cast<int>(k) + 1;
        }
    }
    return s;
}

std::vector<double> kyfan_table(const HermitianMatrix& h) {
    std::vector<double> s = singular_values(h);
    for (size_t k = 1; k < s.size(); ++k) s[k] += s[k - 1];
    return s;
}

void require_psd(const HermitianMatrix& h, const char* name) {
    const double mn = min_eigenvalue(h);
    if (mn < -1e-9)
        throw DomainError(std::string("matrix ") + name + " is not PSD (min eigenvalue " +
                          std::to_string(mn) + ")");
}

bool is_concave(const FnClassification& c) {
    return c.shape == FnShape::concave || c.shape == FnShape::affine;
}

bool is_convex(const FnClassification& c) {
    return c.shape == FnShape::convex || c.shape == FnShape::affine;
}

void finish_theorem_backed(TrialReport& r, double tol) {
    r.anomaly = r.margin > tol;
    r.status = r.anomaly ? "anomaly" : "ok";
}

void finish_question(TrialReport& r, double tol) {
    r.anomaly = false;
    r.status = r.margin > tol ? "violation" : "ok";
}

}  // namespace

double min_eigenvalue(const HermitianMatrix& h) {
    const std::vector<double> ev = eigenvalues_desc(h);
    return ev.back();
}

TrialReport check_subadd_concave(const HermitianMatrix& a, const HermitianMatrix& b,
                                 const PiecewiseFn& f, double tol) {
    const FnClassification c = classify(f);
    if (!is_concave(c) || !c.nonnegative || !c.increasing)
        throw DomainError("check_subadd_concave: f must be concave, non-negative and increasing");
    require_psd(a, "A");
    require_psd(b, "B");

    const std::vector<double> lhs = eigenvalues_desc(apply_fn(a + b, f));
    const std::vector<double> rhs = eigenvalues_desc(apply_fn(a, f) + apply_fn(b, f));
    const MajorizationVerdict v = weak_major_sorted(lhs, rhs, tol);

    TrialReport r;
    r.check_id = "ineq1.concave";
    r.margin = v.deficit;
    r.worst_k = v.worst_k;
    finish_theorem_backed(r, tol);
    return r;
}

TrialReport check_superadd_convex(const HermitianMatrix& a, const HermitianMatrix& b,
                                  const PiecewiseFn& g, double tol) {
    const FnClassification c = classify(g);
    if (!is_convex(c) || !c.nonnegative || !c.zero_at_origin)
        throw DomainError("check_superadd_convex: g must be convex, non-negative with g(0) = 0");
    require_psd(a, "A");
    require_psd(b, "B");

    const std::vector<double> lhs = eigenvalues_desc(apply_fn(a, g) + apply_fn(b, g));
    const std::vector<double> rhs = eigenvalues_desc(apply_fn(a + b, g));
    const MajorizationVerdict v = weak_major_sorted(lhs, rhs, tol);

    TrialReport r;
    r.check_id = "ineq2.convex";
    r.margin = v.deficit;
    r.worst_k = v.worst_k;
    finish_theorem_backed(r, tol);
    return r;
}

TrialReport check_q1(const HermitianMatrix& a, const HermitianMatrix& b, const PiecewiseFn& g,
                     double tol) {
    const HermitianMatrix lhs = apply_fn(abs_matrix(a - b), g);
    const HermitianMatrix rhs = apply_fn(a, g) - apply_fn(b, g);
    const KScan s = scan_excess(kyfan_table(lhs), kyfan_table(rhs));

    TrialReport r;
    r.check_id = "q1";
    r.margin = s.margin;
    r.worst_k = s.worst_k;
    r.add_value("opnorm_g_absdiff", kyfan_norm(lhs, 1));
    r.add_value("opnorm_g_diff", kyfan_norm(rhs, 1));
    finish_question(r, tol);
    return r;
}

Q2Reports check_q2(const HermitianMatrix& b, const HermitianMatrix& delta, const PiecewiseFn& g,
                   double tol) {
    const HermitianMatrix lhs = apply_fn(delta, g);
    const HermitianMatrix rhs = apply_fn(b + delta, g) - apply_fn(b, g);
    const double rhs_min_eig = min_eigenvalue(rhs);
    const bool rhs_psd = rhs_min_eig >= -1e-9;

    Q2Reports out;

    const KScan norm = scan_excess(kyfan_table(lhs), kyfan_table(rhs));
    out.norm_form.check_id = "q2.norm";
    out.norm_form.margin = norm.margin;
    out.norm_form.worst_k = norm.worst_k;
    out.norm_form.add_value("rhs_min_eigenvalue", rhs_min_eig);
    out.norm_form.add_flag("difference_psd", rhs_psd);
    finish_question(out.norm_form, tol);

    const MajorizationVerdict star =
        weak_major_sorted(eigenvalues_desc(lhs), eigenvalues_desc(rhs), tol);
    out.star_form.check_id = "q2.star";
    out.star_form.margin = star.deficit;
    out.star_form.worst_k = star.worst_k;
    out.star_form.add_value("rhs_min_eigenvalue", rhs_min_eig);
    out.star_form.add_flag("difference_psd", rhs_psd);
    finish_question(out.star_form, tol);

    return out;
}

TrialReport check_q3(const HermitianMatrix& b, const HermitianMatrix& delta, const PiecewiseFn& f,
                     double tol) {
    const HermitianMatrix lhs = apply_fn(b + delta, f) - apply_fn(b, f);
    const HermitianMatrix rhs = apply_fn(delta, f);
    const KScan s = scan_excess(kyfan_table(lhs), kyfan_table(rhs));

    TrialReport r;
    r.check_id = "q3";
    r.margin = s.margin;
    r.worst_k = s.worst_k;
    r.add_value("opnorm_f_shifted_diff", kyfan_norm(lhs, 1));
    r.add_value("opnorm_f_delta", kyfan_norm(rhs, 1));
    finish_question(r, tol);
    return r;
}

namespace {

TrialReport thm1_core(const HermitianMatrix& a, const HermitianMatrix& b,
                      const std::function<HermitianMatrix(const HermitianMatrix&)>& apply,
                      double tol) {
    TrialReport r;
    r.check_id = "thm1.concave";
    require_psd(a, "A");
    require_psd(b, "B");
    const double bound = min_eigenvalue(a) - op_norm(b);
    r.add_value("precondition_slack", bound);
    if (bound < -1e-9) {
        r.status = "precondition_unmet";
        r.margin = 0.0;
        return r;
    }
    const std::vector<double> lhs = eigenvalues_desc(apply(a) - apply(b));
    const std::vector<double> rhs = eigenvalues_desc(apply(a - b));
    const KScan s = scan_excess(lhs, rhs);  // entrywise, stronger than majorization
    r.margin = s.margin;
    r.worst_k = s.worst_k;
    finish_theorem_backed(r, tol);
    return r;
}

}  // namespace

TrialReport check_thm1(const HermitianMatrix& a, const HermitianMatrix& b, const PiecewiseFn& g,
                       double tol) {
    const FnClassification c = classify(g);
    if (!is_concave(c) || !c.nonnegative || !c.increasing)
        throw DomainError("check_thm1: g must be concave, non-negative and increasing");
    return thm1_core(a, b, [&](const HermitianMatrix& m) { return apply_fn(m, g); }, tol);
}

TrialReport check_thm1(const HermitianMatrix& a, const HermitianMatrix& b,
                       const std::function<double(double)>& g, double tol) {
    return thm1_core(a, b, [&](const HermitianMatrix& m) { return apply_fn(m, g); }, tol);
}

TrialReport check_thm1_convex_cor(const HermitianMatrix& a, const HermitianMatrix& b,
                                  const PiecewiseFn& f, double tol) {
    const FnClassification c = classify(f);
    if (!is_convex(c) || !c.nonnegative || !c.zero_at_origin)
        throw DomainError("check_thm1_convex_cor: f must be convex, non-negative with f(0) = 0");
    for (int i = -1; i < static_cast<int>(f.terms().size()); ++i)
        if (f.segment_slope(i) <= 0.0)
            throw DomainError("check_thm1_convex_cor: f must be strictly increasing");
    require_psd(a, "A");
    require_psd(b, "B");

    TrialReport r;
    r.check_id = "thm1.convex_cor";
    const double bound = min_eigenvalue(a) - op_norm(b);
    r.add_value("precondition_slack", bound);
    if (bound < -1e-9) {
        r.status = "precondition_unmet";
        return r;
    }

    // Corollary direction: lambda_k(f(A-B)) <= lambda_k(f(A)-f(B)).
    const std::vector<double> lhs = eigenvalues_desc(apply_fn(a - b, f));
    const std::vector<double> rhs = eigenvalues_desc(apply_fn(a, f) - apply_fn(b, f));
    const KScan s = scan_excess(lhs, rhs);
    r.margin = s.margin;
    r.worst_k = s.worst_k;
    finish_theorem_backed(r, tol);
    return r;
}

TrialReport check_tru(const HermitianMatrix& a, const HermitianMatrix& b, double u, double tol) {
    if (u < 0.0) throw DomainError("check_tru: u must be >= 0");
    require_psd(a, "A");
    require_psd(b, "B");
    auto trace_pos_above = [](const HermitianMatrix& m, double threshold) {
        double s = 0.0;
        for (double ev : eigenvalues_desc(m)) s += std::max(ev - threshold, 0.0);
        return s;
    };
    TrialReport r;
    r.check_id = "tru";
    const double lhs = trace_pos_above(a, u) + trace_pos_above(b, u);
    const double rhs = trace_pos_above(a + b, u);
    r.margin = lhs - rhs;
    r.add_value("lhs_trace", lhs);
    r.add_value("rhs_trace", rhs);
    r.add_param("u", u);
    finish_theorem_backed(r, tol);
    return r;
}

TrialReport check_prop4(const HermitianMatrix& a, const HermitianMatrix& b, const PiecewiseFn& f,
                        double tol) {
    const FnClassification c = classify(f);
    if (!is_concave(c) || !c.nonnegative || !c.increasing || !c.zero_at_origin)
        throw DomainError(
            "check_prop4: f must be concave, non-negative, increasing with f(0) = 0");
    require_psd(a, "A");
    require_psd(b, "B");

    const HermitianMatrix s = a + b;
    const SpectralDecomposition sd = eigh(s);
    const double gap_tol = default_gap_tol(sd.eigenvalues);

    TrialReport r;
    r.check_id = "prop4";

    // Main relation: delta(f(A+B);A+B) prec_w delta(f(A)+f(B);A+B).
    const DeltaVector d_lhs = delta_vector(apply_fn(s, f), sd, gap_tol);
    const DeltaVector d_rhs = delta_vector(apply_fn(a, f) + apply_fn(b, f), sd, gap_tol);
    const MajorizationVerdict main = weak_major_no_rearrange(d_lhs.entries, d_rhs.entries, tol);
    r.add_value("main_deficit", main.deficit);

    // f(A+B) commutes with A+B, so its delta is its sorted spectrum.
    const std::vector<double> spec_lhs = eigenvalues_desc(apply_fn(s, f));
    double chain_residual = 0.0;
    for (size_t i = 0; i < spec_lhs.size(); ++i)
        chain_residual = std::max(chain_residual, std::abs(spec_lhs[i] - d_lhs.entries[i]));
    r.add_value("chain_residual", chain_residual);

    // Angle reduction, with rearrangement, on the knot grid.
    std::set<double> knot_grid = {0.0, 0.25, 0.5, 1.0, 2.0};
    for (const AngleTerm& term : f.terms()) knot_grid.insert(term.knot);
    double angle_deficit = -std::numeric_limits<double>::infinity();
    for (double t : knot_grid) {
        const HermitianMatrix shifted_sum =
            positive_part(a - HermitianMatrix::scalar(a.n(), t)) +
            positive_part(b - HermitianMatrix::scalar(b.n(), t));
        const HermitianMatrix joint = positive_part(s - HermitianMatrix::scalar(s.n(), t));
        const DeltaVector dl = delta_vector(shifted_sum, sd, gap_tol);
        const DeltaVector dr = delta_vector(joint, sd, gap_tol);
        angle_deficit =
            std::max(angle_deficit, weak_major_sorted(dl.entries, dr.entries, tol).deficit);
    }
    r.add_value("angle_deficit", angle_deficit);

    // Midpoint convexity of F(t) = tr(delta((A-t)_+ + (B-t)_+; A+B) - u + t)_+
    // on a 41-point grid over [0, u].
    double convexity_excess = -std::numeric_limits<double>::infinity();
    for (double u : {0.5, 1.0, 2.0}) {
        constexpr int kGrid = 41;
        std::vector<double> fvals(kGrid);
        for (int i = 0; i < kGrid; ++i) {
            const double t = u * static_cast<double>(i) / (kGrid - 1);
            const HermitianMatrix shifted_sum =
                positive_part(a - HermitianMatrix::scalar(a.n(), t)) +
                positive_part(b - HermitianMatrix::scalar(b.n(), t));
            const DeltaVector dv = delta_vector(shifted_sum, sd, gap_tol);
            double fsum = 0.0;
            for (double e : dv.entries) fsum += std::max(e - u + t, 0.0);
            fvals[i] = fsum;
        }
        for (int i = 1; i + 1 < kGrid; ++i)
            convexity_excess =
                std::max(convexity_excess, fvals[i] - 0.5 * (fvals[i - 1] + fvals[i + 1]));
    }
    r.add_value("convexity_excess", convexity_excess);

    r.margin = std::max({main.deficit, angle_deficit, convexity_excess, chain_residual});
    r.worst_k = main.worst_k;
    finish_theorem_backed(r, tol);
    return r;
}

TrialReport check_ando_zhan_inverse(const HermitianMatrix& a, const HermitianMatrix& b,
                                    const PiecewiseFn& f, double tol) {
    const FnClassification c = classify(f);
    if (!is_concave(c) || !c.nonnegative)
        throw DomainError("check_ando_zhan_inverse: f must be concave and non-negative");
    const PiecewiseFn g = f.invert();  // rejects non-strictly-increasing f
    require_psd(a, "A");
    require_psd(b, "B");

    TrialReport r;
    r.check_id = "andozhan.transfer";

    double inverse_residual = 0.0;
    const double hi = (f.terms().empty() ? 1.0 : f.terms().back().knot) * 2.0 + 1.0;
    for (int i = 0; i <= 20; ++i) {
        const double x = hi * static_cast<double>(i) / 20.0;
        inverse_residual = std::max(inverse_residual, std::abs(g.eval(f.eval(x)) - x));
    }
    r.add_value("inverse_residual", inverse_residual);

    // Inequality (1) for f on the substituted pair (g(A), g(B)), then the
    // super-additivity inequality (2) for g on (A, B) that it transfers to.
    const TrialReport sub =
        check_subadd_concave(apply_fn(a, g), apply_fn(b, g), f, tol);
    const TrialReport super = check_superadd_convex(a, b, g, tol);
    r.add_value("subadd_margin_substituted", sub.margin);
    r.add_value("superadd_margin", super.margin);

    r.margin = std::max(sub.margin, super.margin);
    r.worst_k = sub.margin >= super.margin ? sub.worst_k : super.worst_k;
    finish_theorem_backed(r, tol);
    return r;
}

}  // namespace majolab
