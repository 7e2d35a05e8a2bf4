#pragma once

#include <functional>

#include "majolab/matrix.hpp"
#include "majolab/piecewise.hpp"
#include "majolab/trial_report.hpp"

namespace majolab {

// One checker per inequality. Each returns a TrialReport whose margin is the
// worst signed violation over all Ky Fan indices: margin <= 0 means the
// inequality held. Checkers for proven theorems mark positive margins as
// anomalies; the open questions report them as findings.

/// lambda(f(A+B)) prec_w lambda(f(A)+f(B)) for non-negative increasing
/// concave f and PSD A, B. Checker id: ineq1.concave.
TrialReport check_subadd_concave(const HermitianMatrix& a, const HermitianMatrix& b,
                                 const PiecewiseFn& f, double tol);

/// lambda(g(A)+g(B)) prec_w lambda(g(A+B)) for non-negative convex g with
/// g(0) = 0. Checker id: ineq2.convex.
TrialReport check_superadd_convex(const HermitianMatrix& a, const HermitianMatrix& b,
                                  const PiecewiseFn& g, double tol);

/// Does |||g(A)-g(B)||| >= |||g(|A-B|)||| hold? Positive margin is a
/// counterexample. Checker id: q1.
TrialReport check_q1(const HermitianMatrix& a, const HermitianMatrix& b, const PiecewiseFn& g,
                     double tol);

/// Does |||g(B+Delta)-g(B)||| >= |||g(Delta)||| hold? The norm form uses
/// Ky Fan norms of the absolute value; the star form compares sorted
/// eigenvalues without the absolute value. Both report whether
/// g(B+Delta)-g(B) is PSD, the case where the two forms coincide.
struct Q2Reports {
    TrialReport norm_form;  // checker id q2.norm
    TrialReport star_form;  // checker id q2.star
};
Q2Reports check_q2(const HermitianMatrix& b, const HermitianMatrix& delta, const PiecewiseFn& g,
                   double tol);

/// Does |||f(B+Delta)-f(B)||| <= |||f(Delta)||| hold for concave f?
/// Checker id: q3.
TrialReport check_q3(const HermitianMatrix& b, const HermitianMatrix& delta, const PiecewiseFn& f,
                     double tol);

/// Entrywise eigenvalue inequality lambda_k(g(A-B)) >= lambda_k(g(A)-g(B))
/// for concave increasing non-negative g, under A >= ||B||_inf. When the
/// precondition is unmet the report says so instead of judging the
/// inequality. Checker id: thm1.concave.
TrialReport check_thm1(const HermitianMatrix& a, const HermitianMatrix& b, const PiecewiseFn& g,
                       double tol);

/// Scalar-callable variant for closed-form functions (sqrt, powers);
/// classification is the caller's responsibility.
TrialReport check_thm1(const HermitianMatrix& a, const HermitianMatrix& b,
                       const std::function<double(double)>& g, double tol);

/// Corollary mode: lambda_k(f(A-B)) <= lambda_k(f(A)-f(B)) for strictly
/// increasing convex f with f(0) = 0, under A >= ||B||_inf.
/// Checker id: thm1.convex_cor.
TrialReport check_thm1_convex_cor(const HermitianMatrix& a, const HermitianMatrix& b,
                                  const PiecewiseFn& f, double tol);

/// trace(A-u)_+ + trace(B-u)_+ <= trace(A+B-u)_+ for PSD A, B and u >= 0.
/// Checker id: tru.
TrialReport check_tru(const HermitianMatrix& a, const HermitianMatrix& b, double u, double tol);

/// delta(f(A+B);A+B) prec_w delta(f(A)+f(B);A+B) for concave f with
/// f(0) = 0, plus the angle-function reduction (with rearrangement) on a
/// knot grid and midpoint convexity of
/// F(t) = tr(delta((A-t)_+ + (B-t)_+; A+B) - u + t)_+. Checker id: prop4.
TrialReport check_prop4(const HermitianMatrix& a, const HermitianMatrix& b, const PiecewiseFn& f,
                        double tol);

/// Inverse-function transfer: for strictly increasing concave f with
/// f(0) = 0, builds g = f^{-1} and verifies the sub-additivity inequality
/// for f on (g(A), g(B)) together with the super-additivity inequality for
/// g on (A, B) that it implies. Checker id: andozhan.transfer.
TrialReport check_ando_zhan_inverse(const HermitianMatrix& a, const HermitianMatrix& b,
                                    const PiecewiseFn& f, double tol);

/// Minimum eigenvalue (PSD witness helper; PSD iff >= -tol).
double min_eigenvalue(const HermitianMatrix& h);

}  // namespace majolab
