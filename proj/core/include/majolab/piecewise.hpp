#pragma once

#include <cstdint>
#include <vector>

#include "majolab/matrix.hpp"

namespace majolab {

/// One angle term b * (x - t)_+.
struct AngleTerm {
    double weight;
    double knot;
};

enum class FnDomain {
    nonneg_axis,  // defined on [0, inf); evaluation clamps [-1e-9, 0) to 0
    all_reals,
};

enum class FnShape { convex, concave, affine, neither };

struct FnClassification {
    FnShape shape;
    bool nonnegative;     // f >= 0 on [0, inf)
    bool zero_at_origin;  // f(0) == 0
    bool increasing;      // non-decreasing on [0, inf)
};

/// Piecewise-linear scalar function f(x) = c + a*x + sum_i b_i * (x - t_i)_+
/// with knots t_i strictly increasing and >= 0. Evaluation is exact; the
/// representation is closed under addition, negation and (for strictly
/// increasing f with f(0) = 0) inversion.
class PiecewiseFn {
public:
    PiecewiseFn(double c, double a, std::vector<AngleTerm> terms,
                FnDomain domain = FnDomain::nonneg_axis);

    static PiecewiseFn identity(FnDomain domain = FnDomain::nonneg_axis);
    /// x |-> (x - t)_+
    static PiecewiseFn angle_pos(double t);
    /// x |-> x - (x - t)_+ = min(x, t)
    static PiecewiseFn angle_min(double t);

    double eval(double x) const;
    double operator()(double x) const { return eval(x); }

    double constant() const { return c_; }
    double slope() const { return a_; }
    const std::vector<AngleTerm>& terms() const { return terms_; }
    FnDomain domain() const { return domain_; }

    /// Slope on the segment after knot index i (i = -1 for the segment
    /// before the first knot).
    double segment_slope(int i) const;

    PiecewiseFn negate() const;
    PiecewiseFn operator+(const PiecewiseFn& rhs) const;
    PiecewiseFn with_constant(double c) const;

    /// Inverse of a strictly increasing f with f(0) = 0, again as a
    /// PiecewiseFn. Throws DomainError if any segment slope is <= 0 or
    /// f(0) != 0.
    PiecewiseFn invert() const;

private:
    double c_, a_;
    std::vector<AngleTerm> terms_;
    FnDomain domain_;
};

FnClassification classify(const PiecewiseFn& f);

/// Random non-negative increasing concave function: c + a*x - sum b_i (x-t_i)_+
/// with c, a, b_i >= 0 and a - sum b_i >= 0. Deterministic in the seed.
PiecewiseFn sample_concave(std::uint64_t seed, int max_knots, double scale);

/// Random non-negative increasing convex function with f(0) = 0:
/// a*x + sum b_i (x-t_i)_+ with a, b_i >= 0. Deterministic in the seed.
PiecewiseFn sample_convex(std::uint64_t seed, int max_knots, double scale);

}  // namespace majolab
