#include "majolab/piecewise.hpp"

#include <algorithm>
#include <cmath>

#include "majolab/rng.hpp"

namespace majolab {

PiecewiseFn::PiecewiseFn(double c, double a, std::vector<AngleTerm> terms, FnDomain domain)
    : c_(c), a_(a), terms_(std::move(terms)), domain_(domain) {
    double prev = -1.0;
    for (const AngleTerm& t : terms_) {
        if (t.knot < 0.0) throw DomainError("PiecewiseFn: knot below 0");
        if (t.knot <= prev) throw DomainError("PiecewiseFn: knots not strictly increasing");
        prev = t.knot;
    }
}

PiecewiseFn PiecewiseFn::identity(FnDomain domain) { return PiecewiseFn(0.0, 1.0, {}, domain); }

PiecewiseFn PiecewiseFn::angle_pos(double t) { return PiecewiseFn(0.0, 0.0, {{1.0, t}}); }

PiecewiseFn PiecewiseFn::angle_min(double t) { return PiecewiseFn(0.0, 1.0, {{-1.0, t}}); }

double PiecewiseFn::eval(double x) const {
    if (domain_ == FnDomain::nonneg_axis) {
        if (x < -1e-9) throw DomainError("PiecewiseFn: argument " + std::to_string(x) +
                                         " below domain [0, inf)");
        if (x < 0.0) x = 0.0;
    }
    double y = c_ + a_ * x;
    for (const AngleTerm& t : terms_)
        if (x > t.knot) y += t.weight * (x - t.knot);
    return y;
}

double PiecewiseFn::segment_slope(int i) const {
    double s = a_;
    for (int j = 0; j <= i && j < static_cast<int>(terms_.size()); ++j) s += terms_[j].weight;
    return s;
}

PiecewiseFn PiecewiseFn::negate() const {
    std::vector<AngleTerm> t = terms_;
    for (AngleTerm& term : t) term.weight = -term.weight;
    return PiecewiseFn(-c_, -a_, std::move(t), domain_);
}

PiecewiseFn PiecewiseFn::operator+(const PiecewiseFn& rhs) const {
    std::vector<AngleTerm> merged;
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < rhs.terms_.size()) {
        if (j == rhs.terms_.size() ||
            (i < terms_.size() && terms_[i].knot < rhs.terms_[j].knot)) {
            merged.push_back(terms_[i++]);
        } else if (i == terms_.size() || rhs.terms_[j].knot < terms_[i].knot) {
            merged.push_back(rhs.terms_[j++]);
        } else {
            merged.push_back({terms_[i].weight + rhs.terms_[j].weight, terms_[i].knot});
            ++i, ++j;
        }
    }
    return PiecewiseFn(c_ + rhs.c_, a_ + rhs.a_, std::move(merged), domain_);
}

PiecewiseFn PiecewiseFn::with_constant(double c) const { return PiecewiseFn(c, a_, terms_, domain_); }

PiecewiseFn PiecewiseFn::invert() const {
    if (std::abs(c_) > 0.0) throw DomainError("invert: requires f(0) = 0");
    const int m = static_cast<int>(terms_.size());
    for (int i = -1; i < m; ++i)
        if (segment_slope(i) <= 0.0) throw DomainError("invert: f not strictly increasing");

    // Breakpoints of the inverse sit at the images of the knots; segment
    // slopes invert.
    std::vector<AngleTerm> inv_terms;
    inv_terms.reserve(terms_.size());
    for (int i = 0; i < m; ++i) {
        const double image = eval(terms_[i].knot);
        inv_terms.push_back({1.0 / segment_slope(i) - 1.0 / segment_slope(i - 1), image});
    }
    return PiecewiseFn(0.0, 1.0 / segment_slope(-1), std::move(inv_terms), domain_);
}

FnClassification classify(const PiecewiseFn& f) {
    bool any_pos = false, any_neg = false;
    for (const AngleTerm& t : f.terms()) {
        if (t.weight > 0.0) any_pos = true;
        if (t.weight < 0.0) any_neg = true;
    }
    FnShape shape = FnShape::neither;
    if (!any_pos && !any_neg)
        shape = FnShape::affine;
    else if (!any_neg)
        shape = FnShape::convex;
    else if (!any_pos)
        shape = FnShape::concave;

    const int m = static_cast<int>(f.terms().size());
    bool increasing = true;
    for (int i = -1; i < m; ++i)
        if (f.segment_slope(i) < 0.0) increasing = false;

    // A piecewise-linear function is non-negative on [0, inf) iff it is
    // non-negative at 0 and at every knot and its final slope is >= 0.
    bool nonneg = f.eval(0.0) >= 0.0 && f.segment_slope(m - 1) >= 0.0;
    for (const AngleTerm& t : f.terms())
        if (f.eval(t.knot) < 0.0) nonneg = false;

    return {shape, nonneg, f.eval(0.0) == 0.0, increasing};
}

PiecewiseFn sample_concave(std::uint64_t seed, int max_knots, double scale) {
    Rng rng(seed);
    const int k = rng.uniform_int(1, std::max(1, max_knots));
    std::vector<AngleTerm> terms(k);
    double knot = 0.0, total_drop = 0.0;
    for (int i = 0; i < k; ++i) {
        knot += 0.05 * scale + rng.uniform(0.0, 0.6 * scale);
        terms[i].knot = knot;
        terms[i].weight = -rng.uniform(0.05, 1.0);
        total_drop -= terms[i].weight;
    }
    const double c = rng.uniform(0.0, 0.5 * scale);
    const double a = total_drop + rng.uniform(0.0, 1.0);
    return PiecewiseFn(c, a, std::move(terms));
}

PiecewiseFn sample_convex(std::uint64_t seed, int max_knots, double scale) {
    Rng rng(seed);
    const int k = rng.uniform_int(1, std::max(1, max_knots));
    std::vector<AngleTerm> terms(k);
    double knot = 0.0;
    for (int i = 0; i < k; ++i) {
        knot += 0.05 * scale + rng.uniform(0.0, 0.6 * scale);
        terms[i].knot = knot;
        terms[i].weight = rng.uniform(0.05, 1.0);
    }
    const double a = rng.uniform(0.0, 2.0);
    return PiecewiseFn(0.0, a, std::move(terms));
}

}  // namespace majolab
