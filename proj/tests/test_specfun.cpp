#include <doctest.h>

#include <cmath>

#include "majolab/piecewise.hpp"
#include "majolab/rng.hpp"

using namespace majolab;

TEST_CASE("eval: angle functions are exact") {
    const PiecewiseFn min1 = PiecewiseFn::angle_min(1.0);  // x - (x-1)_+
    CHECK(min1.eval(2.0) == 1.0);
    CHECK(min1.eval(0.5) == 0.5);

    const PiecewiseFn g(0.0, 1.0, {{1.0, 1.0}});  // x + (x-1)_+
    CHECK(g.eval(0.9) == 0.9);
    CHECK(g.eval(1.5) == 2.0);

    const PiecewiseFn g101(0.0, 101.0, {{1.0, 1.0}});
    CHECK(g101.eval(1.0) == 101.0);

    CHECK_THROWS_AS(g.eval(-0.5), DomainError);
    CHECK(g.eval(-5e-10) == 0.0);  // clamp band
}

TEST_CASE("knot validation") {
    CHECK_THROWS_AS(PiecewiseFn(0.0, 1.0, {{1.0, -0.5}}), DomainError);
    CHECK_THROWS_AS(PiecewiseFn(0.0, 1.0, {{1.0, 1.0}, {1.0, 1.0}}), DomainError);
    CHECK_THROWS_AS(PiecewiseFn(0.0, 1.0, {{1.0, 2.0}, {1.0, 1.0}}), DomainError);
}

TEST_CASE("classify: shapes and flags") {
    const FnClassification convex = classify(PiecewiseFn(0.0, 1.0, {{1.0, 1.0}}));
    CHECK(convex.shape == FnShape::convex);
    CHECK(convex.zero_at_origin);
    CHECK(convex.increasing);
    CHECK(convex.nonnegative);

    const FnClassification concave = classify(PiecewiseFn::angle_min(1.0));
    CHECK(concave.shape == FnShape::concave);
    CHECK(concave.zero_at_origin);
    CHECK(concave.increasing);

    // -(x-1)_+ alone: concave but decreasing past the knot.
    const FnClassification drop = classify(PiecewiseFn(0.0, 0.0, {{-1.0, 1.0}}));
    CHECK(drop.shape == FnShape::concave);
    CHECK(!drop.increasing);

    CHECK(classify(PiecewiseFn::identity()).shape == FnShape::affine);
    CHECK(classify(PiecewiseFn(0.0, 1.0, {{1.0, 0.5}, {-1.0, 1.5}})).shape == FnShape::neither);
}

TEST_CASE("sampling: determinism and construction guarantees") {
    const PiecewiseFn a = sample_convex(5, 5, 1.0);
    const PiecewiseFn b = sample_convex(5, 5, 1.0);
    CHECK(a.slope() == b.slope());
    REQUIRE(a.terms().size() == b.terms().size());
    for (size_t i = 0; i < a.terms().size(); ++i) {
        CHECK(a.terms()[i].weight == b.terms()[i].weight);
        CHECK(a.terms()[i].knot == b.terms()[i].knot);
    }

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const FnClassification cx = classify(sample_convex(seed, 5, 1.0));
        CHECK(cx.shape == FnShape::convex);
        CHECK(cx.zero_at_origin);
        CHECK(cx.increasing);
        CHECK(cx.nonnegative);

        const FnClassification cc = classify(sample_concave(seed, 5, 1.0));
        CHECK((cc.shape == FnShape::concave || cc.shape == FnShape::affine));
        CHECK(cc.nonnegative);
        CHECK(cc.increasing);
    }
}

TEST_CASE("sampled convex functions satisfy exact midpoint convexity") {
    Rng rng(123);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const PiecewiseFn f = sample_convex(seed, 5, 1.0);
        CHECK(f.eval(0.0) == 0.0);
        const double hi = 2.0 * f.terms().back().knot + 1.0;
        for (int pair = 0; pair < 100; ++pair) {
            const double x = rng.uniform(0.0, hi);
            const double y = rng.uniform(0.0, hi);
            CHECK(f.eval(0.5 * (x + y)) <= 0.5 * (f.eval(x) + f.eval(y)) + 1e-12);
        }
    }
}

TEST_CASE("negate flips convex to concave") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const PiecewiseFn f = sample_convex(seed, 4, 1.0);
        CHECK(classify(f.negate()).shape == FnShape::concave);
    }
}

TEST_CASE("sum merges knot lists exactly") {
    const PiecewiseFn f(0.0, 1.0, {{1.0, 1.0}});
    const PiecewiseFn g(0.5, 2.0, {{0.5, 1.0}, {1.0, 2.0}});
    const PiecewiseFn s = f + g;
    CHECK(s.terms().size() == 2);
    CHECK(s.eval(3.0) == f.eval(3.0) + g.eval(3.0));
    CHECK(s.eval(1.5) == f.eval(1.5) + g.eval(1.5));
}

TEST_CASE("invert: closed-form example and round trip") {
    // f(x) = x - (1/2)(x-1)_+ inverts to g(x) = x for x<=1, 2x-1 beyond.
    const PiecewiseFn f(0.0, 1.0, {{-0.5, 1.0}});
    const PiecewiseFn g = f.invert();
    CHECK(g.eval(0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g.eval(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g.eval(1.5) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(g.eval(2.0) == doctest::Approx(3.0).epsilon(1e-15));

    for (int i = 0; i <= 40; ++i) {
        const double x = 0.1 * i;
        CHECK(std::abs(g.eval(f.eval(x)) - x) <= 1e-9);
    }

    CHECK(classify(g).shape == FnShape::convex);

    const PiecewiseFn id = PiecewiseFn::identity();
    CHECK(id.invert().eval(3.0) == 3.0);

    // Slope reaching zero is not invertible.
    const PiecewiseFn flat(0.0, 1.0, {{-1.0, 1.0}});
    CHECK_THROWS_AS(flat.invert(), DomainError);
    // Nonzero value at the origin is rejected too.
    CHECK_THROWS_AS(PiecewiseFn(1.0, 1.0, {}).invert(), DomainError);
}
