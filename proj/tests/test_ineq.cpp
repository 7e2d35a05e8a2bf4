#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "majolab/checks.hpp"
#include "majolab/delta.hpp"
#include "majolab/eig.hpp"
#include "majolab/majorization.hpp"
#include "majolab/matfun.hpp"
#include "majolab/random.hpp"
#include "majolab/search.hpp"

using namespace majolab;

namespace {

const HermitianMatrix& q1_a() {
    static const HermitianMatrix a = HermitianMatrix::diagonal({0.9, 0.6});
    return a;
}
const HermitianMatrix& q1_b() {
    static const HermitianMatrix b =
        HermitianMatrix::from_entries(2, {cplx(0.8), cplx(0.5), cplx(0.5), cplx(0.4)});
    return b;
}
const HermitianMatrix& q3_b() {
    static const HermitianMatrix b = HermitianMatrix::from_entries(
        3, {cplx(0.701816), cplx(0.317887), cplx(0.198910),
            cplx(0.317887), cplx(1.014950), cplx(-0.093826),
            cplx(0.198910), cplx(-0.093826), cplx(0.274236)});
    return b;
}
const HermitianMatrix& q3_delta() {
    static const HermitianMatrix d = HermitianMatrix::diagonal({0.192713, 0.446505, 0.455416});
    return d;
}
const HermitianMatrix& xy_x() {
    static const HermitianMatrix x = HermitianMatrix::from_entries(
        3, {cplx(0.35614), cplx(-0.053243), cplx(0.10116),
            cplx(-0.053243), cplx(0.87456), cplx(0.40559),
            cplx(0.10116), cplx(0.40559), cplx(0.82474)});
    return x;
}
const HermitianMatrix& xy_y() {
    static const HermitianMatrix y = HermitianMatrix::diagonal({0.53642, 0.42018, 0.094866});
    return y;
}

// Scalar brute force over diagonal entries, independent of the matrix path.
double scalar_excess_max(const std::vector<double>& lhs, const std::vector<double>& rhs) {
    std::vector<double> l = lhs, r = rhs;
    std::sort(l.begin(), l.end(), std::greater<>());
    std::sort(r.begin(), r.end(), std::greater<>());
    double sa = 0.0, sb = 0.0, worst = -1e300;
    for (size_t k = 0; k < l.size(); ++k) {
        sa += l[k];
        sb += r[k];
        worst = std::max(worst, sa - sb);
    }
    return worst;
}

}  // namespace

TEST_CASE("ineq1.concave: identity gives equality, zero B collapses") {
    const HermitianMatrix a = random_psd(11, 3);
    const HermitianMatrix b = random_psd(12, 3);
    const PiecewiseFn id = PiecewiseFn::identity();
    const TrialReport eq = check_subadd_concave(a, b, id, 1e-9);
    CHECK(std::abs(eq.margin) <= 1e-10);
    CHECK(!eq.anomaly);

    const PiecewiseFn min1 = PiecewiseFn::angle_min(1.0);
    const TrialReport zer = check_subadd_concave(a, HermitianMatrix(3), min1, 1e-9);
    CHECK(std::abs(zer.margin) <= 1e-10);
}

TEST_CASE("ineq1.concave: theorem holds on random ensembles") {
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + t % 5;
        const TrialReport r = run_checker_trial("ineq1.concave", n, 100 + t, 1e-9);
        CHECK(r.margin <= 1e-9);
        CHECK(!r.anomaly);
    }
}

TEST_CASE("ineq1.concave: classification mismatch is an error") {
    const HermitianMatrix a = random_psd(13, 2);
    const PiecewiseFn convex(0.0, 1.0, {{1.0, 1.0}});
    CHECK_THROWS_AS(check_subadd_concave(a, a, convex, 1e-9), DomainError);
    const PiecewiseFn decreasing(1.0, 0.0, {{-1.0, 1.0}});
    CHECK_THROWS_AS(check_subadd_concave(a, a, decreasing, 1e-9), DomainError);
}

TEST_CASE("ineq2.convex: identity equality, theorem on random ensembles") {
    const HermitianMatrix a = random_psd(21, 3);
    const HermitianMatrix b = random_psd(22, 3);
    CHECK(std::abs(check_superadd_convex(a, b, PiecewiseFn::identity(), 1e-9).margin) <= 1e-10);

    for (int t = 0; t < 200; ++t) {
        const TrialReport r = run_checker_trial("ineq2.convex", 2 + t % 5, 200 + t, 1e-9);
        CHECK(r.margin <= 1e-9);
    }

    const PiecewiseFn concave = PiecewiseFn::angle_min(1.0);
    CHECK_THROWS_AS(check_superadd_convex(a, b, concave, 1e-9), DomainError);
}

TEST_CASE("ineq2.convex: scalar sanity g(2)+g(3) <= g(5)") {
    const PiecewiseFn g(0.0, 1.0, {{1.0, 1.0}});
    CHECK(g.eval(2.0) + g.eval(3.0) == 8.0);
    CHECK(g.eval(5.0) == 9.0);
    const HermitianMatrix a = HermitianMatrix::diagonal({2.0, 0.0});
    const HermitianMatrix b = HermitianMatrix::diagonal({3.0, 0.0});
    CHECK(check_superadd_convex(a, b, g, 1e-9).margin <= 1e-12);
}

TEST_CASE("monotone closure: sums of sampled convex functions still satisfy (2)") {
    for (int t = 0; t < 50; ++t) {
        const PiecewiseFn g1 = sample_convex(300 + t, 3, 1.0);
        const PiecewiseFn g2 = sample_convex(400 + t, 3, 1.0);
        const HermitianMatrix a = random_psd(500 + t, 3);
        const HermitianMatrix b = random_psd(600 + t, 3);
        CHECK(check_superadd_convex(a, b, g1 + g2, 1e-9).margin <= 1e-9);
    }
}

TEST_CASE("q1: published counterexample margin") {
    const PiecewiseFn g(0.0, 1.0, {{1.0, 1.0}});
    const TrialReport r = check_q1(q1_a(), q1_b(), g, 1e-9);
    CHECK(r.margin > 0.0);
    CHECK(r.worst_k == 1);
    CHECK(std::abs(r.margin - 0.00239) <= 1e-4);
    CHECK(r.status == "violation");
    CHECK(!r.anomaly);

    const TrialReport same = check_q1(q1_a(), q1_a(), g, 1e-9);
    CHECK(std::abs(same.margin) <= 1e-10);
}

TEST_CASE("q1: commuting A >= B stays non-positive, matching scalar brute force") {
    Rng rng(777);
    for (int t = 0; t < 50; ++t) {
        std::vector<double> db(3), da(3);
        for (int i = 0; i < 3; ++i) {
            db[i] = rng.uniform(0.0, 1.5);
            da[i] = db[i] + rng.uniform(0.0, 1.5);  // A >= B entrywise
        }
        const PiecewiseFn g(0.0, rng.uniform(0.1, 2.0), {{rng.uniform(0.1, 1.0), 1.0}});
        const TrialReport r =
            check_q1(HermitianMatrix::diagonal(da), HermitianMatrix::diagonal(db), g, 1e-9);
        CHECK(r.margin <= 1e-9);

        std::vector<double> lhs(3), rhs(3);
        for (int i = 0; i < 3; ++i) {
            lhs[i] = g.eval(da[i] - db[i]);
            rhs[i] = g.eval(da[i]) - g.eval(db[i]);
        }
        CHECK(scalar_excess_max(lhs, rhs) <= 1e-12);
    }
}

TEST_CASE("q2: published g101 instance violates in both forms") {
    const PiecewiseFn g101(0.0, 101.0, {{1.0, 1.0}});
    const Q2Reports r = check_q2(xy_x(), xy_y(), g101, 1e-9);

    CHECK(*r.star_form.flag("difference_psd"));
    CHECK(r.star_form.margin > 0.0);
    CHECK(r.star_form.worst_k == 1);
    CHECK(std::abs(r.star_form.margin - 0.00018) <= 2e-4);

    // PSD difference means the norm form coincides with the star form.
    CHECK(r.norm_form.margin == doctest::Approx(r.star_form.margin).epsilon(1e-12));
}

TEST_CASE("q2: zero Delta gives zero on both sides") {
    const PiecewiseFn g(0.0, 1.0, {{1.0, 1.0}});
    const Q2Reports r = check_q2(random_psd(31, 3), HermitianMatrix(3), g, 1e-9);
    CHECK(std::abs(r.norm_form.margin) <= 1e-10);
    CHECK(std::abs(r.star_form.margin) <= 1e-10);
}

TEST_CASE("q2: commuting diagonal pair stays non-positive (scalar inequality)") {
    Rng rng(888);
    for (int t = 0; t < 50; ++t) {
        std::vector<double> b(3), d(3);
        for (int i = 0; i < 3; ++i) {
            b[i] = rng.uniform(0.0, 1.5);
            d[i] = rng.uniform(0.0, 1.5);
        }
        std::sort(b.begin(), b.end(), std::greater<>());
        std::sort(d.begin(), d.end(), std::greater<>());
        const PiecewiseFn g(0.0, rng.uniform(0.1, 2.0), {{rng.uniform(0.1, 1.0), 1.0}});
        const Q2Reports r =
            check_q2(HermitianMatrix::diagonal(b), HermitianMatrix::diagonal(d), g, 1e-9);
        CHECK(r.norm_form.margin <= 1e-9);

        // Scalar route: g(b+d) - g(b) >= g(d) for non-negative scalars.
        for (int i = 0; i < 3; ++i)
            CHECK(g.eval(b[i] + d[i]) - g.eval(b[i]) >= g.eval(d[i]) - 1e-12);
    }
}

TEST_CASE("q3: published counterexample margin at the operator norm") {
    const TrialReport r = check_q3(q3_b(), q3_delta(), PiecewiseFn::angle_min(1.0), 1e-9);
    CHECK(r.margin > 0.0);
    CHECK(std::abs(*r.value("opnorm_f_delta") - 0.455416) <= 1e-5);
    CHECK(std::abs(*r.value("opnorm_f_shifted_diff") - 0.455776) <= 1e-5);
    CHECK(std::abs(r.margin - 0.00036) <= 1e-5);

    const TrialReport zer =
        check_q3(HermitianMatrix(3), q3_delta(), PiecewiseFn::angle_min(1.0), 1e-9);
    CHECK(std::abs(zer.margin) <= 1e-10);
}

TEST_CASE("q3: commuting diagonal pair stays non-positive") {
    Rng rng(999);
    for (int t = 0; t < 50; ++t) {
        std::vector<double> b(4), d(4);
        for (int i = 0; i < 4; ++i) {
            b[i] = rng.uniform(0.0, 1.5);
            d[i] = rng.uniform(0.0, 1.5);
        }
        std::sort(b.begin(), b.end(), std::greater<>());
        std::sort(d.begin(), d.end(), std::greater<>());
        const PiecewiseFn f(0.0, 1.0, {{-rng.uniform(0.1, 1.0), rng.uniform(0.3, 1.2)}});
        const TrialReport r =
            check_q3(HermitianMatrix::diagonal(b), HermitianMatrix::diagonal(d), f, 1e-9);
        CHECK(r.margin <= 1e-9);
    }
}

TEST_CASE("thm1: scalar matrices with the closed-form square root") {
    const HermitianMatrix a = HermitianMatrix::scalar(2, 4.0);
    const HermitianMatrix b = HermitianMatrix::identity(2);
    const TrialReport r =
        check_thm1(a, b, [](double x) { return std::sqrt(std::max(x, 0.0)); }, 1e-9);
    CHECK(r.margin <= 0.0);
    // lambda(g(A)-g(B)) = 1, lambda(g(A-B)) = sqrt(3).
    CHECK(r.margin == doctest::Approx(1.0 - std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("thm1: identity function gives equality; precondition gate works") {
    const HermitianMatrix b = random_psd(41, 3);
    const HermitianMatrix a = HermitianMatrix::scalar(3, op_norm(b)) + random_psd(42, 3);
    CHECK(std::abs(check_thm1(a, b, PiecewiseFn::identity(), 1e-9).margin) <= 1e-10);

    // A too small: report precondition_unmet, not a violation.
    const HermitianMatrix small = 0.1 * HermitianMatrix::identity(3);
    const TrialReport pre = check_thm1(small, b, PiecewiseFn::identity(), 1e-9);
    CHECK(pre.status == "precondition_unmet");
    CHECK(!pre.anomaly);
}

TEST_CASE("thm1 both modes: theorem holds on random ensembles incl. boundary") {
    for (int t = 0; t < 200; ++t) {
        const TrialReport rc = run_checker_trial("thm1.concave", 2 + t % 4, 4300 + t, 1e-9);
        CHECK(rc.margin <= 1e-9);
        const TrialReport rx = run_checker_trial("thm1.convex_cor", 2 + t % 4, 4400 + t, 1e-9);
        CHECK(rx.margin <= 1e-9);
    }
}

TEST_CASE("tru: trivial cases and the block-embedding cross-check") {
    const HermitianMatrix one2 = HermitianMatrix::identity(2);
    CHECK(std::abs(check_tru(one2, one2, 0.0, 1e-9).margin) <= 1e-12);

    const HermitianMatrix a = random_psd(51, 3);
    const HermitianMatrix b = random_psd(52, 3);
    const double big = op_norm(a + b) + 1.0;
    CHECK(check_tru(a, b, big, 1e-9).margin <= 0.0);

    for (int t = 0; t < 100; ++t) {
        const int n = 2 + t % 4;
        const HermitianMatrix aa = random_psd(5300 + t, n);
        const HermitianMatrix bb = random_psd(5400 + t, n);
        for (double u : {0.0, 0.5, 1.0, 2.0}) {
            const TrialReport r = check_tru(aa, bb, u, 1e-9);
            CHECK(r.margin <= 1e-9);

            // Same quantity from the doubled block matrices.
            double lhs = 0.0, rhs = 0.0;
            for (double ev : eigenvalues_desc(direct_sum(aa, bb))) lhs += std::max(ev - u, 0.0);
            for (double ev : eigenvalues_desc(pad_with_zeros(aa + bb, 2 * n)))
                rhs += std::max(ev - u, 0.0);
            CHECK(std::abs((lhs - rhs) - r.margin) <= 1e-9);
        }
    }
}

TEST_CASE("prop4: identity function reduces to the spectrum, theorem holds on ensembles") {
    const HermitianMatrix a = random_psd(61, 3);
    const HermitianMatrix b = random_psd(62, 3);
    const TrialReport eq = check_prop4(a, b, PiecewiseFn::identity(), 1e-9);
    CHECK(*eq.value("main_deficit") <= 1e-10);
    CHECK(*eq.value("chain_residual") <= 1e-8);

    for (int t = 0; t < 60; ++t) {
        const TrialReport r = run_checker_trial("prop4", 2 + t % 4, 6300 + t, 1e-9);
        CHECK(r.margin <= 1e-9);
        CHECK(!r.anomaly);
    }
}

TEST_CASE("andozhan.transfer: identity and closed-form inverse pair") {
    const HermitianMatrix a = random_psd(71, 3);
    const HermitianMatrix b = random_psd(72, 3);
    CHECK(check_ando_zhan_inverse(a, b, PiecewiseFn::identity(), 1e-9).margin <= 1e-9);

    const PiecewiseFn f(0.0, 1.0, {{-0.5, 1.0}});
    const TrialReport r = check_ando_zhan_inverse(a, b, f, 1e-9);
    CHECK(r.margin <= 1e-9);
    CHECK(*r.value("inverse_residual") <= 1e-9);

    // Slope hitting zero is rejected.
    const PiecewiseFn flat(0.0, 1.0, {{-1.0, 1.0}});
    CHECK_THROWS_AS(check_ando_zhan_inverse(a, b, flat, 1e-9), DomainError);

    for (int t = 0; t < 60; ++t) {
        const TrialReport rr = run_checker_trial("andozhan.transfer", 2 + t % 4, 7300 + t, 1e-9);
        CHECK(rr.margin <= 1e-9);
    }
}

TEST_CASE("alpha lift: published instance converts to a norm-form counterexample") {
    const TrialReport lift = alpha_lift_q2(xy_x(), xy_y(), 1.0, 1e-9);
    CHECK(lift.status == "violation");
    CHECK(lift.margin > 0.0);
    CHECK(*lift.flag("difference_psd"));
    const double alpha = *lift.value("alpha");
    CHECK(alpha >= *lift.value("alpha_psd_threshold"));
    CHECK(std::abs(lift.margin - 0.00018) <= 1e-4);
}
