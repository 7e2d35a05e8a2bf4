#include "majolab/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>
#include <vector>

#include "majolab/checks.hpp"
#include "majolab/delta.hpp"
#include "majolab/eig.hpp"
#include "majolab/majorization.hpp"
#include "majolab/matfun.hpp"
#include "majolab/random.hpp"

namespace majolab {

namespace {

CMatrix gaussian_factor(Rng& rng, int n) {
    CMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.cgaussian();
    return g;
}

Q2Instance sample_q2_instance(Rng& rng, int dim) {
    Q2Instance inst;
    inst.factor_x = gaussian_factor(rng, dim);
    inst.factor_y = gaussian_factor(rng, dim);
    inst.knot = rng.uniform(0.25, 1.25);
    return inst;
}

Q2Instance perturb_q2_instance(Rng& rng, const Q2Instance& base, double step_scale) {
    const double step = step_scale * rng.uniform(0.2, 1.8);
    Q2Instance inst = base;
    const int n = inst.factor_x.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            inst.factor_x(i, j) += step * rng.cgaussian();
            inst.factor_y(i, j) += step * rng.cgaussian();
        }
    inst.knot = std::max(1e-3, inst.knot + 0.1 * step * rng.gaussian());
    return inst;
}

// (M - t)_+ from a precomputed decomposition of M.
HermitianMatrix shifted_positive_part(const SpectralDecomposition& sd, double t) {
    const int n = static_cast<int>(sd.eigenvalues.size());
    CMatrix scaled = sd.frame;
    for (int j = 0; j < n; ++j) {
        const double v = std::max(sd.eigenvalues[j] - t, 0.0);
        for (int i = 0; i < n; ++i) scaled(i, j) *= v;
    }
    return HermitianMatrix::from_cmatrix(matmul(scaled, sd.frame.adjoint()));
}

// The delta-form q2 objective: deficit of
// delta((Y-t)_+; Y) prec_w delta((X+Y-t)_+ - (X-t)_+; Y).
TrialReport eval_q2_objective(const Q2Instance& inst) {
    const HermitianMatrix x = psd_from_factor(inst.factor_x);
    const HermitianMatrix y = psd_from_factor(inst.factor_y);
    const double t = inst.knot;

    const SpectralDecomposition sd_y = eigh(y);
    const HermitianMatrix lhs = shifted_positive_part(sd_y, t);
    const HermitianMatrix rhs = shifted_positive_part(eigh(x + y), t) -
                                shifted_positive_part(eigh(x), t);

    const DeltaVector dl = delta_vector(lhs, sd_y);
    const DeltaVector dr = delta_vector(rhs, sd_y);
    const MajorizationVerdict v = weak_major_no_rearrange(dl.entries, dr.entries, 0.0);

    TrialReport r;
    r.check_id = "q2.delta";
    r.margin = v.deficit;
    r.worst_k = v.worst_k;
    r.status = v.deficit > 0.0 ? "violation" : "ok";
    r.add_param("t", t);
    return r;
}

TrialReport eval_q1_trial(Rng& rng, int dim, double tol) {
    const HermitianMatrix a = random_psd(rng, dim);
    const HermitianMatrix b = random_psd(rng, dim);
    const double slope = rng.uniform(0.0, 2.0);
    const double knot = rng.uniform(0.2, 1.5);
    const PiecewiseFn g(0.0, slope, {{1.0, knot}});
    TrialReport r = check_q1(a, b, g, tol);
    r.add_fn("g", g);
    if (r.margin > tol) {
        r.add_matrix("A", a);
        r.add_matrix("B", b);
    }
    return r;
}

TrialReport eval_q3_trial(Rng& rng, int dim, double tol) {
    const HermitianMatrix b = random_psd(rng, dim);
    const HermitianMatrix delta = random_psd(rng, dim);
    const double drop = rng.uniform(0.5, 1.0);
    const double knot = rng.uniform(0.2, 1.5);
    const PiecewiseFn f(0.0, 1.0, {{-drop, knot}});
    TrialReport r = check_q3(b, delta, f, tol);
    r.add_fn("f", f);
    if (r.margin > tol) {
        r.add_matrix("B", b);
        r.add_matrix("Delta", delta);
    }
    return r;
}

struct TrialEval {
    TrialReport report;
    std::optional<Q2Instance> instance;
};

}  // namespace

HermitianMatrix psd_from_factor(const CMatrix& g) {
    const int n = g.rows();
    CMatrix scaled = g;
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scaled(i, j) *= s;
    return HermitianMatrix::from_cmatrix(matmul(scaled, scaled.adjoint()));
}

CMatrix factor_from_psd(const HermitianMatrix& x) {
    const SpectralDecomposition sd = eigh(x);
    const int n = x.n();
    CMatrix scaled = sd.frame;
    const double root_n = std::sqrt(static_cast<double>(n));
    for (int j = 0; j < n; ++j) {
        const double v = root_n * std::sqrt(std::max(sd.eigenvalues[j], 0.0));
        for (int i = 0; i < n; ++i) scaled(i, j) *= v;
    }
    return matmul(scaled, sd.frame.adjoint());
}

bool is_theorem_backed(const std::string& checker_id) {
    static const std::set<std::string> ids = {"ineq1.concave", "ineq2.convex",  "thm1.concave",
                                              "thm1.convex_cor", "tru",          "prop4",
                                              "andozhan.transfer", "prop3.equiv"};
    return ids.count(checker_id) > 0;
}

TrialReport run_checker_trial(const std::string& checker_id, int dim, std::uint64_t seed,
                              double tol, int max_knots, double fn_scale,
                              const std::optional<PiecewiseFn>& fixed_fn) {
    Rng rng(seed);
    TrialReport r;

    auto sampled_concave = [&]() {
        return fixed_fn ? *fixed_fn : sample_concave(rng.next_u64(), max_knots, fn_scale);
    };
    auto sampled_convex = [&]() {
        return fixed_fn ? *fixed_fn : sample_convex(rng.next_u64(), max_knots, fn_scale);
    };

    if (checker_id == "ineq1.concave") {
        const HermitianMatrix a = random_psd(rng, dim);
        const HermitianMatrix b = random_psd(rng, dim);
        const PiecewiseFn f = sampled_concave();
        r = check_subadd_concave(a, b, f, tol);
        r.add_fn("f", f);
    } else if (checker_id == "ineq2.convex") {
        const HermitianMatrix a = random_psd(rng, dim);
        const HermitianMatrix b = random_psd(rng, dim);
        const PiecewiseFn g = sampled_convex();
        r = check_superadd_convex(a, b, g, tol);
        r.add_fn("g", g);
    } else if (checker_id == "q1") {
        const HermitianMatrix a = random_psd(rng, dim);
        const HermitianMatrix b = random_psd(rng, dim);
        const PiecewiseFn g = sampled_convex();
        r = check_q1(a, b, g, tol);
        r.add_fn("g", g);
        if (r.margin > tol) {
            r.add_matrix("A", a);
            r.add_matrix("B", b);
        }
    } else if (checker_id == "q2.norm" || checker_id == "q2.star") {
        const HermitianMatrix b = random_psd(rng, dim);
        const HermitianMatrix delta = random_psd(rng, dim);
        const PiecewiseFn g = sampled_convex();
        const Q2Reports both = check_q2(b, delta, g, tol);
        r = checker_id == "q2.norm" ? both.norm_form : both.star_form;
        r.add_fn("g", g);
        if (r.margin > tol) {
            r.add_matrix("B", b);
            r.add_matrix("Delta", delta);
        }
    } else if (checker_id == "q3") {
        const HermitianMatrix b = random_psd(rng, dim);
        const HermitianMatrix delta = random_psd(rng, dim);
        const PiecewiseFn f = sampled_concave();
        r = check_q3(b, delta, f, tol);
        r.add_fn("f", f);
        if (r.margin > tol) {
            r.add_matrix("B", b);
            r.add_matrix("Delta", delta);
        }
    } else if (checker_id == "thm1.concave" || checker_id == "thm1.convex_cor") {
        // Deliberately include near-boundary instances A = ||B||_inf + eps*PSD;
        // the inequality is tight at the boundary.
        const HermitianMatrix b = random_psd(rng, dim);
        static constexpr double kEps[3] = {0.0, 1e-3, 1.0};
        const double eps = kEps[seed % 3];
        const double interior_shift = (seed % 6 >= 3) ? std::abs(rng.gaussian()) : 0.0;
        HermitianMatrix a = HermitianMatrix::scalar(dim, op_norm(b) + interior_shift);
        if (eps > 0.0) a += eps * random_psd(rng, dim);
        if (checker_id == "thm1.concave") {
            const PiecewiseFn g = sampled_concave();
            r = check_thm1(a, b, g, tol);
            r.add_fn("g", g);
        } else {
            const PiecewiseFn f = sampled_convex();
            r = check_thm1_convex_cor(a, b, f, tol);
            r.add_fn("f", f);
        }
        r.add_param("eps", eps);
    } else if (checker_id == "tru") {
        const HermitianMatrix a = random_psd(rng, dim);
        const HermitianMatrix b = random_psd(rng, dim);
        static constexpr double kU[4] = {0.0, 0.5, 1.0, 2.0};
        r = check_tru(a, b, kU[seed % 4], tol);
    } else if (checker_id == "prop4") {
        const HermitianMatrix a = random_psd(rng, dim);
        const HermitianMatrix b = random_psd(rng, dim);
        const PiecewiseFn f = sampled_concave().with_constant(0.0);
        r = check_prop4(a, b, f, tol);
        r.add_fn("f", f);
    } else if (checker_id == "andozhan.transfer") {
        const HermitianMatrix a = random_psd(rng, dim);
        const HermitianMatrix b = random_psd(rng, dim);
        const PiecewiseFn f = sampled_concave().with_constant(0.0);
        r = check_ando_zhan_inverse(a, b, f, tol);
        r.add_fn("f", f);
    } else if (checker_id == "prop3.equiv") {
        const auto [a, b] = random_codiagonal_pair(rng, dim);
        const HermitianMatrix c =
            (seed % 2 == 0) ? b + random_psd(rng, dim) : random_hermitian(rng, dim);
        r = check_prop3_equiv(a, b, c, default_a_grid(), 0.0, tol);
        r.add_param("c_dominates_b", seed % 2 == 0 ? 1.0 : 0.0);
    } else {
        throw DomainError("unknown checker id: " + checker_id);
    }

    r.seed = seed;
    r.add_param("seed", static_cast<double>(seed));
    r.add_param("dim", dim);
    return r;
}

SearchOutcome search(const SearchConfig& config, const ReportSink& sink) {
    if (config.n_trials < 1) throw DomainError("search: n_trials must be >= 1");
    const bool is_q2 = config.question_id == "q2";
    const bool is_question =
        is_q2 || config.question_id == "q1" || config.question_id == "q3" ||
        config.question_id == "q2.norm" || config.question_id == "q2.star";
    if (!is_question && !is_theorem_backed(config.question_id))
        throw DomainError("unknown search target: " + config.question_id);

    const long round_size = std::max<long>(1, config.restart_every);
    const int workers = std::max(1, config.workers);

    SearchOutcome out;
    std::optional<Q2Instance> base = config.init;
    bool base_is_real_trial = false;

    auto eval_one = [&](long i) -> TrialEval {
        const std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(i);
        TrialEval ev;
        if (is_q2) {
            Rng rng(seed);
            // One fresh restart per round; everything else perturbs the best
            // instance of the completed rounds (or the provided init).
            const bool fresh = !base || (base_is_real_trial && i % round_size == 0);
            Q2Instance inst = fresh ? sample_q2_instance(rng, config.dim)
                                    : perturb_q2_instance(rng, *base, config.step_scale);
            ev.report = eval_q2_objective(inst);
            ev.instance = std::move(inst);
        } else if (config.question_id == "q1") {
            Rng rng(seed);
            ev.report = eval_q1_trial(rng, config.dim, config.tol);
        } else if (config.question_id == "q3") {
            Rng rng(seed);
            ev.report = eval_q3_trial(rng, config.dim, config.tol);
        } else {
            ev.report = run_checker_trial(config.question_id, config.dim, seed, config.tol,
                                          config.max_knots, config.fn_scale);
        }
        ev.report.trial = i;
        ev.report.seed = seed;
        return ev;
    };

    long done = 0;
    double prefix_best = -std::numeric_limits<double>::infinity();
    while (done < config.n_trials) {
        const long count = std::min(round_size, config.n_trials - done);
        std::vector<TrialEval> results(count);

        if (workers == 1 || count == 1) {
            for (long j = 0; j < count; ++j) results[j] = eval_one(done + j);
        } else {
            std::vector<std::thread> pool;
            std::atomic<long> next{0};
            for (int w = 0; w < workers; ++w) {
                pool.emplace_back([&] {
                    for (long j = next.fetch_add(1); j < count; j = next.fetch_add(1))
                        results[j] = eval_one(done + j);
                });
            }
            for (std::thread& th : pool) th.join();
        }

        for (long j = 0; j < count; ++j) {
            TrialEval& ev = results[j];
            const long i = done + j;
            const double m = ev.report.margin;
            const bool improved = m > prefix_best;
            prefix_best = std::max(prefix_best, m);
            if (is_q2 && ev.instance && (improved || m > 0.0)) {
                ev.report.add_matrix("X", psd_from_factor(ev.instance->factor_x));
                ev.report.add_matrix("Y", psd_from_factor(ev.instance->factor_y));
            }
            if (sink) sink(ev.report);
            if (m > out.best_margin) {
                out.best_margin = m;
                out.best_trial = i;
                out.best_report = ev.report;
                if (ev.instance) out.best_instance = ev.instance;
            }
        }
        done += count;
        // Climb from the best instance seen in completed rounds.
        if (is_q2 && out.best_instance) {
            base = out.best_instance;
            base_is_real_trial = true;
        }
        if (out.best_margin >= config.margin_goal) break;
    }

    out.trials_run = done;
    out.anomaly = is_theorem_backed(config.question_id) && out.best_margin > config.tol;

    if (is_q2 && out.best_margin > 0.0 && out.best_instance) {
        try {
            TrialReport lifted = alpha_lift_q2(psd_from_factor(out.best_instance->factor_x),
                                               psd_from_factor(out.best_instance->factor_y),
                                               out.best_instance->knot, config.tol);
            lifted.trial = done;
            lifted.seed = config.base_seed;
            out.lifted = std::move(lifted);
        } catch (const DomainError&) {
            // Y not strictly PD; the delta-form finding stands on its own.
        }
    }
    return out;
}

TrialReport alpha_lift_q2(const HermitianMatrix& x, const HermitianMatrix& y, double knot,
                          double tol) {
    const HermitianMatrix one_t = HermitianMatrix::scalar(x.n(), knot);
    const HermitianMatrix d = positive_part(x + y - one_t) - positive_part(x - one_t);
    const double lam_min_d = min_eigenvalue(d);
    const double lam_min_y = min_eigenvalue(y);
    if (lam_min_y <= 1e-9)
        throw DomainError("alpha_lift_q2: Delta must be strictly PD (min eigenvalue " +
                          std::to_string(lam_min_y) + ")");

    const double alpha0 = std::ceil(std::max(0.0, -lam_min_d) / lam_min_y) + 1.0;
    TrialReport last;
    for (double alpha = alpha0; alpha <= 1e12; alpha *= 10.0) {
        const PiecewiseFn lifted_fn(0.0, alpha, {{1.0, knot}});
        Q2Reports both = check_q2(x, y, lifted_fn, tol);
        both.norm_form.add_value("alpha", alpha);
        both.norm_form.add_value("alpha_psd_threshold", alpha0);
        both.norm_form.add_fn("g", lifted_fn);
        if (both.norm_form.margin > tol) {
            both.norm_form.add_matrix("B", x);
            both.norm_form.add_matrix("Delta", y);
            return both.norm_form;
        }
        last = both.norm_form;
    }
    last.status = "lift_failed";
    return last;
}

}  // namespace majolab
