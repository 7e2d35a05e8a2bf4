#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "majolab/matrix.hpp"
#include "majolab/piecewise.hpp"
#include "majolab/trial_report.hpp"

namespace majolab {

/// A point in the q2 search space: PSD matrices parameterized by their
/// Gaussian factors (X = Gx Gx^*/n stays PSD under factor perturbation)
/// plus the knot of the angle function.
struct Q2Instance {
    CMatrix factor_x;
    CMatrix factor_y;
    double knot = 1.0;
};

struct SearchConfig {
    std::string question_id = "q2";
    int dim = 3;
    long n_trials = 1000;
    std::uint64_t base_seed = 0;
    double step_scale = 0.15;
    long restart_every = 256;
    double margin_goal = std::numeric_limits<double>::infinity();
    int workers = 1;
    double tol = 1e-9;
    int max_knots = 5;
    double fn_scale = 1.0;
    /// Optional climb seed for q2 (used until a sampled trial beats it).
    std::optional<Q2Instance> init;
};

struct SearchOutcome {
    long trials_run = 0;
    double best_margin = -std::numeric_limits<double>::infinity();
    long best_trial = -1;
    TrialReport best_report;
    std::optional<Q2Instance> best_instance;  // q2 only
    bool anomaly = false;                     // theorem-backed target violated
    std::optional<TrialReport> lifted;        // q2: norm-form conversion
};

using ReportSink = std::function<void(const TrialReport&)>;

/// Randomized counterexample search. Trial i derives everything from seed
/// base_seed + i; q2 additionally hill-climbs by perturbing the best
/// instance of earlier rounds (rounds are restart_every trials long, with
/// one fresh restart trial per round). Reports are streamed to the sink in
/// trial order; content is independent of the worker count. Stops at
/// n_trials, or at the end of the round that reaches margin_goal.
SearchOutcome search(const SearchConfig& config, const ReportSink& sink = {});

/// One random trial of a named checker (used by the check CLI and by
/// search on theorem-backed targets). The fixed function, when given,
/// replaces the sampled one.
TrialReport run_checker_trial(const std::string& checker_id, int dim, std::uint64_t seed,
                              double tol, int max_knots = 5, double fn_scale = 1.0,
                              const std::optional<PiecewiseFn>& fixed_fn = std::nullopt);

/// Convert a delta-form q2 violation at (X, Y, knot) into a norm-form
/// counterexample for g(x) = alpha*x + (x-knot)_+. alpha starts at the
/// smallest value making g(X+Y)-g(X) PSD and escalates tenfold until the
/// norm-form margin turns positive. Throws DomainError when Y is not
/// strictly PD.
TrialReport alpha_lift_q2(const HermitianMatrix& x, const HermitianMatrix& y, double knot,
                          double tol);

/// X = G G^* / n for a factor G.
HermitianMatrix psd_from_factor(const CMatrix& g);

/// Hermitian square root times sqrt(n): a factor whose psd_from_factor
/// reproduces the input. Used to seed the climber at explicit matrices.
CMatrix factor_from_psd(const HermitianMatrix& x);

/// True for checkers backed by a theorem (positive margin = anomaly).
bool is_theorem_backed(const std::string& checker_id);

}  // namespace majolab
