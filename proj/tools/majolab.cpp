// Command-line front end: reproduce published counterexamples, run randomized
// checker suites, search for new violations, and inspect delta vectors.
//
// Exit codes: 0 = all pass / no anomaly, 1 = violation where a theorem
// predicts none, 2 = usage error, 3 = reproduction mismatch.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "majolab/checks.hpp"
#include "majolab/delta.hpp"
#include "majolab/eig.hpp"
#include "majolab/matrix_io.hpp"
#include "majolab/registry.hpp"
#include "majolab/report.hpp"
#include "majolab/search.hpp"

namespace {

using namespace majolab;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct OutStream {
    std::unique_ptr<std::ofstream> file;
    std::ostream* os = &std::cout;

    explicit OutStream(const std::string& path) {
        if (!path.empty()) {
            file = std::make_unique<std::ofstream>(path);
            if (!*file) throw Error("cannot open output file " + path);
            os = file.get();
        }
    }
};

int cmd_reproduce(const std::string& target) {
    std::vector<std::string> ids;
    if (target == "all") {
        for (const RegistryCase& c : registry()) ids.push_back(c.case_id);
    } else {
        ids.push_back(target);
    }

    bool all_ok = true;
    for (const std::string& id : ids) {
        const TrialReport r = reproduce(id);
        const bool ok = reproduce_passed(r);
        all_ok = all_ok && ok;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << "  worst deviation beyond tolerance: "
                  << fmt17(r.margin) << "\n";
        if (!ok) {
            const RegistryCase& c = registry_case(id);
            for (const ExpectedQuantity& q : c.expected) {
                const auto v = r.value(q.id);
                std::cout << "    " << q.id << ": computed "
                          << (v ? fmt17(*v) : std::string("<missing>")) << ", expected "
                          << fmt17(q.value) << " +/- " << fmt17(q.tol) << "\n";
            }
            for (const auto& [name, val] : r.flags)
                std::cout << "    flag " << name << ": " << (val ? "true" : "false") << "\n";
        }
    }
    return all_ok ? 0 : 3;
}

int cmd_check(const std::string& checker_id, int dim, long trials, std::uint64_t seed, double tol,
              const std::string& fn_path, const std::string& out_path) {
    std::optional<PiecewiseFn> fixed_fn;
    if (!fn_path.empty()) fixed_fn = load_fn_file(fn_path);

    OutStream out(out_path);
    double worst = -std::numeric_limits<double>::infinity();
    long worst_trial = -1;
    bool any_anomaly = false;

    for (long i = 0; i < trials; ++i) {
        TrialReport r = run_checker_trial(checker_id, dim, seed + static_cast<std::uint64_t>(i),
                                          tol, 5, 1.0, fixed_fn);
        r.trial = i;
        write_jsonl(*out.os, r);
        if (r.margin > worst) {
            worst = r.margin;
            worst_trial = i;
        }
        any_anomaly = any_anomaly || r.anomaly;
    }

    std::cerr << checker_id << ": " << trials << " trials at dim " << dim << ", worst margin "
              << fmt17(worst) << " (trial " << worst_trial << ")\n";
    if (any_anomaly) {
        std::cerr << "ANOMALY: positive margin on a theorem-backed checker\n";
        return 1;
    }
    return 0;
}

int cmd_search(const std::string& question_id, int dim, long trials, std::uint64_t seed,
               int workers, double step_scale, long restart_every, double margin_goal, double tol,
               const std::string& out_path) {
    SearchConfig config;
    config.question_id = question_id;
    config.dim = dim;
    config.n_trials = trials;
    config.base_seed = seed;
    config.workers = workers;
    config.step_scale = step_scale;
    config.restart_every = restart_every;
    config.margin_goal = margin_goal;
    config.tol = tol;
    if (const char* env = std::getenv("MAJOLAB_WORKERS")) config.workers = std::atoi(env);
    if (config.workers < 1) config.workers = 1;

    OutStream out(out_path);
    const SearchOutcome outcome =
        search(config, [&](const TrialReport& r) { write_jsonl(*out.os, r); });

    std::cerr << question_id << ": " << outcome.trials_run << " trials, best margin "
              << fmt17(outcome.best_margin) << " at trial " << outcome.best_trial << "\n";
    if (outcome.lifted) {
        write_jsonl(*out.os, *outcome.lifted);
        std::cerr << "alpha-lift: status " << outcome.lifted->status << ", norm-form margin "
                  << fmt17(outcome.lifted->margin) << ", alpha "
                  << fmt17(outcome.lifted->value("alpha").value_or(-1.0)) << "\n";
    }
    if (outcome.anomaly) {
        std::cerr << "ANOMALY: positive margin on a theorem-backed target\n";
        return 1;
    }
    return 0;
}

int cmd_delta(const std::string& a_path, const std::string& b_path, double gap_tol,
              const std::vector<double>& fd_steps) {
    const HermitianMatrix a = load_matrix_file(a_path);
    const HermitianMatrix b = load_matrix_file(b_path);
    const DeltaVector dv = delta_vector(b, a, gap_tol);

    std::ostream& os = std::cout;
    os << "{\"delta\":[";
    for (size_t i = 0; i < dv.entries.size(); ++i) os << (i ? "," : "") << fmt17(dv.entries[i]);
    os << "],\"clusters\":[";
    for (int c = 0; c < dv.clusters.count(); ++c) {
        os << (c ? ",{" : "{") << "\"mu\":" << fmt17(dv.clusters.distinct_values[c])
           << ",\"r\":" << dv.clusters.multiplicities[c] << ",\"block_spectrum\":[";
        const auto& bs = dv.block_spectra[c];
        for (size_t i = 0; i < bs.size(); ++i) os << (i ? "," : "") << fmt17(bs[i]);
        os << "]}";
    }
    os << "],\"small_gap_warning\":" << (dv.small_gap_warning ? "true" : "false");

    if (!fd_steps.empty()) {
        os << ",\"fd\":[";
        bool first_t = true;
        for (double t : fd_steps) {
            os << (first_t ? "{" : ",{") << "\"t\":" << fmt17(t) << ",\"per_k\":[";
            first_t = false;
            double analytic = 0.0;
            for (int k = 1; k <= a.n(); ++k) {
                analytic += dv.entries[k - 1];
                const double fd = delta_fd_oracle(b, a, k, t);
                os << (k > 1 ? ",{" : "{") << "\"k\":" << k << ",\"analytic\":" << fmt17(analytic)
                   << ",\"fd\":" << fmt17(fd) << ",\"abs_diff\":" << fmt17(std::abs(fd - analytic))
                   << "}";
            }
            os << "]}";
        }
        os << "]";
    }
    os << "}\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"majolab: matrix-norm inequality verification and counterexample search"};
    app.require_subcommand(1);

    // reproduce
    std::string repro_target;
    CLI::App* repro = app.add_subcommand("reproduce", "Recompute a registered published case");
    repro->add_option("case", repro_target, "case id or 'all'")->required();

    // check
    std::string check_id, check_fn, check_out;
    int check_dim = 3;
    long check_trials = 100;
    std::uint64_t check_seed = 1;
    double check_tol = 1e-9;
    CLI::App* check = app.add_subcommand("check", "Run randomized trials of one checker");
    check->add_option("checker", check_id, "checker id")->required();
    check->add_option("--dim", check_dim, "matrix dimension")->check(CLI::Range(2, 64));
    check->add_option("--trials", check_trials, "number of trials");
    check->add_option("--seed", check_seed, "base seed; trial i uses seed+i");
    check->add_option("--tol", check_tol, "margin tolerance");
    check->add_option("--fn", check_fn, "function JSON file overriding the sampled function");
    check->add_option("--out", check_out, "write JSONL here instead of stdout");

    // search
    std::string search_id, search_out;
    int search_dim = 3, search_workers = 1;
    long search_trials = 10000, search_restart = 256;
    std::uint64_t search_seed = 1;
    double search_step = 0.15, search_goal = std::numeric_limits<double>::infinity();
    double search_tol = 1e-9;
    CLI::App* sea = app.add_subcommand("search", "Randomized counterexample search");
    sea->add_option("question", search_id, "q1 | q2 | q3 | checker id")->required();
    sea->add_option("--dim", search_dim, "matrix dimension")->check(CLI::Range(2, 64));
    sea->add_option("--trials", search_trials, "trial budget");
    sea->add_option("--seed", search_seed, "base seed");
    sea->add_option("--workers", search_workers, "worker threads (MAJOLAB_WORKERS overrides)");
    sea->add_option("--step-scale", search_step, "perturbation scale for the q2 climber");
    sea->add_option("--restart-every", search_restart, "round length / restart period");
    sea->add_option("--margin-goal", search_goal, "stop once the best margin reaches this");
    sea->add_option("--tol", search_tol, "anomaly tolerance");
    sea->add_option("--out", search_out, "write JSONL here instead of stdout");

    // delta
    std::string delta_a, delta_b;
    double delta_gap = 0.0;
    std::vector<double> delta_fd;
    CLI::App* del = app.add_subcommand("delta", "Print delta(B;A) with cluster structure");
    del->add_option("--a", delta_a, "matrix JSON file for A")->required();
    del->add_option("--b", delta_b, "matrix JSON file for B")->required();
    del->add_option("--gap-tol", delta_gap, "cluster gap tolerance (default 1e-7*(1+||A||))");
    del->add_option("--fd", delta_fd, "finite-difference steps, comma separated")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*repro) return cmd_reproduce(repro_target);
        if (*check)
            return cmd_check(check_id, check_dim, check_trials, check_seed, check_tol, check_fn,
                             check_out);
        if (*sea)
            return cmd_search(search_id, search_dim, search_trials, search_seed, search_workers,
                              search_step, search_restart, search_goal, search_tol, search_out);
        if (*del) return cmd_delta(delta_a, delta_b, delta_gap, delta_fd);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
