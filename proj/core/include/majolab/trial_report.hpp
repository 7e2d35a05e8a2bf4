#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "majolab/matrix.hpp"
#include "majolab/piecewise.hpp"

namespace majolab {

/// Outcome of one inequality check. margin <= 0 means the inequality held;
/// a positive margin quantifies a violation. For theorem-backed checks a
/// positive margin is an anomaly (a bug witness); for the open questions it
/// is a finding. Margins are reproducible bit for bit from the recorded
/// seeds and parameters.
struct TrialReport {
    std::string check_id;
    double margin = 0.0;
    int worst_k = 0;
    // ok | violation | anomaly | precondition_unmet | mismatch
    std::string status = "ok";
    bool anomaly = false;

    long trial = -1;
    std::uint64_t seed = 0;

    // Named sub-quantities (per-relation margins, norms, eigenvalues, ...).
    std::vector<std::pair<std::string, double>> values;
    std::vector<std::pair<std::string, bool>> flags;

    // Inputs: matrices/functions by name, plus scalar parameters.
    std::vector<std::pair<std::string, HermitianMatrix>> input_matrices;
    std::vector<std::pair<std::string, PiecewiseFn>> input_fns;
    std::vector<std::pair<std::string, double>> input_params;

    void add_value(const std::string& k, double v) { values.emplace_back(k, v); }
    void add_flag(const std::string& k, bool v) { flags.emplace_back(k, v); }
    void add_matrix(const std::string& k, const HermitianMatrix& m) {
        input_matrices.emplace_back(k, m);
    }
    void add_fn(const std::string& k, const PiecewiseFn& f) { input_fns.emplace_back(k, f); }
    void add_param(const std::string& k, double v) { input_params.emplace_back(k, v); }

    std::optional<double> value(const std::string& k) const {
        for (const auto& [key, v] : values)
            if (key == k) return v;
        return std::nullopt;
    }
    std::optional<bool> flag(const std::string& k) const {
        for (const auto& [key, v] : flags)
            if (key == k) return v;
        return std::nullopt;
    }
};

}  // namespace majolab
