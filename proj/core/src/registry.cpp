#include "majolab/registry.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>

#include "majolab/checks.hpp"
#include "majolab/delta.hpp"
#include "majolab/eig.hpp"
#include "majolab/majorization.hpp"
#include "majolab/matfun.hpp"

namespace majolab {

namespace {

HermitianMatrix real_matrix(int n, std::initializer_list<double> rows) {
    std::vector<cplx> raw;
    raw.reserve(rows.size());
    for (double v : rows) raw.emplace_back(v, 0.0);
    return HermitianMatrix::from_entries(n, raw);
}

std::vector<RegistryCase> build_registry() {
    std::vector<RegistryCase> cases;

    // q1.angle2x2: 2x2 pair with the angle function g(x) = x + (x-1)_+.
    {
        RegistryCase c{
            "q1.angle2x2",
            "q1",
            {{"A", real_matrix(2, {0.9, 0.0,
                                   0.0, 0.6})},
             {"B", real_matrix(2, {0.8, 0.5,
                                   0.5, 0.4})}},
            PiecewiseFn(0.0, 1.0, {{1.0, 1.0}}),
            {{"g_absdiff_eig1", 0.65249, 5e-5},
             {"g_absdiff_eig2", 0.35249, 5e-5},
             {"g_diff_eig1", 0.65010, 5e-5},
             {"g_diff_eig2", -0.48862, 5e-5},
             {"opnorm_margin", 0.00239, 2e-4}},
            {}};
        cases.push_back(std::move(c));
    }

    // q3.min3x3: 3x3 pair with f(x) = min(x, 1).
    {
        RegistryCase c{
            "q3.min3x3",
            "q3",
            {{"B", real_matrix(3, {0.701816, 0.317887, 0.198910,
                                   0.317887, 1.014950, -0.093826,
                                   0.198910, -0.093826, 0.274236})},
             {"Delta", HermitianMatrix::diagonal({0.192713, 0.446505, 0.455416})}},
            PiecewiseFn::angle_min(1.0),
            {{"f_delta_opnorm", 0.455416, 1e-5},
             {"f_diff_opnorm", 0.455776, 1e-5}},
            {}};
        cases.push_back(std::move(c));
    }

    const HermitianMatrix x_mat = real_matrix(3, {0.35614, -0.053243, 0.10116,
                                                  -0.053243, 0.87456, 0.40559,
                                                  0.10116, 0.40559, 0.82474});
    const HermitianMatrix y_mat = HermitianMatrix::diagonal({0.53642, 0.42018, 0.094866});

    // q2.delta_xy: the delta-form violation and its alpha = 1 lift.
    {
        RegistryCase c{
            "q2.delta_xy",
            "q2.star",
            {{"X", x_mat}, {"Y", y_mat}},
            PiecewiseFn::angle_pos(1.0),
            {{"delta0_1", 0.0, 1e-12},
             {"delta0_2", 0.0, 1e-12},
             {"delta0_3", 0.0, 1e-12},
             {"deltaD_1", -0.00018194, 1e-4},
             {"deltaD_2", 0.2573, 1e-4},
             {"deltaD_3", 0.04, 1e-4},
             {"D_entry11", -0.00018194, 1e-6},
             {"alpha1_lhs_1", 0.53642, 1e-4},
             {"alpha1_lhs_2", 0.42018, 1e-4},
             {"alpha1_lhs_3", 0.094866, 1e-4},
             {"alpha1_rhs_1", 0.53624, 1e-4},
             {"alpha1_rhs_2", 0.67748, 1e-4},
             {"alpha1_rhs_3", 0.13487, 1e-4}},
            {"delta_violation_at_k1", "lifted_matrix_pd"}};
        cases.push_back(std::move(c));
    }

    // q2.g101: the fully explicit eigenvalue violation with g(x)=101x+(x-1)_+.
    {
        RegistryCase c{
            "q2.g101",
            "q2.star",
            {{"X", x_mat}, {"Y", y_mat}},
            PiecewiseFn(0.0, 101.0, {{1.0, 1.0}}),
            {{"g_shifted_diff_eig1", 54.17824, 2e-4},
             {"g_shifted_diff_eig2", 42.69595, 2e-4},
             {"g_shifted_diff_eig3", 9.621004, 2e-4},
             {"g_y_eig1", 54.17842, 2e-4},
             {"g_y_eig2", 42.43818, 2e-4},
             {"g_y_eig3", 9.581466, 2e-4},
             {"star_worst_k", 1.0, 0.0}},
            {"star_violation", "difference_psd"}};
        cases.push_back(std::move(c));
    }

    return cases;
}

const HermitianMatrix& named(const RegistryCase& c, const std::string& name) {
    for (const auto& [n, m] : c.matrices)
        if (n == name) return m;
    throw DomainError("registry case " + c.case_id + " has no matrix " + name);
}

}  // namespace

const std::vector<RegistryCase>& registry() {
    static const std::vector<RegistryCase> cases = build_registry();
    return cases;
}

const RegistryCase& registry_case(const std::string& case_id) {
    for (const RegistryCase& c : registry())
        if (c.case_id == case_id) return c;
    throw DomainError("unknown registry case: " + case_id);
}

TrialReport reproduce(const std::string& case_id) {
    const RegistryCase& c = registry_case(case_id);
    TrialReport r;
    r.check_id = "reproduce." + case_id;

    if (case_id == "q1.angle2x2") {
        const HermitianMatrix& a = named(c, "A");
        const HermitianMatrix& b = named(c, "B");
        const std::vector<double> eig_abs = eigenvalues_desc(apply_fn(abs_matrix(a - b), c.fn));
        const std::vector<double> eig_diff =
            eigenvalues_desc(apply_fn(a, c.fn) - apply_fn(b, c.fn));
        r.add_value("g_absdiff_eig1", eig_abs[0]);
        r.add_value("g_absdiff_eig2", eig_abs[1]);
        r.add_value("g_diff_eig1", eig_diff[0]);
        r.add_value("g_diff_eig2", eig_diff[1]);
        const TrialReport q1 = check_q1(a, b, c.fn, 1e-9);
        r.add_value("opnorm_margin",
                    *q1.value("opnorm_g_absdiff") - *q1.value("opnorm_g_diff"));
    } else if (case_id == "q3.min3x3") {
        const HermitianMatrix& b = named(c, "B");
        const HermitianMatrix& d = named(c, "Delta");
        r.add_value("f_delta_opnorm", op_norm(apply_fn(d, c.fn)));
        r.add_value("f_diff_opnorm", op_norm(apply_fn(b + d, c.fn) - apply_fn(b, c.fn)));
    } else if (case_id == "q2.delta_xy") {
        const HermitianMatrix& x = named(c, "X");
        const HermitianMatrix& y = named(c, "Y");
        const HermitianMatrix one = HermitianMatrix::identity(3);
        const HermitianMatrix shifted = positive_part(x + y - one) - positive_part(x - one);
        const DeltaVector d0 = delta_vector(apply_fn(y, c.fn), y);
        const DeltaVector dd = delta_vector(shifted, y);
        r.add_value("delta0_1", d0.entries[0]);
        r.add_value("delta0_2", d0.entries[1]);
        r.add_value("delta0_3", d0.entries[2]);
        r.add_value("deltaD_1", dd.entries[0]);
        r.add_value("deltaD_2", dd.entries[1]);
        r.add_value("deltaD_3", dd.entries[2]);
        // First entry of the shifted difference in Y's eigenbasis: Y is
        // diagonal with descending diagonal, so that basis is standard.
        r.add_value("D_entry11", shifted(0, 0).real());
        const DeltaVector lhs1 = delta_vector(y + apply_fn(y, c.fn), y);
        const DeltaVector rhs1 = delta_vector(y + shifted, y);
        r.add_value("alpha1_lhs_1", lhs1.entries[0]);
        r.add_value("alpha1_lhs_2", lhs1.entries[1]);
        r.add_value("alpha1_lhs_3", lhs1.entries[2]);
        r.add_value("alpha1_rhs_1", rhs1.entries[0]);
        r.add_value("alpha1_rhs_2", rhs1.entries[1]);
        r.add_value("alpha1_rhs_3", rhs1.entries[2]);
        const MajorizationVerdict v = weak_major_no_rearrange(d0.entries, dd.entries, 1e-9);
        r.add_flag("delta_violation_at_k1", !v.holds && v.worst_k == 1);
        r.add_flag("lifted_matrix_pd", min_eigenvalue(y + shifted) > 0.0);
        r.worst_k = v.worst_k;
    } else if (case_id == "q2.g101") {
        const HermitianMatrix& x = named(c, "X");
        const HermitianMatrix& y = named(c, "Y");
        const HermitianMatrix diff = apply_fn(x + y, c.fn) - apply_fn(x, c.fn);
        const std::vector<double> eig_diff = eigenvalues_desc(diff);
        const std::vector<double> eig_y = eigenvalues_desc(apply_fn(y, c.fn));
        r.add_value("g_shifted_diff_eig1", eig_diff[0]);
        r.add_value("g_shifted_diff_eig2", eig_diff[1]);
        r.add_value("g_shifted_diff_eig3", eig_diff[2]);
        r.add_value("g_y_eig1", eig_y[0]);
        r.add_value("g_y_eig2", eig_y[1]);
        r.add_value("g_y_eig3", eig_y[2]);
        const Q2Reports q2 = check_q2(x, y, c.fn, 1e-9);
        r.add_value("star_worst_k", static_cast<double>(q2.star_form.worst_k));
        r.add_flag("star_violation", q2.star_form.margin > 0.0);
        r.add_flag("difference_psd", *q2.star_form.flag("difference_psd"));
        r.worst_k = q2.star_form.worst_k;
    } else {
        throw DomainError("unknown registry case: " + case_id);
    }

    double margin = -std::numeric_limits<double>::infinity();
    for (const ExpectedQuantity& q : c.expected) {
        const auto computed = r.value(q.id);
        const double dev = computed ? std::abs(*computed - q.value) - q.tol
                                    : std::numeric_limits<double>::infinity();
        margin = std::max(margin, dev);
    }
    bool flags_ok = true;
    for (const std::string& fl : c.expected_true_flags) {
        const auto v = r.flag(fl);
        if (!v || !*v) flags_ok = false;
    }
    r.margin = margin;
    r.status = (margin <= 0.0 && flags_ok) ? "ok" : "mismatch";
    return r;
}

bool reproduce_passed(const TrialReport& r) { return r.status == "ok"; }

}  // namespace majolab
