#include "majolab/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "majolab/eig.hpp"

namespace majolab {

std::vector<double> singular_values(const HermitianMatrix& h) {
    std::vector<double> s = eigenvalues_desc(h);
    for (double& v : s) v = std::abs(v);
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
}

double kyfan_norm(const HermitianMatrix& h, int k) {
    if (k < 1 || k > h.n())
        throw DimensionError("kyfan_norm: k = " + std::to_string(k) + " outside [1, " +
                             std::to_string(h.n()) + "]");
    const std::vector<double> s = singular_values(h);
    double sum = 0.0;
    for (int j = 0; j < k; ++j) sum += s[j];
    return sum;
}

double schatten_norm(const HermitianMatrix& h, double p) {
    if (std::isinf(p)) return singular_values(h)[0];
    if (p < 1.0) throw DomainError("schatten_norm: p = " + std::to_string(p) + " below 1");
    const std::vector<double> s = singular_values(h);
    double sum = 0.0;
    for (double v : s) sum += std::pow(v, p);
    return std::pow(sum, 1.0 / p);
}

double op_norm(const HermitianMatrix& h) { return kyfan_norm(h, 1); }

MajorizationVerdict weak_major_no_rearrange(std::span<const double> a, std::span<const double> b,
                                            double tol) {
    if (a.size() != b.size()) throw DimensionError("weak majorization: vector lengths differ");
    MajorizationVerdict v;
    v.partial_sums_a.resize(a.size());
    v.partial_sums_b.resize(b.size());
    double sa = 0.0, sb = 0.0;
    double worst = -std::numeric_limits<double>::infinity();
    int worst_k = 1;
    for (size_t k = 0; k < a.size(); ++k) {
        sa += a[k];
        sb += b[k];
        v.partial_sums_a[k] = sa;
        v.partial_sums_b[k] = sb;
        if (sa - sb > worst) {
            worst = sa - sb;
            worst_k = static_cast<int>(k) + 1;
        }
    }
    v.deficit = worst;
    v.worst_k = worst_k;
    v.holds = worst <= tol;
    return v;
}

MajorizationVerdict weak_major_sorted(std::span<const double> a, std::span<const double> b,
                                      double tol) {
    std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end(), std::greater<>());
    std::sort(sb.begin(), sb.end(), std::greater<>());
    return weak_major_no_rearrange(sa, sb, tol);
}

}  // namespace majolab
