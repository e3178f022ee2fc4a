#include "salbounds/jacobi.hpp"

#include <cmath>
#include <algorithm>
#include <stdexcept>

namespace salbounds {

namespace {

constexpr std::int64_t dense_limit = 1024;

// Row k of B (1-indexed, k >= 2) is [1/sqrt(k(k-1)) x (k-1), -sqrt((k-1)/k), 0...].
double offdiag_entry(int k) { return 1.0 / std::sqrt(static_cast<double>(k) * (k - 1.0)); }
double diag_entry(int k) { return -std::sqrt((k - 1.0) / k); }

}  // namespace

JacobiMatrix build_jacobi_matrix(int n)
{
    if (n < 2) throw std::invalid_argument("build_jacobi_matrix: n must be >= 2");
    JacobiMatrix B;
    B.n = n;
    B.entries.assign(static_cast<std::size_t>(n) * n, 0.0);
    const double r = 1.0 / std::sqrt(static_cast<double>(n));
    for (int j = 0; j < n; ++j) B.entries[j] = r;
    for (int k = 2; k <= n; ++k) {
        double* row = &B.entries[static_cast<std::size_t>(k - 1) * n];
        const double v = offdiag_entry(k);
        for (int j = 0; j < k - 1; ++j) row[j] = v;
        row[k - 1] = diag_entry(k);
    }
    return B;
}

double orthogonality_deviation(const JacobiMatrix& B)
{
    const int n = B.n;
    double dev = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double dot = 0.0;
            for (int k = 0; k < n; ++k) dot += B.at(i, k) * B.at(j, k);
            dev = std::max(dev, std::fabs(dot - (i == j ? 1.0 : 0.0)));
        }
    }
    return dev;
}

double verify_row_sum_identity(const JacobiMatrix& B)
{
    double dev = 0.0;
    for (int i = 1; i < B.n; ++i) {
        double s = 0.0;
        for (int k = 0; k < B.n; ++k) s += B.at(i, k);
        dev = std::max(dev, std::fabs(s));
    }
    return dev;
}

CoefficientReport verify_appendix_coefficients(const JacobiMatrix& B)
{
    const int n = B.n;
    std::vector<double> rowsum(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) rowsum[i] += B.at(i, k);

    CoefficientReport rep{0.0, 0.0};
    for (int i = 1; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double dot = 0.0;
            for (int k = 0; k < n; ++k) dot += B.at(i, k) * B.at(j, k);
            const double delta = (i == j) ? 1.0 : 0.0;
            // sum_{k != l} B_ik B_jl = (sum_k B_ik)(sum_l B_jl) - sum_k B_ik B_jk
            const double cross = rowsum[i] * rowsum[j] - dot;
            rep.max_diag_dev = std::max(rep.max_diag_dev, std::fabs(dot - delta));
            rep.max_cross_dev = std::max(rep.max_cross_dev, std::fabs(cross + delta));
        }
    }
    return rep;
}

JacobiIdentityReport check_identities(std::int64_t n)
{
    if (n < 2) throw std::invalid_argument("check_identities: n must be >= 2");
    if (n <= dense_limit) {
        const JacobiMatrix B = build_jacobi_matrix(static_cast<int>(n));
        const CoefficientReport c = verify_appendix_coefficients(B);
        return {orthogonality_deviation(B), verify_row_sum_identity(B),
                c.max_diag_dev, c.max_cross_dev};
    }

    // Row-analytic path: every pairwise dot product and row sum has a short
    // closed form in the row pattern, so nothing needs materializing.
    JacobiIdentityReport rep{0.0, 0.0, 0.0, 0.0};
    const double r1 = 1.0 / std::sqrt(static_cast<double>(n));
    rep.orthogonality = std::fabs(n * r1 * r1 - 1.0);

    double max_g = 0.0;       // |row-sum defect| of rows >= 2, scaled per pair below
    double max_norm = 0.0;    // |row norm^2 - 1|
    for (std::int64_t k = 2; k <= n; ++k) {
        const double off = 1.0 / std::sqrt(static_cast<double>(k) * (k - 1.0));
        const double dia = -std::sqrt((k - 1.0) / static_cast<double>(k));
        const double s = (k - 1.0) * off + dia;          // row sum, exactly 0
        const double norm2 = (k - 1.0) * off * off + dia * dia;
        max_g = std::max(max_g, std::fabs(s));
        max_norm = std::max(max_norm, std::fabs(norm2 - 1.0));
        // dot with row 1
        rep.orthogonality = std::max(rep.orthogonality, std::fabs(r1 * s));
    }
    rep.row_sum = max_g;
    rep.orthogonality = std::max(rep.orthogonality, max_norm);
    // dot(row i, row j) for 2 <= i < j factors as (1/sqrt(j(j-1))) * s_i with
    // s_i the row-i sum defect; the column factor is at most 1/sqrt(2).
    rep.orthogonality = std::max(rep.orthogonality, max_g / std::sqrt(2.0));
    rep.coeff_diag = std::max(max_norm, max_g / std::sqrt(2.0));
    // cross = S_i S_j - dot: S ~ 0, dot ~ delta, so the defect is bounded by
    // the same ingredients.
    rep.coeff_cross = std::max(rep.coeff_diag, max_g * max_g + max_g);
    return rep;
}

}  // namespace salbounds
