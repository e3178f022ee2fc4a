#pragma once

#include <cstdint>
#include <vector>

namespace salbounds {

// Orthogonal Jacobi coordinate matrix: first row all 1/sqrt(n); row k >= 2
// has k-1 entries 1/sqrt(k(k-1)), then -sqrt((k-1)/k), then zeros.
struct JacobiMatrix {
    int n = 0;
    std::vector<double> entries;  // row-major n x n

    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

JacobiMatrix build_jacobi_matrix(int n);

// max |(B^T B - I)_ij|
double orthogonality_deviation(const JacobiMatrix& B);

// max over rows i >= 2 of |sum_k B_ik|
double verify_row_sum_identity(const JacobiMatrix& B);

// Coefficient-level statement of the expectation identities: for i,j > 1,
//   sum_k B_ik B_jk = delta_ij   and   sum_{k != l} B_ik B_jl = -delta_ij.
struct CoefficientReport {
    double max_diag_dev;   // max |sum_k B_ik B_jk - delta_ij|
    double max_cross_dev;  // max |sum_{k != l} B_ik B_jl + delta_ij|
};

CoefficientReport verify_appendix_coefficients(const JacobiMatrix& B);

struct JacobiIdentityReport {
    double orthogonality;
    double row_sum;
    double coeff_diag;
    double coeff_cross;
};

// All four deviations for a given n.  Materializes B up to n = 10^4; larger n
// are checked row-analytically without storing the matrix.
JacobiIdentityReport check_identities(std::int64_t n);

}  // namespace salbounds
