#pragma once

#include <cstdint>

namespace salbounds {

// Physical N-body inputs, hbar = c = 1.
struct PhysicalParams {
    std::int64_t n_particles;  // N >= 2
    double mass;               // m >= 0
    double range;              // a > 0
    double coupling;           // v > 0
};

// Dimensionless one-body parameters shared by both bounds:
//   mu = m a / sqrt(2 lambda),  nu = sqrt(gamma) v a / 2,
//   lambda = (N-1)/N,  gamma = N(N-1)/2,  e = E a / (2 sqrt(gamma)).
struct ScaledParams {
    double mu;
    double nu;
    double lambda;
    double gamma;
};

// alpha = sqrt(N/(N-1)), beta = sqrt((N-2)/(N-1)),
// b = 1/sqrt(N(N-1)), delta = sqrt((N-2)/N).
struct JacobiConstants {
    double alpha;
    double beta;
    double b;
    double delta;
};

ScaledParams to_scaled(const PhysicalParams& p);

// Inverse of e = E a / (2 sqrt(gamma)).
double energy_from_scaled(double e, const PhysicalParams& p);

JacobiConstants jacobi_constants(std::int64_t n_particles);

}  // namespace salbounds
