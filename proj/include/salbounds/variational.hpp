#pragma once

#include <optional>

#include "salbounds/potential.hpp"

namespace salbounds {

struct VariationalResult {
    double s_star = 0.0;            // minimizing inverse width s = 1/sigma
    double value = 0.0;             // energy at s_star
    bool stationary = false;        // interior stationary minimum found
    double boundary_infimum = 0.0;  // the s -> 0 limit, equal to mu
};

// E(s) = s I(mu^2 / (2 s^2)) + nu J(1/s)
double gaussian_energy(const PotentialShape& shape, double mu, double nu,
                       double s);

// Kinetic factor for the N/2 comparison bound: with c = 1/(2 lambda),
// E2(s) = sqrt(c) s I(mu^2 / (2 c s^2)) + nu J(1/s).  lambda = 1/2 collapses
// onto gaussian_energy.
double gaussian_energy_pair(const PotentialShape& shape, double mu, double nu,
                            double lambda, double s);

// Interior stationary minimum of E(s) over a log grid in s, golden-section
// refined; absent when no interior minimum exists (matching the empty e_g
// cells at weak coupling).
std::optional<VariationalResult> upper_bound_eg(const PotentialShape& shape,
                                                double mu, double nu);

std::optional<VariationalResult> upper_bound_e2g(const PotentialShape& shape,
                                                 double mu, double nu,
                                                 double lambda);

}  // namespace salbounds
