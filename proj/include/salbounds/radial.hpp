#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "salbounds/potential.hpp"

namespace salbounds {

struct RadialOptions {
    double r_max = 0.0;          // 0 => automatic truncation policy
    int grid_points = 1 << 13;   // base level; Richardson adds one doubling
    double eigen_tol = 1e-9;
    double existence_threshold = 1e-9;  // bound state iff eps < -threshold
    int max_enlarge = 8;
};

// Ground state of -u'' + W(r) u = eps u on (0, inf), u(0) = 0.
struct RadialSolution {
    double epsilon = 0.0;
    std::vector<double> grid;
    std::vector<double> u;      // normalized, int u^2 dr = 1
    bool converged = false;
    double richardson_gap = 0.0;  // |eps_{h/2} - eps_h| at the final level
};

struct RadialError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using RadialPotential = std::function<double(double)>;

// Numerov outward shooting with node-count bisection; Richardson-extrapolated
// over two grid levels; domain enlarged x1.5 until the eigenvalue settles.
// Absent result means "no bound state"; RadialError means non-convergence.
std::optional<RadialSolution> ground_state(const RadialPotential& W,
                                           const RadialOptions& opts = {});

// Independent route: lowest eigenvalue of the finite-difference tridiagonal
// discretization by Sturm-sequence bisection, Richardson h^2 -> h^4.
std::optional<double> ground_state_oracle(const RadialPotential& W,
                                          const RadialOptions& opts = {});

// Single existence probe on a fixed domain: does the outward solution at
// eps = -threshold acquire a node before r_max?  Used for threshold studies
// where the automatic policy's domain would be too small.
bool bound_state_exists(const RadialPotential& W, double r_max, int grid_points,
                        double threshold = 1e-9);

// <f> = int f(r) u(r)^2 dr (Simpson on the solution grid).
double expectation_f(const RadialSolution& sol, const PotentialShape& shape);

}  // namespace salbounds
