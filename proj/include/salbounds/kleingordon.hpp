#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "salbounds/potential.hpp"
#include "salbounds/radial.hpp"

namespace salbounds {

// F(e): min(0, lowest eigenvalue of p^2 + 2 e nu f - (nu f)^2); 0 is the
// bottom of the essential spectrum when no bound state exists.
struct SpectralPoint {
    double e;
    double F;
    bool exists;
};

struct SpectralCurve {
    double nu;
    std::string shape;
    std::vector<SpectralPoint> points;
};

struct KgSolution {
    double e_k;
    double f_prime;                    // F'(e_k) = 2 nu <f>
    bool valid;                        // F'(e_k) < 2 e_k
    std::pair<double, double> bracket;
    std::vector<double> all_roots;
};

struct KgOptions {
    int scan_points = 400;
    double root_tol = 1e-9;
    RadialOptions scan_radial{.grid_points = 1 << 11, .eigen_tol = 1e-6};
    RadialOptions refine_radial{.grid_points = 1 << 13, .eigen_tol = 1e-9};
};

struct NoBoundState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<double, bool> spectral_F(const PotentialShape& shape, double nu,
                                   double e, const RadialOptions& opts = {});

// Hellmann-Feynman derivative 2 nu <f>; throws NoBoundState when there is no
// discrete state at (nu, e).
double spectral_F_prime(const PotentialShape& shape, double nu, double e,
                        const RadialOptions& opts = {});

// Self-consistency F(e) = e^2 - mu^2 on e in (-mu, mu]; returns the root with
// the largest e passing the validity test F'(e) < 2e, or absent.
std::optional<KgSolution> solve_kg(const PotentialShape& shape, double mu,
                                   double nu, const KgOptions& opts = {});

std::vector<SpectralCurve> curve_sample(const PotentialShape& shape,
                                        const std::vector<double>& nu_list,
                                        const std::vector<double>& e_grid,
                                        const RadialOptions& opts = {});

// Smallest coupling at which solve_kg finds a solution (bisection).
double critical_nu(const PotentialShape& shape, double mu, double tol = 1e-6,
                   const KgOptions& opts = {});

// Largest coupling for which solve_kg still finds a solution (bisection).
double supercritical_nu(const PotentialShape& shape, double mu,
                        double tol = 1e-6, const KgOptions& opts = {});

}  // namespace salbounds
