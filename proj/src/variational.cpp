#include "salbounds/variational.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace salbounds {

namespace {

constexpr double golden = 0.61803398874989485;

// Golden-section minimization on [a, b] to relative width tol.
double golden_min(const std::function<double(double)>& f, double a, double b,
                  double tol)
{
    double x1 = b - golden * (b - a);
    double x2 = a + golden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while ((b - a) > tol * std::max(1e-30, std::fabs(a) + std::fabs(b))) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - golden * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + golden * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

std::optional<VariationalResult> minimize_interior(
    const std::function<double(double)>& E, double mu)
{
    const double s_min = (mu == 0.0) ? 1e-2 : 1e-3;
    const double s_max = 1e3;

    std::optional<VariationalResult> best;
    for (int pass = 0; pass < 2 && !best; ++pass) {
        const int m = 240 * (pass == 0 ? 1 : 4);
        std::vector<double> ss(m), vv(m);
        const double l0 = std::log(s_min), l1 = std::log(s_max);
        for (int i = 0; i < m; ++i) {
            ss[i] = std::exp(l0 + (l1 - l0) * i / (m - 1.0));
            vv[i] = E(ss[i]);
        }
        for (int i = 1; i + 1 < m; ++i) {
            if (!(vv[i] < vv[i - 1] && vv[i] <= vv[i + 1])) continue;
            const double s = golden_min(E, ss[i - 1], ss[i + 1], 1e-8);
            const double v = E(s);
            // smallest value wins; exact ties go to the smaller s
            if (!best || v < best->value ||
                (v == best->value && s < best->s_star)) {
                VariationalResult r;
                r.s_star = s;
                r.value = v;
                r.stationary = true;
                r.boundary_infimum = mu;
                best = r;
            }
        }
    }
    return best;
}

}  // namespace

double gaussian_energy(const PotentialShape& shape, double mu, double nu,
                       double s)
{
    if (!(s > 0.0)) throw std::invalid_argument("gaussian_energy: requires s > 0");
    return s * kinetic_I(mu * mu / (2.0 * s * s)) + nu * potential_J(shape, 1.0 / s);
}

double gaussian_energy_pair(const PotentialShape& shape, double mu, double nu,
                            double lambda, double s)
{
    if (!(s > 0.0))
        throw std::invalid_argument("gaussian_energy_pair: requires s > 0");
    if (!(lambda >= 0.5 && lambda <= 1.0))
        throw std::invalid_argument("gaussian_energy_pair: lambda must be in [1/2, 1]");
    const double c = 1.0 / (2.0 * lambda);
    const double sc = std::sqrt(c);
    return sc * s * kinetic_I(mu * mu / (2.0 * c * s * s)) +
           nu * potential_J(shape, 1.0 / s);
}

std::optional<VariationalResult> upper_bound_eg(const PotentialShape& shape,
                                                double mu, double nu)
{
    if (mu < 0.0) throw std::invalid_argument("upper_bound_eg: requires mu >= 0");
    if (!(nu > 0.0)) throw std::invalid_argument("upper_bound_eg: requires nu > 0");
    return minimize_interior(
        [&](double s) { return gaussian_energy(shape, mu, nu, s); }, mu);
}

std::optional<VariationalResult> upper_bound_e2g(const PotentialShape& shape,
                                                 double mu, double nu,
                                                 double lambda)
{
    if (mu < 0.0) throw std::invalid_argument("upper_bound_e2g: requires mu >= 0");
    if (!(nu > 0.0)) throw std::invalid_argument("upper_bound_e2g: requires nu > 0");
    return minimize_interior(
        [&](double s) { return gaussian_energy_pair(shape, mu, nu, lambda, s); },
        mu);
}

}  // namespace salbounds
