#include "salbounds/scaling.hpp"

#include <cmath>
#include <stdexcept>

namespace salbounds {

namespace {

void validate(const PhysicalParams& p)
{
    if (p.n_particles < 2)
        throw std::invalid_argument("PhysicalParams: n_particles must be >= 2");
    if (!(p.range > 0.0))
        throw std::invalid_argument("PhysicalParams: range must be > 0");
    if (!(p.coupling > 0.0))
        throw std::invalid_argument("PhysicalParams: coupling must be > 0");
    if (p.mass < 0.0)
        throw std::invalid_argument("PhysicalParams: mass must be >= 0");
}

}  // namespace

ScaledParams to_scaled(const PhysicalParams& p)
{
    validate(p);
    const double n = static_cast<double>(p.n_particles);
    ScaledParams s;
    s.lambda = (n - 1.0) / n;
    s.gamma = 0.5 * n * (n - 1.0);
    s.mu = p.mass * p.range / std::sqrt(2.0 * s.lambda);
    s.nu = std::sqrt(s.gamma) * p.coupling * p.range / 2.0;
    return s;
}

double energy_from_scaled(double e, const PhysicalParams& p)
{
    validate(p);
    const double n = static_cast<double>(p.n_particles);
    const double gamma = 0.5 * n * (n - 1.0);
    return 2.0 * std::sqrt(gamma) * e / p.range;
}

JacobiConstants jacobi_constants(std::int64_t n_particles)
{
    if (n_particles < 2)
        throw std::invalid_argument("jacobi_constants: n_particles must be >= 2");
    const double n = static_cast<double>(n_particles);
    JacobiConstants c;
    c.alpha = std::sqrt(n / (n - 1.0));
    c.beta = std::sqrt((n - 2.0) / (n - 1.0));
    c.b = 1.0 / std::sqrt(n * (n - 1.0));
    c.delta = std::sqrt((n - 2.0) / n);
    return c;
}

}  // namespace salbounds
