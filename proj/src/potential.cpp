#include "salbounds/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace salbounds {

PotentialShape exponential_shape()
{
    PotentialShape s;
    s.name = "exp";
    s.eval = [](double r) { return -std::exp(-r); };
    s.depth_at_zero = -1.0;
    // J(y) written with erfcx so the (1-erf) e^{y^2/4} product never
    // overflows or cancels for large y.
    s.j_closed = [](double y) {
        return y / sqrt_pi - 0.5 * (2.0 + y * y) * erfcx(0.5 * y);
    };
    return s;
}

PotentialShape gaussian_shape()
{
    PotentialShape s;
    s.name = "gauss";
    s.eval = [](double r) { return -std::exp(-r * r); };
    s.depth_at_zero = -1.0;
    return s;
}

PotentialShape shape_by_name(const std::string& name)
{
    if (name == "exp") return exponential_shape();
    if (name == "gauss") return gaussian_shape();
    throw std::invalid_argument("unknown potential shape: " + name);
}

double potential_J(const PotentialShape& shape, double y,
                   const QuadratureSpec& spec)
{
    if (y < 0.0) throw std::domain_error("potential_J: requires y >= 0");
    if (y == 0.0) return shape.depth_at_zero;
    if (shape.j_closed) return shape.j_closed(y);
    auto g = [&](double t) {
        const double w = std::exp(-t * t) * t * t;
        return w == 0.0 ? 0.0 : 4.0 / sqrt_pi * w * shape.eval(y * t);
    };
    return integrate_semiinfinite(g, spec);
}

EffectivePotential kg_effective_potential(const PotentialShape& shape, double e,
                                          double nu)
{
    if (!(nu > 0.0))
        throw std::invalid_argument("kg_effective_potential: requires nu > 0");
    return EffectivePotential{shape, e, nu};
}

}  // namespace salbounds
