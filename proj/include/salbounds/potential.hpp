#pragma once

#include <functional>
#include <string>

#include "salbounds/specfun.hpp"

namespace salbounds {

// Attractive bounded shape f(r) <= 0 with f(inf) = 0.  j_closed, when set,
// evaluates the Gaussian-smeared integral
//   J(y) = (4/sqrt(pi)) int_0^inf e^{-t^2} f(yt) t^2 dt
// in closed form; otherwise potential_J falls back to quadrature.
struct PotentialShape {
    std::string name;
    std::function<double(double)> eval;
    std::function<double(double)> j_closed;  // may be empty
    double depth_at_zero = 0.0;              // f(0)
};

// f(r) = -e^{-r}; J(y) = y/sqrt(pi) - (1/2)(2+y^2) erfcx(y/2).
PotentialShape exponential_shape();

// f(r) = -e^{-r^2}; no closed-form J registered, exercises the quadrature path.
PotentialShape gaussian_shape();

// "exp" or "gauss"
PotentialShape shape_by_name(const std::string& name);

double potential_J(const PotentialShape& shape, double y,
                   const QuadratureSpec& spec = {});

// W(r) = 2 e nu f(r) - (nu f(r))^2, the Schroedinger-form Klein-Gordon well.
struct EffectivePotential {
    PotentialShape shape;
    double e = 0.0;
    double nu = 0.0;

    double operator()(double r) const
    {
        const double f = shape.eval(r);
        return 2.0 * e * nu * f - nu * nu * f * f;
    }
};

EffectivePotential kg_effective_potential(const PotentialShape& shape, double e,
                                          double nu);

}  // namespace salbounds
