#pragma once

#include <functional>
#include <stdexcept>

namespace salbounds {

struct QuadratureSpec {
    double rel_tol = 1e-11;
    double abs_tol = 1e-13;
    int max_depth = 12;
};

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// e^x K1(x) for x > 0.  Power series below x = 2, Steed continued fraction
// above; the exponential factor is carried analytically so large x never
// overflows.
double bessel_k1_scaled(double x);

// e^{x^2} erfc(x) for x >= 0.  Series below x = 1.5, Laplace continued
// fraction above.
double erfcx(double x);

// I(x) = (4/sqrt(pi)) int_0^inf sqrt(2x + t^2) e^{-t^2} t^2 dt
//      = (2/sqrt(pi)) x e^x K1(x),  with I(0) = 2/sqrt(pi).
double kinetic_I(double x);

// Integral of g over [0, inf).  g must be smooth and decay at least like
// exp(-t^2/2) times a polynomial.  Double-exponential rule, split at t = 1.
// Throws QuadratureError on non-convergence.
double integrate_semiinfinite(const std::function<double(double)>& g,
                              const QuadratureSpec& spec = {});

inline constexpr double sqrt_pi = 1.7724538509055160273;
inline constexpr double two_over_sqrt_pi = 1.1283791670955125739;

}  // namespace salbounds
