#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "salbounds/specfun.hpp"

using namespace salbounds;

TEST_CASE("quadrature on known integrals")
{
    // int_0^inf e^{-t^2} t^2 dt = sqrt(pi)/4
    CHECK(integrate_semiinfinite([](double t) { return std::exp(-t * t) * t * t; }) ==
          doctest::Approx(sqrt_pi / 4.0).epsilon(1e-11));
    // int_0^inf e^{-t^2} t^3 dt = 1/2
    CHECK(integrate_semiinfinite([](double t) { return std::exp(-t * t) * t * t * t; }) ==
          doctest::Approx(0.5).epsilon(1e-11));
    // int_0^inf e^{-t^2} dt = sqrt(pi)/2
    CHECK(integrate_semiinfinite([](double t) { return std::exp(-t * t); }) ==
          doctest::Approx(sqrt_pi / 2.0).epsilon(1e-11));
    // int_0^inf e^{-t} dt = 1 (slower tail, still within the stated class)
    CHECK(integrate_semiinfinite([](double t) { return std::exp(-t); }) ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("quadrature error handling")
{
    QuadratureSpec tight;
    tight.rel_tol = 1e-15;
    tight.abs_tol = 1e-18;
    tight.max_depth = 2;  // cannot converge with two refinements
    CHECK_THROWS_AS(
        (void)integrate_semiinfinite([](double t) { return std::exp(-t) * std::cos(40.0 * t); },
                                     tight),
        QuadratureError);
}

TEST_CASE("k1 scaled against its integral representation")
{
    // K1(x) = int_0^inf e^{-x cosh t} cosh t dt, so
    // k1e(x) = int_0^inf e^{x(1 - cosh t)} cosh t dt.
    for (double x : {0.25, 0.5, 1.0, 1.9, 2.1, 4.0, 10.0}) {
        const double ref = integrate_semiinfinite([x](double t) {
            const double c = std::cosh(t);
            const double arg = x * (1.0 - c);
            return arg < -700.0 ? 0.0 : std::exp(arg) * c;
        });
        CHECK(bessel_k1_scaled(x) == doctest::Approx(ref).epsilon(1e-10));
    }
}

TEST_CASE("k1 scaled limits")
{
    // x K1(x) -> 1 as x -> 0
    const double x = 1e-4;
    CHECK(x * bessel_k1_scaled(x) * std::exp(-x) == doctest::Approx(1.0).epsilon(1e-3));
    // k1e(x) ~ sqrt(pi/(2x)) (1 + 3/(8x)) for large x
    const double big = 500.0;
    const double asym = std::sqrt(M_PI / (2.0 * big)) * (1.0 + 3.0 / (8.0 * big));
    CHECK(bessel_k1_scaled(big) == doctest::Approx(asym).epsilon(1e-5));
    CHECK_THROWS_AS((void)bessel_k1_scaled(0.0), std::domain_error);
    CHECK_THROWS_AS((void)bessel_k1_scaled(-1.0), std::domain_error);
}

TEST_CASE("erfcx against its integral representation")
{
    // erfcx(x) = (2/sqrt(pi)) int_0^inf e^{-t^2 - 2xt} dt
    for (double x : {0.0, 0.3, 1.0, 1.4, 1.6, 3.0, 8.0, 25.0}) {
        const double ref = two_over_sqrt_pi *
                           integrate_semiinfinite([x](double t) {
                               return std::exp(-t * t - 2.0 * x * t);
                           });
        CHECK(erfcx(x) == doctest::Approx(ref).epsilon(1e-10));
    }
}

TEST_CASE("erfcx endpoints and monotonicity")
{
    CHECK(erfcx(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    // erfcx(x) ~ 1/(x sqrt(pi)) for large x
    CHECK(erfcx(30.0) * 30.0 * sqrt_pi == doctest::Approx(1.0).epsilon(1e-3));
    double prev = erfcx(0.0);
    for (double x = 0.1; x <= 10.0; x += 0.1) {
        const double v = erfcx(x);
        CHECK(v < prev);
        CHECK(v > 0.0);
        prev = v;
    }
    CHECK_THROWS_AS((void)erfcx(-0.5), std::domain_error);
}

TEST_CASE("kinetic_I closed form vs defining integral")
{
    // I(x) = (4/sqrt(pi)) int_0^inf sqrt(2x + t^2) e^{-t^2} t^2 dt
    auto by_quadrature = [](double x) {
        return 2.0 * two_over_sqrt_pi *
               integrate_semiinfinite([x](double t) {
                   return std::sqrt(2.0 * x + t * t) * std::exp(-t * t) * t * t;
               });
    };
    CHECK(kinetic_I(0.0) == doctest::Approx(two_over_sqrt_pi).epsilon(1e-15));
    for (double x : {1e-4, 1e-2, 0.5, 1.0, 2.0, 10.0, 50.0}) {
        CHECK(kinetic_I(x) == doctest::Approx(by_quadrature(x)).epsilon(1e-10));
    }
}

TEST_CASE("kinetic_I shape properties")
{
    // increasing and concave in x; s I(mu^2/(2 s^2)) -> mu as s -> 0
    double prev = kinetic_I(0.0);
    double prev_diff = 1e300;
    for (int i = 1; i <= 60; ++i) {
        const double x = 0.05 * i;
        const double v = kinetic_I(x);
        CHECK(v > prev);
        CHECK(v - prev < prev_diff + 1e-12);
        prev_diff = v - prev;
        prev = v;
    }
    const double mu = 1.0, s = 1e-3;
    CHECK(s * kinetic_I(mu * mu / (2.0 * s * s)) == doctest::Approx(mu).epsilon(1e-5));
    CHECK_THROWS_AS((void)kinetic_I(-1e-3), std::domain_error);
}
