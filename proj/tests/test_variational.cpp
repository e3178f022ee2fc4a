#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "salbounds/variational.hpp"

using namespace salbounds;

TEST_CASE("gaussian energy assembles I and J")
{
    const auto shape = exponential_shape();
    const double mu = 1.0, nu = 1.0, s = 1.0;
    const double expect = kinetic_I(0.5) + potential_J(shape, 1.0);
    CHECK(gaussian_energy(shape, mu, nu, s) == doctest::Approx(expect).epsilon(1e-14));

    // massless case: E(s) = 2 s / sqrt(pi) + nu J(1/s)
    const double s2 = 0.7;
    CHECK(gaussian_energy(shape, 0.0, 2.0, s2) ==
          doctest::Approx(s2 * two_over_sqrt_pi + 2.0 * potential_J(shape, 1.0 / s2))
              .epsilon(1e-13));

    // s -> 0 recovers the rest energy mu
    CHECK(gaussian_energy(shape, 1.0, 1.0, 1e-3) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("pair kinetic factor collapses at lambda = 1/2")
{
    const auto shape = exponential_shape();
    for (double s : {0.3, 1.0, 2.5}) {
        for (double nu : {0.5, 1.0, 4.0}) {
            CHECK(gaussian_energy_pair(shape, 1.0, nu, 0.5, s) ==
                  doctest::Approx(gaussian_energy(shape, 1.0, nu, s)).epsilon(1e-12));
        }
    }
}

TEST_CASE("upper bound e_g reproduces table values")
{
    const auto shape = exponential_shape();
    const auto r1 = upper_bound_eg(shape, 1.0, 1.0);
    REQUIRE(r1.has_value());
    CHECK(std::fabs(r1->value - 1.002270) < 5e-5);
    CHECK(r1->stationary);
    CHECK(r1->boundary_infimum == doctest::Approx(1.0).epsilon(1e-14));

    const auto r2 = upper_bound_eg(shape, 1.0, 3.0);
    REQUIRE(r2.has_value());
    CHECK(std::fabs(r2->value - 0.454366) < 5e-5);

    const auto r3 = upper_bound_eg(shape, 1.0, 6.0);
    REQUIRE(r3.has_value());
    CHECK(std::fabs(r3->value - (-1.015560)) < 5e-5);
}

TEST_CASE("upper bound e_2g reproduces table values")
{
    const auto shape = exponential_shape();
    const auto r1 = upper_bound_e2g(shape, 1.0, 0.6, 1.0);
    REQUIRE(r1.has_value());
    CHECK(std::fabs(r1->value - 0.993207) < 5e-5);

    const auto r2 = upper_bound_e2g(shape, 1.0, 5.0, 1.0);
    REQUIRE(r2.has_value());
    CHECK(std::fabs(r2->value - (-1.007410)) < 5e-5);
}

TEST_CASE("no interior minimum at weak coupling")
{
    const auto shape = exponential_shape();
    CHECK_FALSE(upper_bound_eg(shape, 1.0, 0.6).has_value());
    CHECK_FALSE(upper_bound_eg(shape, 1.0, 0.8).has_value());
    CHECK(upper_bound_eg(shape, 1.0, 1.0).has_value());
}

TEST_CASE("minimizer is stationary")
{
    const auto shape = exponential_shape();
    for (double nu : {1.0, 2.5, 5.0}) {
        const auto r = upper_bound_eg(shape, 1.0, nu);
        REQUIRE(r.has_value());
        const double s = r->s_star, h = 1e-5 * std::max(1.0, s);
        const double d = (gaussian_energy(shape, 1.0, nu, s + h) -
                          gaussian_energy(shape, 1.0, nu, s - h)) /
                         (2.0 * h);
        CHECK(std::fabs(d) < 1e-5 * std::max(1.0, std::fabs(r->value)));
        // true minimum, not saddle
        CHECK(gaussian_energy(shape, 1.0, nu, 0.9 * s) > r->value - 1e-12);
        CHECK(gaussian_energy(shape, 1.0, nu, 1.1 * s) > r->value - 1e-12);
    }
}

TEST_CASE("bounds decrease with coupling")
{
    const auto shape = exponential_shape();
    double prev_g = 1e300, prev_2g = 1e300;
    for (double nu : {1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 6.0}) {
        const auto g = upper_bound_eg(shape, 1.0, nu);
        const auto p = upper_bound_e2g(shape, 1.0, nu, 1.0);
        REQUIRE(g.has_value());
        REQUIRE(p.has_value());
        CHECK(g->value < prev_g);
        CHECK(p->value < prev_2g);
        CHECK(p->value < g->value);  // e_2g sits below e_g
        prev_g = g->value;
        prev_2g = p->value;
    }
}
