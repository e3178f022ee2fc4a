#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "salbounds/scaling.hpp"

using namespace salbounds;

TEST_CASE("two-body unit point")
{
    const auto s = to_scaled({2, 1.0, 1.0, 4.0});
    CHECK(s.mu == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.nu == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s.lambda == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(s.gamma == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("massless ten-body point")
{
    const auto s = to_scaled({10, 0.0, 3.0, 1.0});
    CHECK(s.mu == 0.0);
    CHECK(s.gamma == doctest::Approx(45.0).epsilon(1e-14));
    CHECK(s.lambda == doctest::Approx(0.9).epsilon(1e-14));
    CHECK(s.nu == doctest::Approx(std::sqrt(45.0) * 3.0 / 2.0).epsilon(1e-14));
}

TEST_CASE("three-body with mass")
{
    const auto s = to_scaled({3, 2.0, 1.0, 1.0});
    CHECK(s.lambda == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(s.mu == doctest::Approx(2.0 / std::sqrt(4.0 / 3.0)).epsilon(1e-14));
    CHECK(s.nu == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("definition identities across N")
{
    for (std::int64_t n : {std::int64_t{2}, std::int64_t{3}, std::int64_t{7},
                           std::int64_t{10}, std::int64_t{100},
                           std::int64_t{100000}, std::int64_t{1000000}}) {
        const PhysicalParams p{n, 0.7, 1.3, 0.4};
        const auto s = to_scaled(p);
        const double nn = static_cast<double>(n);
        CHECK(s.lambda == doctest::Approx((nn - 1.0) / nn).epsilon(1e-13));
        CHECK(s.gamma == doctest::Approx(nn * (nn - 1.0) / 2.0).epsilon(1e-13));
        CHECK(s.mu ==
              doctest::Approx(p.mass * p.range / std::sqrt(2.0 * s.lambda)).epsilon(1e-13));
        CHECK(s.nu ==
              doctest::Approx(std::sqrt(s.gamma) * p.coupling * p.range / 2.0).epsilon(1e-13));
        // mu range: m a / sqrt(2) <= mu <= m a
        CHECK(s.mu >= p.mass * p.range / std::sqrt(2.0) - 1e-12);
        CHECK(s.mu <= p.mass * p.range + 1e-12);
    }
}

TEST_CASE("lambda increases with N")
{
    double prev = 0.0;
    for (std::int64_t n = 2; n <= 50; ++n) {
        const double lam = to_scaled({n, 1.0, 1.0, 1.0}).lambda;
        CHECK(lam > prev);
        prev = lam;
    }
}

TEST_CASE("energy round-trip")
{
    const PhysicalParams p{5, 1.0, 2.0, 0.3};
    const auto s = to_scaled(p);
    for (double e : {-1.25, 0.0, 0.5, 0.980384}) {
        const double E = energy_from_scaled(e, p);
        CHECK(E * p.range / (2.0 * std::sqrt(s.gamma)) ==
              doctest::Approx(e).epsilon(1e-14));
    }
    CHECK(energy_from_scaled(1.0, {2, 1.0, 1.0, 1.0}) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(energy_from_scaled(0.980384, {2, 1.0, 1.0, 1.0}) ==
          doctest::Approx(1.960768).epsilon(1e-12));
    CHECK(energy_from_scaled(0.0, p) == 0.0);
}

TEST_CASE("jacobi constants")
{
    const auto c2 = jacobi_constants(2);
    CHECK(c2.alpha == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(c2.beta == 0.0);
    CHECK(c2.b == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(c2.delta == 0.0);

    for (std::int64_t n : {std::int64_t{3}, std::int64_t{4}, std::int64_t{17}}) {
        const auto c = jacobi_constants(n);
        const double nn = static_cast<double>(n);
        // alpha^2 - beta^2 = 2/(N-1) and alpha delta = beta
        CHECK(c.alpha * c.alpha - c.beta * c.beta ==
              doctest::Approx(2.0 / (nn - 1.0)).epsilon(1e-13));
        CHECK(c.b == doctest::Approx(1.0 / std::sqrt(nn * (nn - 1.0))).epsilon(1e-14));
        CHECK(c.delta == doctest::Approx(std::sqrt((nn - 2.0) / nn)).epsilon(1e-14));
        CHECK(c.alpha * c.delta == doctest::Approx(c.beta).epsilon(1e-13));
    }
}

TEST_CASE("precondition failures throw")
{
    CHECK_THROWS_AS((void)to_scaled({1, 1.0, 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS((void)to_scaled({2, -1.0, 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS((void)to_scaled({2, 1.0, 0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS((void)to_scaled({2, 1.0, 1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS((void)jacobi_constants(1), std::invalid_argument);
}
