#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "primezeta/euler.hpp"

using namespace primezeta;

TEST_SUITE("euler") {

TEST_CASE("real series partial sums") {
    const double s100 = zeta_series_real(2.0, 100);
    const double exact = std::numbers::pi * std::numbers::pi / 6.0;
    // tail of sum n^-2 beyond 100 lies strictly between 1/101 and 1/100
    CHECK(exact - s100 > 1.0 / 101.0);
    CHECK(exact - s100 < 1.0 / 100.0);
    CHECK(zeta_series_real(2.0, 200) > s100);
    CHECK_THROWS_AS(zeta_series_real(1.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(zeta_series_real(2.0, 0), std::invalid_argument);
}

TEST_CASE("single-factor product is exact") {
    CHECK(euler_product_primes(2.0, 1) == 4.0 / 3.0);
}

TEST_CASE("hundred-prime product values") {
    CHECK(std::fabs(euler_product_primes(3.0, 100) - 1.202056602179509) < 1e-12);
    CHECK(std::fabs(euler_product_primes(2.0, 100) - 1.644515221724293) < 1e-12);
    // 17 digits of the sigma = 4 hundred-prime product
    CHECK(std::fabs(euler_product_primes(4.0, 100) - 1.0823232333691943) < 1e-13);
}

TEST_CASE("gated reconstruction is bitwise equal to the prime-table product") {
    for (const double sigma : {2.0, 3.0, 4.0}) {
        for (const long long h : {1LL, 5LL, 25LL, 100LL}) {
            CAPTURE(sigma);
            CAPTURE(h);
            REQUIRE(euler_product_gated(sigma, h) == euler_product_primes(sigma, h));
        }
    }
}

TEST_CASE("product approaches the series from below the limit") {
    const double product = euler_product_primes(2.0, 100);
    const double limit = std::numbers::pi * std::numbers::pi / 6.0;
    const double rel = (limit - product) / limit;
    CHECK(std::fabs(rel - 2.546e-4) < 1e-6);  // truncation gap of the 100-prime product
    CHECK(product < limit);
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(euler_product_primes(1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(euler_product_primes(0.5, 10), std::invalid_argument);
    CHECK_THROWS_AS(euler_product_primes(2.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(euler_product_gated(1.0, 10), std::invalid_argument);
}

} // TEST_SUITE
