#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "primezeta/chebyshev.hpp"

using namespace primezeta;

TEST_SUITE("chebyshev") {

TEST_CASE("smallest arguments") {
    CHECK(psi_exact(2.0) == std::log(2.0));
    CHECK(psi_exact(8.0) ==
          3.0 * std::log(2.0) + std::log(3.0) + std::log(5.0) + std::log(7.0));
    CHECK_THROWS_AS(psi_exact(1.9), std::invalid_argument);
    CHECK_THROWS_AS(psi_approx(1.9), std::invalid_argument);
}

TEST_CASE("pinned value at 100") {
    CHECK(std::fabs(psi_approx(100.0) - 94.0453112293574) < 1e-10);
    CHECK(std::fabs(psi_exact(100.0) - 94.0453112293574) < 1e-10);
}

TEST_CASE("both constructions are bitwise identical on integers") {
    for (long long x = 2; x <= 2000; ++x) {
        CAPTURE(x);
        REQUIRE(psi_exact(static_cast<double>(x)) == psi_approx(static_cast<double>(x)));
    }
}

TEST_CASE("both constructions are bitwise identical off the integers") {
    for (const double x : {2.5, 8.5, 99.9, 1000.25}) {
        CAPTURE(x);
        REQUIRE(psi_exact(x) == psi_approx(x));
    }
}

TEST_CASE("step structure: constant between prime powers, ln p jumps at them") {
    CHECK(psi_exact(7.999) == psi_exact(7.0));  // no prime power in (7, 7.999]
    CHECK(psi_exact(8.0) - psi_exact(7.999) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));  // 2^3
    CHECK(psi_exact(25.0) - psi_exact(24.5) ==
          doctest::Approx(std::log(5.0)).epsilon(1e-12));  // 5^2
    // non-decreasing on a coarse sweep
    double prev = 0.0;
    for (double x = 2.0; x <= 300.0; x += 0.5) {
        const double v = psi_exact(x);
        REQUIRE(v >= prev);
        prev = v;
    }
}

TEST_CASE("growth tracks x") {
    CHECK(std::fabs(psi_exact(5000.0) / 5000.0 - 1.0) < 0.03);
}

TEST_CASE("deviation envelope holds from 74 up") {
    const auto rows = check_psi_bound(74, 400, 1);
    for (const auto& r : rows) {
        CAPTURE(r.x);
        REQUIRE(r.holds);
    }
}

TEST_CASE("deviation envelope is crossed below 73") {
    const auto rows = check_psi_bound(10, 72, 1);
    size_t violations = 0;
    for (const auto& r : rows)
        if (!r.holds) ++violations;
    CHECK(violations >= 1);
}

TEST_CASE("envelope value at 100") {
    const auto rows = check_psi_bound(100, 100, 1);
    REQUIRE(rows.size() == 1);
    CHECK(std::fabs(rows[0].rhs - 8.440) < 1e-2);
    CHECK(rows[0].psi == psi_exact(100.0));
}

TEST_CASE("bound check argument guards") {
    CHECK_THROWS_AS(check_psi_bound(1, 100, 1), std::invalid_argument);
    CHECK_THROWS_AS(check_psi_bound(100, 50, 1), std::invalid_argument);
    CHECK_THROWS_AS(check_psi_bound(74, 100, 0), std::invalid_argument);
}

} // TEST_SUITE
