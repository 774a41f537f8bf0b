#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "primezeta/estimates.hpp"

using namespace primezeta;

TEST_SUITE("estimates") {

TEST_CASE("logarithmic integral values") {
    CHECK(std::fabs(li_gauss(100.0) - 29.0810) < 5e-3);
    CHECK(std::fabs(li_gauss(1e5) - 9628.7638) < 1e-2);
    CHECK(li_gauss(2.0) == 0.0);  // integration interval collapses
    CHECK_THROWS_AS(li_gauss(1.5), std::invalid_argument);
    CHECK_THROWS_AS(li_gauss(100.0, -1e-8), std::invalid_argument);
}

TEST_CASE("asymptotic estimate") {
    CHECK(li_asymptotic(std::numbers::e) ==
          doctest::Approx(std::numbers::e).epsilon(1e-12));
    CHECK(std::fabs(li_asymptotic(1e5) - 8685.8896) < 1e-2);
    CHECK_THROWS_AS(li_asymptotic(1.0), std::invalid_argument);
}

TEST_CASE("prime number theorem ratio") {
    CHECK(std::fabs(pnt_ratio(1000) - 1.1605) < 1e-3);  // 168 / (1000 / ln 1000)
    CHECK(pnt_ratio(3) > 0.0);
    CHECK_THROWS_AS(pnt_ratio(2), std::invalid_argument);
}

TEST_CASE("deviation envelopes") {
    // sqrt(100) * ln(100) / (8 pi)
    CHECK(pi_bound_envelope(100.0, PiBoundKind::schoenfeld_pi) ==
          doctest::Approx(10.0 * std::log(100.0) / (8.0 * std::numbers::pi))
              .epsilon(1e-14));
    // the variant reads the product under one square root
    CHECK(pi_bound_envelope(100.0, PiBoundKind::schoenfeld_pi, true) ==
          doctest::Approx(std::sqrt(100.0 * std::log(100.0)) / (8.0 * std::numbers::pi))
              .epsilon(1e-14));
    CHECK(pi_bound_envelope(2700.0, PiBoundKind::trudgian) > 0.0);
}

TEST_CASE("prime-count deviation bound holds on the validated range") {
    const auto rows = check_pi_bound(2657, 2700, 1, PiBoundKind::schoenfeld_pi);
    CHECK(rows.size() == 44);
    for (const auto& r : rows) {
        CAPTURE(r.x);
        REQUIRE(r.holds);
        REQUIRE(r.margin > 0.0);
        REQUIRE(r.lhs >= 0.0);
    }
    const auto trows = check_pi_bound(2657, 2700, 1, PiBoundKind::trudgian);
    for (const auto& r : trows) {
        CAPTURE(r.x);
        REQUIRE(r.holds);
    }
}

TEST_CASE("bound validity thresholds") {
    CHECK_THROWS_AS(check_pi_bound(2656, 2700, 1, PiBoundKind::schoenfeld_pi),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_pi_bound(1, 100, 1, PiBoundKind::trudgian),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_pi_bound(2657, 2600, 1, PiBoundKind::schoenfeld_pi),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_pi_bound(2657, 2700, 0, PiBoundKind::schoenfeld_pi),
                    std::invalid_argument);
}

TEST_CASE("variant flag is recorded in reports") {
    const auto rows = check_pi_bound(2657, 2660, 1, PiBoundKind::schoenfeld_pi, true);
    for (const auto& r : rows) {
        CHECK(r.sqrt_product_variant);
        CHECK(r.kind == PiBoundKind::schoenfeld_pi);
    }
}

} // TEST_SUITE
