#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "primezeta/primes.hpp"

using namespace primezeta;

TEST_SUITE("primes") {

TEST_CASE("sign comparison and fractional part") {
    CHECK(sign_compare(3.0, 2.0) == 1);
    CHECK(sign_compare(2.0, 3.0) == -1);
    CHECK(sign_compare(5.0, 5.0) == 0);
    CHECK(fractional_part(7.25) == 0.25);
    CHECK(fractional_part(7.0) == 0.0);
}

TEST_CASE("product bounds") {
    CHECK(outer_bound(2.0) == 2);
    CHECK(outer_bound(9.0) == 5);
    CHECK(outer_bound(10.0) == 6);
    CHECK(inner_bound(2.0, 2) == 1);  // empty inner range at u = 2
    CHECK(inner_bound(3.0, 2) == 2);
    CHECK(inner_bound(9.0, 2) == 3);
}

TEST_CASE("auxiliary components at the first composite odd square") {
    const AuxComponents a = aux_components(9.0, 2, 2);
    CHECK(a.delta == 0.0);
    CHECK(a.h1 == 5);
    CHECK(a.h2 == 3);
    CHECK(a.eta == 0);     // 9 == (2*2-1)*(2*2-1)
    CHECK(a.omega0 == 1);
    CHECK(a.omega1 == 1);
    CHECK(a.omega2 == 0);  // the vanishing factor that rejects 9
    CHECK_THROWS_AS(aux_components(9.0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(aux_components(-1.0, 2, 2), std::invalid_argument);
}

TEST_CASE("indicator small values, both modes") {
    for (const auto mode : {IndicatorMode::literal, IndicatorMode::optimized}) {
        CHECK(discriminate(0.0, mode) == 0);
        CHECK(discriminate(1.0, mode) == 0);
        CHECK(discriminate(2.0, mode) == 1);  // empty inner product at u = 2
        CHECK(discriminate(3.0, mode) == 1);
        CHECK(discriminate(4.0, mode) == 0);
        CHECK(discriminate(9.0, mode) == 0);
        CHECK(discriminate(97.0, mode) == 1);
        CHECK(discriminate(0.5, mode) == 0);   // non-integers are never prime
        CHECK(discriminate(2.5, mode) == 0);
        CHECK(discriminate(97.0000001, mode) == 0);
    }
}

TEST_CASE("indicator domain guards") {
    CHECK_THROWS_AS(discriminate(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(discriminate(-0.5, IndicatorMode::literal), std::invalid_argument);
    CHECK_THROWS_AS(discriminate(9.1e15), std::invalid_argument);  // beyond 2^53
    CHECK(discriminate(9007199254740992.0 - 1.0) >= 0);            // 2^53 - 1 accepted
}

TEST_CASE("literal and optimized modes agree on [0, 2000]") {
    for (long long u = 0; u <= 2000; ++u) {
        const double ud = static_cast<double>(u);
        const int lit = discriminate(ud, IndicatorMode::literal);
        const int opt = discriminate(ud, IndicatorMode::optimized);
        CAPTURE(u);
        REQUIRE(lit == opt);
    }
}

TEST_CASE("optimized mode matches the trial-division oracle on [0, 5000]") {
    for (long long u = 0; u <= 5000; ++u) {
        CAPTURE(u);
        REQUIRE(discriminate(static_cast<double>(u)) == oracle_is_prime(u));
    }
}

TEST_CASE("generator returns u at primes and 0 elsewhere") {
    CHECK(generate(7.0) == 7.0);
    CHECK(generate(8.0) == 0.0);
    CHECK(generate(1.0) == 0.0);
    CHECK(generate(2351.0) == 2351.0);
    CHECK(generate(1270197.0) == 0.0);  // 3 * 423399
}

TEST_CASE("forward differences of the generator") {
    const auto [d1_at2, d2_at2] = discrete_derivatives(2);
    CHECK(d1_at2 == 1.0);   // G(3) - G(2)
    CHECK(d2_at2 == -4.0);  // G(4) - 2 G(3) + G(2) = 0 - 6 + 2
    const auto [d1_at7, d2_at7] = discrete_derivatives(7);
    CHECK(d1_at7 == -7.0);  // G(8) - G(7)
    const auto [d1_at24, d2_at24] = discrete_derivatives(24);
    CHECK(d1_at24 == 0.0);
    CHECK(d2_at24 == 0.0);  // 24, 25, 26 all composite
}

TEST_CASE("prime counting") {
    CHECK(count_primes(100, 2) == 25);
    CHECK(count_primes(1000, 2) == 168);
    CHECK(count_primes(10, 5) == 2);  // {5, 7}
    CHECK(count_primes(2, 2) == 1);
    CHECK(count_primes(1, 0) == 0);
    CHECK_THROWS_AS(count_primes(10, 11), std::invalid_argument);
    CHECK_THROWS_AS(count_primes(10, -1), std::invalid_argument);
}

TEST_CASE("nth prime by indicator advance") {
    CHECK(nth_prime(1) == 2);
    CHECK(nth_prime(4) == 7);
    CHECK(nth_prime(25) == 97);
    CHECK(nth_prime(100) == 541);
    CHECK_THROWS_AS(nth_prime(0), std::invalid_argument);
}

TEST_CASE("progression primes") {
    const auto p34 = progression_primes(3, 4, 30);
    CHECK(p34 == std::vector<long long>{3, 7, 11, 19, 23});
    const auto p22 = progression_primes(2, 2, 10);
    CHECK(p22 == std::vector<long long>{2});
    CHECK_THROWS_AS(progression_primes(1, 4, 30), std::invalid_argument);
    CHECK_THROWS_AS(progression_primes(5, 4, 30), std::invalid_argument);
    CHECK_THROWS_AS(progression_primes(3, 4, 2), std::invalid_argument);
}

TEST_CASE("trial-division oracle sanity") {
    CHECK(oracle_is_prime(2) == 1);
    CHECK(oracle_is_prime(3) == 1);
    CHECK(oracle_is_prime(4) == 0);
    CHECK(oracle_is_prime(1) == 0);
    CHECK(oracle_is_prime(0) == 0);
    CHECK(oracle_is_prime(7919) == 1);   // 1000th prime
    CHECK(oracle_is_prime(7921) == 0);   // 89^2
}

} // TEST_SUITE
