#include <cstdint>
#include <stdexcept>

#include "doctest.h"
#include "primezeta/primes.hpp"
#include "primezeta/random_table.hpp"

using namespace primezeta;

TEST_SUITE("random_table") {

TEST_CASE("constant-zero source forces the doubling sequence") {
    const auto rows = generate_set_with([](double) { return 0.0; }, 0);
    REQUIRE(rows.size() == static_cast<size_t>(kRowsPerSet));
    for (int i = 0; i < kRowsPerSet; ++i) {
        CAPTURE(i);
        REQUIRE(rows[static_cast<size_t>(i)].k_param == 1);
        REQUIRE(rows[static_cast<size_t>(i)].u == (1LL << (i + 1)) - 1);  // 1, 3, 7, 15...
    }
}

TEST_CASE("rows are odd, grow at least geometrically, and classify correctly") {
    const auto rows = generate_table(20240817ULL, 4);
    REQUIRE(rows.size() == static_cast<size_t>(4 * kRowsPerSet));
    long long prev_u = 0;
    int prev_set = -1;
    for (const auto& r : rows) {
        CAPTURE(r.set_index);
        CAPTURE(r.row_index);
        REQUIRE(r.u % 2 == 1);
        REQUIRE(r.k_param >= 1);
        REQUIRE(r.k_param <= 100);
        if (r.set_index == prev_set) REQUIRE(r.u >= 2 * prev_u + 1);
        prev_u = r.u;
        prev_set = r.set_index;
        const double expected =
            static_cast<double>(oracle_is_prime(r.u)) * static_cast<double>(r.u);
        REQUIRE(r.generated == expected);
    }
}

TEST_CASE("identical seeds reproduce identical tables") {
    const auto a = generate_table(42ULL, 3);
    const auto b = generate_table(42ULL, 3);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].u == b[i].u);
        REQUIRE(a[i].k_param == b[i].k_param);
        REQUIRE(a[i].generated == b[i].generated);
    }
}

TEST_CASE("different seeds diverge") {
    const auto a = generate_table(1ULL, 1);
    const auto b = generate_table(2ULL, 1);
    bool any_diff = false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].u != b[i].u || a[i].k_param != b[i].k_param) any_diff = true;
    CHECK(any_diff);
}

TEST_CASE("uniform draws stay inside the half-open interval") {
    SplitMix64 rng(7ULL);
    for (int i = 0; i < 10000; ++i) {
        const double v = rng.uniform(100.0);
        REQUIRE(v >= 0.0);
        REQUIRE(v < 100.0);
    }
}

TEST_CASE("set count must be positive") {
    CHECK_THROWS_AS(generate_table(1ULL, 0), std::invalid_argument);
}

} // TEST_SUITE
