#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "coeffkit/checked.hpp"
#include "coeffkit/errors.hpp"
#include "coeffkit/oracle.hpp"

using namespace coeffkit;

namespace {
using u128 = unsigned __int128;
} // namespace

TEST_CASE("expansion fixtures") {
    CHECK(oracle::expand_power_sum({2, 3}) == CoefficientVector{1, 3, 6, 7, 6, 3, 1});
    CHECK(oracle::expand_power_sum({5, 1}) == CoefficientVector{1, 1, 1, 1, 1, 1});
    CHECK(oracle::expand_power_sum({1, 4}) == CoefficientVector{1, 4, 6, 4, 1});
    CHECK(oracle::expand_power_sum({0, 7}) == CoefficientVector{1});

    CHECK_THROWS_AS(oracle::expand_power_sum({3, 0}), DomainError);
}

TEST_CASE("expansion invariants: palindrome, total, stabilized prefix") {
    std::mt19937_64 rng(20240620);
    for (int i = 0; i < 150; ++i) {
        const std::uint64_t degree = std::uniform_int_distribution<std::uint64_t>(0, 50)(rng);
        const std::uint64_t power = std::uniform_int_distribution<std::uint64_t>(1, 6)(rng);
        const CoefficientVector expansion = oracle::expand_power_sum({degree, power});

        REQUIRE(expansion.size() == power * degree + 1);

        auto reversed = expansion;
        std::reverse(reversed.begin(), reversed.end());
        CHECK(expansion == reversed);

        u128 total = 0;
        for (std::uint64_t c : expansion)
            total += c;
        CHECK(total == u128{checked::pow(degree + 1, power)});

        for (std::uint64_t m = 0; m <= degree && m <= power * degree; ++m)
            CHECK(expansion[m] == checked::binomial(m + power - 1, power - 1));
    }
}

TEST_CASE("composition count fixtures") {
    CHECK(oracle::bounded_composition_count({4, 3}, 9) == 10);
    CHECK(oracle::bounded_composition_count({3, 4}, 6) == 44);
    CHECK(oracle::bounded_composition_count({7, 2}, 7) == 8);
    CHECK(oracle::bounded_composition_count({0, 3}, 0) == 1);

    CHECK_THROWS_AS(oracle::bounded_composition_count({7, 2}, 15), DomainError);
    CHECK_THROWS_AS(oracle::bounded_composition_count({3, 0}, 0), DomainError);
}

TEST_CASE("convolution and inclusion-exclusion agree everywhere") {
    std::mt19937_64 rng(20240621);
    for (int i = 0; i < 120; ++i) {
        const std::uint64_t degree = std::uniform_int_distribution<std::uint64_t>(0, 30)(rng);
        const std::uint64_t power = std::uniform_int_distribution<std::uint64_t>(1, 6)(rng);
        const CoefficientVector expansion = oracle::expand_power_sum({degree, power});
        for (std::uint64_t m = 0; m < expansion.size(); ++m)
            CHECK(expansion[m] == oracle::bounded_composition_count({degree, power}, m));
    }
}

TEST_CASE("oracle rows slice the central block") {
    CHECK(oracle::unique_row_oracle(3, 3).values == std::vector<std::uint64_t>{6, 7, 6});
    CHECK(oracle::unique_row_oracle(4, 4).values ==
          std::vector<std::uint64_t>{20, 31, 40, 44, 40, 31, 20});
    CHECK(oracle::unique_row_oracle(2, 5).values == std::vector<std::uint64_t>{5});

    const UniqueRow row = oracle::unique_row_oracle(3, 5);
    CHECK(row.power == 3);
    CHECK(row.row == 5);
    CHECK(row.values == std::vector<std::uint64_t>{15, 18, 19, 18, 15});

    CHECK_THROWS_AS(oracle::unique_row_oracle(1, 3), DomainError);
    CHECK_THROWS_AS(oracle::unique_row_oracle(3, 0), DomainError);
}

TEST_CASE("the oracle covers powers with no closed form") {
    const CoefficientVector expansion = oracle::expand_power_sum({3, 6});
    u128 total = 0;
    for (std::uint64_t c : expansion)
        total += c;
    CHECK(total == u128{checked::pow(4, 6)});

    const UniqueRow row = oracle::unique_row_oracle(6, 4);
    CHECK(row.values.size() == 13);
    CHECK(row.values.front() == checked::binomial(8, 5));
    auto reversed = row.values;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(row.values == reversed);
}

TEST_CASE("first-occurrence value sets") {
    CHECK(oracle::first_occurrence_values(3, 4) == std::set<std::uint64_t>{10, 12});
    CHECK(oracle::first_occurrence_values(4, 3) == std::set<std::uint64_t>{10, 16, 19});
    CHECK(oracle::first_occurrence_values(2, 2) == std::set<std::uint64_t>{2});
    CHECK(oracle::first_occurrence_values(3, 1) == std::set<std::uint64_t>{1});
}

TEST_CASE("first-occurrence values always lie in the central block") {
    std::mt19937_64 rng(20240622);
    for (int i = 0; i < 120; ++i) {
        const std::uint64_t power = std::uniform_int_distribution<std::uint64_t>(2, 4)(rng);
        const std::uint64_t row = std::uniform_int_distribution<std::uint64_t>(1, 60)(rng);
        const auto novel = oracle::first_occurrence_values(power, row);
        const auto central = oracle::unique_row_oracle(power, row).values;
        const std::set<std::uint64_t> block(central.begin(), central.end());
        CHECK(std::includes(block.begin(), block.end(), novel.begin(), novel.end()));
    }
}

TEST_CASE("central block and first-occurrence sets coincide only up to known rows") {
    // For power 2 the two readings agree everywhere tested; for powers 3 and
    // 4 a central value can repeat an earlier row's value, so agreement stops
    // at rows 7 and 5. The first repeats: 36 appears at rows 7 and 8 of the
    // power-3 triangle, 80 at rows 5 and 6 of the power-4 triangle.
    for (std::uint64_t row = 1; row <= 60; ++row) {
        const auto central = oracle::unique_row_oracle(2, row).values;
        CHECK(oracle::first_occurrence_values(2, row) ==
              std::set<std::uint64_t>(central.begin(), central.end()));
    }
    for (std::uint64_t row = 1; row <= 7; ++row) {
        const auto central = oracle::unique_row_oracle(3, row).values;
        CHECK(oracle::first_occurrence_values(3, row) ==
              std::set<std::uint64_t>(central.begin(), central.end()));
    }
    for (std::uint64_t row = 1; row <= 5; ++row) {
        const auto central = oracle::unique_row_oracle(4, row).values;
        CHECK(oracle::first_occurrence_values(4, row) ==
              std::set<std::uint64_t>(central.begin(), central.end()));
    }

    const auto power3_row8 = oracle::first_occurrence_values(3, 8);
    CHECK(power3_row8.count(36) == 0);
    const auto row8_block = oracle::unique_row_oracle(3, 8).values;
    CHECK(std::count(row8_block.begin(), row8_block.end(), 36) > 0);

    const auto power4_row6 = oracle::first_occurrence_values(4, 6);
    CHECK(power4_row6.count(80) == 0);
    const auto row6_block = oracle::unique_row_oracle(4, 6).values;
    CHECK(std::count(row6_block.begin(), row6_block.end(), 80) > 0);
}

TEST_CASE("oracle overflow is an error, not a wrap") {
    CHECK_THROWS_AS(oracle::expand_power_sum({1, 100}), OverflowError);
    CHECK_THROWS_AS(oracle::bounded_composition_count({1, 100}, 50), OverflowError);
    CHECK_THROWS_AS(oracle::expand_power_sum({std::uint64_t{1} << 40, 4}), DomainError);
}
