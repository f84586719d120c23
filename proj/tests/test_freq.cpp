#include <doctest.h>

#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "ghc/error.hpp"
#include "ghc/freq.hpp"
#include "oracles.hpp"

using namespace ghc;

namespace {

std::vector<std::uint8_t> bytes_of(std::string_view s) {
    return std::vector<std::uint8_t>(s.begin(), s.end());
}

}  // namespace

TEST_CASE("reference text orders by count then first occurrence") {
    const auto input = bytes_of("IEEECOMPUTATIONALINTELLIGENCE");
    const FrequencyTable table = build_frequency_table(input);

    const std::vector<std::pair<char, std::uint64_t>> expected = {
        {'E', 6}, {'I', 4}, {'T', 3}, {'N', 3}, {'L', 3}, {'C', 2},
        {'O', 2}, {'A', 2}, {'M', 1}, {'P', 1}, {'U', 1}, {'G', 1},
    };
    REQUIRE(table.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(table.entries[i].symbol == static_cast<Symbol>(expected[i].first));
        CHECK(table.entries[i].count == expected[i].second);
    }
    CHECK(table.total == 29);
}

TEST_CASE("single symbol input") {
    const auto input = bytes_of("AAA");
    const FrequencyTable table = build_frequency_table(input);
    REQUIRE(table.size() == 1);
    CHECK(table.entries[0].symbol == 'A');
    CHECK(table.entries[0].count == 3);
    CHECK(table.entries[0].first_pos == 0);
}

TEST_CASE("empty input is rejected") {
    const std::vector<std::uint8_t> empty;
    CHECK_THROWS_AS(build_frequency_table(empty), Error);
    try {
        build_frequency_table(empty);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EmptyInput);
    }
}

TEST_CASE("table invariants hold on random inputs") {
    std::mt19937 rng(0xf00d);
    for (int round = 0; round < 200; ++round) {
        const auto input = oracle::random_string(rng, 1 + rng() % 32, 1 + rng() % 500);
        const FrequencyTable table = build_frequency_table(input);

        std::uint64_t sum = 0;
        for (const FrequencyEntry& e : table.entries) {
            CHECK(e.count >= 1);
            sum += e.count;
        }
        CHECK(sum == input.size());

        for (std::size_t i = 1; i < table.entries.size(); ++i) {
            const FrequencyEntry& prev = table.entries[i - 1];
            const FrequencyEntry& cur = table.entries[i];
            const bool ordered = prev.count > cur.count ||
                                 (prev.count == cur.count && prev.first_pos < cur.first_pos);
            CHECK(ordered);
        }

        // determinism
        const FrequencyTable again = build_frequency_table(input);
        CHECK(again.entries == table.entries);
    }
}
