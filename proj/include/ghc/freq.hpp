#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ghc {

using Symbol = std::uint8_t;

struct FrequencyEntry {
    Symbol symbol = 0;
    std::uint64_t count = 0;
    std::size_t first_pos = 0;  // index of the first occurrence in the input

    bool operator==(const FrequencyEntry&) const = default;
};

// Byte histogram ordered by (count descending, first occurrence ascending).
// The order is total, so everything built on top of it is deterministic.
struct FrequencyTable {
    std::vector<FrequencyEntry> entries;
    std::uint64_t total = 0;  // input length in bytes

    std::size_t size() const { return entries.size(); }
};

FrequencyTable build_frequency_table(std::span<const std::uint8_t> input);

}  // namespace ghc
