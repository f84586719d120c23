#include "ghc/freq.hpp"

#include <algorithm>
#include <array>

#include "ghc/error.hpp"

namespace ghc {

FrequencyTable build_frequency_table(std::span<const std::uint8_t> input) {
    if (input.empty()) raise(Errc::EmptyInput, "nothing to code");

    std::array<std::uint64_t, 256> counts{};
    std::array<std::size_t, 256> first_pos{};
    for (std::size_t i = 0; i < input.size(); ++i) {
        const std::uint8_t b = input[i];
        if (counts[b] == 0) first_pos[b] = i;
        ++counts[b];
    }

    FrequencyTable table;
    table.total = input.size();
    for (int s = 0; s < 256; ++s)
        if (counts[s] > 0)
            table.entries.push_back({static_cast<Symbol>(s), counts[s], first_pos[s]});

    std::sort(table.entries.begin(), table.entries.end(),
              [](const FrequencyEntry& a, const FrequencyEntry& b) {
                  if (a.count != b.count) return a.count > b.count;
                  return a.first_pos < b.first_pos;
              });
    return table;
}

}  // namespace ghc
