#pragma once

// Test-only oracles, deliberately independent of the library's tree and
// canonical-code machinery: costs come from scan-based minimum-pair
// merging over a plain vector, optima from exhaustive search over length
// vectors.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

// Total weighted length of an optimal prefix code: the sum of the merged
// weights from repeatedly combining the two smallest entries. O(n^2)
// scans, no heap. A single weight costs itself (one bit per occurrence).
inline std::uint64_t merge_cost(std::vector<std::uint64_t> weights) {
    if (weights.empty()) return 0;
    if (weights.size() == 1) return weights[0];
    std::uint64_t total = 0;
    while (weights.size() > 1) {
        std::size_t lo = 0;
        for (std::size_t i = 1; i < weights.size(); ++i)
            if (weights[i] < weights[lo]) lo = i;
        std::swap(weights[lo], weights.back());
        const std::uint64_t a = weights.back();
        weights.pop_back();
        lo = 0;
        for (std::size_t i = 1; i < weights.size(); ++i)
            if (weights[i] < weights[lo]) lo = i;
        const std::uint64_t merged = a + weights[lo];
        weights[lo] = merged;
        total += merged;
    }
    return total;
}

namespace detail {

inline void brute_rec(const std::vector<std::uint64_t>& counts, std::size_t i, int min_len,
                      std::uint64_t kraft_scaled, std::uint64_t cost, int max_len,
                      std::uint64_t& best) {
    if (cost >= best) return;
    if (i == counts.size()) {
        best = cost;
        return;
    }
    for (int len = min_len; len <= max_len; ++len) {
        const std::uint64_t used = std::uint64_t{1} << (max_len - len);
        if (kraft_scaled + used > (std::uint64_t{1} << max_len)) continue;
        brute_rec(counts, i + 1, len, kraft_scaled + used, cost + counts[i] * len, max_len, best);
    }
}

}  // namespace detail

// Minimum of sum(count_i * len_i) over every length vector with entries in
// 1..max_len satisfying the Kraft inequality. Counts are sorted descending
// and lengths enumerated non-decreasing, which is optimal by exchange.
inline std::uint64_t brute_force_optimum(std::vector<std::uint64_t> counts, int max_len = 8) {
    std::sort(counts.begin(), counts.end(), std::greater<>());
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    detail::brute_rec(counts, 0, 1, 0, 0, max_len, best);
    return best;
}

// Random byte string over an alphabet of `distinct` values drawn without
// replacement from 0..255.
inline std::vector<std::uint8_t> random_string(std::mt19937& rng, std::size_t distinct,
                                               std::size_t length) {
    std::vector<int> alphabet(256);
    for (int i = 0; i < 256; ++i) alphabet[i] = i;
    std::shuffle(alphabet.begin(), alphabet.end(), rng);
    alphabet.resize(distinct);

    std::uniform_int_distribution<std::size_t> pick(0, distinct - 1);
    std::vector<std::uint8_t> bytes(length);
    for (auto& b : bytes) b = static_cast<std::uint8_t>(alphabet[pick(rng)]);
    return bytes;
}

// Byte string whose histogram has `symbols` distinct values with counts in
// 1..max_count, shuffled so first positions vary.
inline std::vector<std::uint8_t> random_table_input(std::mt19937& rng, std::size_t symbols,
                                                    std::uint64_t max_count) {
    std::vector<int> alphabet(256);
    for (int i = 0; i < 256; ++i) alphabet[i] = i;
    std::shuffle(alphabet.begin(), alphabet.end(), rng);

    std::uniform_int_distribution<std::uint64_t> count_dist(1, max_count);
    std::vector<std::uint8_t> bytes;
    for (std::size_t s = 0; s < symbols; ++s) {
        const std::uint64_t count = count_dist(rng);
        for (std::uint64_t c = 0; c < count; ++c)
            bytes.push_back(static_cast<std::uint8_t>(alphabet[s]));
    }
    std::shuffle(bytes.begin(), bytes.end(), rng);
    return bytes;
}

}  // namespace oracle
