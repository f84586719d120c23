#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ghc/bitstring.hpp"
#include "ghc/freq.hpp"

namespace ghc {

struct WeightedLeaf {
    std::size_t key = 0;        // caller-defined identity (symbol or group index)
    std::uint64_t weight = 0;   // >= 1
};

// Optimal prefix-code lengths by repeated minimum-pair merging. Equal
// weights fall back to the earliest-created node: input leaves first, in
// input order, then internal nodes in creation order. A single leaf gets
// length 1 so the payload stays delimitable. Result is aligned with the
// input; throws NoLeaves on an empty list.
std::vector<int> build_code_lengths(std::span<const WeightedLeaf> leaves);

// Canonical code values from lengths: sort by (length ascending, input
// position ascending), count upward, left-shift at each length boundary.
// Throws KraftViolation when the lengths cannot form a prefix code.
std::vector<BitString> assign_canonical_codes(std::span<const int> lengths);

enum class CodebookMode : std::uint8_t {
    Classic = 0,
    GroupedLiteral = 1,
    GroupedPrefixFree = 2,
};

const char* mode_name(CodebookMode mode);

struct CodeEntry {
    Symbol symbol = 0;
    BitString code;

    bool operator==(const CodeEntry&) const = default;
};

// Group membership as carried in the container header: member symbols in
// rank order (count descending, first occurrence breaking ties) plus the
// bit length of the group's canonical code.
struct GroupRecord {
    std::vector<Symbol> members;
    int code_length = 0;

    bool operator==(const GroupRecord&) const = default;
};

struct Codebook {
    CodebookMode mode = CodebookMode::Classic;
    int k = 1;                        // group size; 1 for classic
    std::vector<CodeEntry> codes;     // in frequency-table order
    std::vector<GroupRecord> groups;  // empty for classic

    const BitString* find(Symbol s) const;

    bool operator==(const Codebook&) const = default;
};

Codebook make_classic_codebook(const FrequencyTable& table);

// Sum over the table of count * code length; the payload size in bits.
std::uint64_t weighted_code_cost(const Codebook& book, const FrequencyTable& table);

}  // namespace ghc
