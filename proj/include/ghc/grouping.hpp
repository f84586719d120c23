#pragma once

#include <cstdint>
#include <vector>

#include "ghc/freq.hpp"
#include "ghc/huffman.hpp"

namespace ghc {

struct GroupMember {
    Symbol symbol = 0;
    std::uint64_t count = 0;

    bool operator==(const GroupMember&) const = default;
};

// Consecutive chunk of the frequency table. Members keep the table's order,
// so rank 1 (index 0) always holds the group's highest count.
struct SymbolGroup {
    std::vector<GroupMember> members;
    std::uint64_t aggregate = 0;
};

struct GroupedPlan {
    int k = 0;
    std::vector<SymbolGroup> groups;
    std::vector<BitString> group_codes;  // canonical Huffman over aggregates
};

// Chunks of k symbols in table order; the last group keeps the remainder
// (1..k-1 symbols) when the alphabet does not divide evenly. Throws
// BadGroupSize for k < 2.
std::vector<SymbolGroup> form_groups(const FrequencyTable& table, int k);

GroupedPlan make_grouped_plan(const FrequencyTable& table, int k);

// Member code under the rank-prefix rule: rank 0 keeps the group code,
// rank 1 prepends a 0, rank 2 prepends a 1.
BitString literal_member_code(const BitString& group_code, std::size_t rank);

// Member code for the corrected mode: group code followed by the group's
// rank suffix.
BitString prefix_free_member_code(const BitString& group_code, std::size_t group_size,
                                  std::size_t rank);

// Intra-group suffix for a group of `size` members: the complete code with
// lengths as equal as possible (floor/ceil of log2 size), shorter suffixes
// to the front ranks. Size 1 yields the empty suffix, sizes 2 and 3 yield
// {0,1} and {0,10,11}.
BitString rank_suffix(std::size_t size, std::size_t rank);

// The rank-prefix expansion exactly as published. Only defined for group
// sizes 2 and 3 (UnsupportedLiteralK beyond); the result is generally not
// prefix-free or even collision-free -- the analyzer reports the damage.
Codebook expand_literal(const GroupedPlan& plan);

// Corrected expansion; prefix-free group codes times complete per-group
// suffixes keep the whole book prefix-free.
Codebook expand_prefix_free(const GroupedPlan& plan);

Codebook grouped_codebook(const FrequencyTable& table, int k, CodebookMode mode);

}  // namespace ghc
