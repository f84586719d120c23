#include "ghc/grouping.hpp"

#include <stdexcept>
#include <utility>

#include "ghc/error.hpp"

namespace ghc {

std::vector<SymbolGroup> form_groups(const FrequencyTable& table, int k) {
    if (k < 2) raise(Errc::BadGroupSize, "group size must be at least 2");

    std::vector<SymbolGroup> groups;
    SymbolGroup current;
    for (const FrequencyEntry& e : table.entries) {
        current.members.push_back({e.symbol, e.count});
        current.aggregate += e.count;
        if (current.members.size() == static_cast<std::size_t>(k)) {
            groups.push_back(std::move(current));
            current = {};
        }
    }
    if (!current.members.empty()) groups.push_back(std::move(current));
    return groups;
}

GroupedPlan make_grouped_plan(const FrequencyTable& table, int k) {
    GroupedPlan plan;
    plan.k = k;
    plan.groups = form_groups(table, k);

    std::vector<WeightedLeaf> leaves;
    leaves.reserve(plan.groups.size());
    for (std::size_t i = 0; i < plan.groups.size(); ++i)
        leaves.push_back({i, plan.groups[i].aggregate});
    plan.group_codes = assign_canonical_codes(build_code_lengths(leaves));
    return plan;
}

BitString literal_member_code(const BitString& group_code, std::size_t rank) {
    BitString code = group_code;
    if (rank == 1) code.prepend(0);
    if (rank == 2) code.prepend(1);
    return code;
}

BitString rank_suffix(std::size_t size, std::size_t rank) {
    if (size <= 1) return {};
    int width = 0;
    while ((std::size_t{1} << width) < size) ++width;  // ceil(log2 size)
    const std::size_t shorter = (std::size_t{1} << width) - size;

    std::vector<int> lengths(size, width);
    for (std::size_t i = 0; i < shorter; ++i) lengths[i] = width - 1;
    return assign_canonical_codes(lengths)[rank];
}

BitString prefix_free_member_code(const BitString& group_code, std::size_t group_size,
                                  std::size_t rank) {
    BitString code = group_code;
    code.append(rank_suffix(group_size, rank));
    return code;
}

namespace {

Codebook expansion_base(const GroupedPlan& plan, CodebookMode mode) {
    Codebook book;
    book.mode = mode;
    book.k = plan.k;
    book.groups.reserve(plan.groups.size());
    for (std::size_t g = 0; g < plan.groups.size(); ++g) {
        GroupRecord record;
        record.members.reserve(plan.groups[g].members.size());
        for (const GroupMember& m : plan.groups[g].members) record.members.push_back(m.symbol);
        record.code_length = static_cast<int>(plan.group_codes[g].size());
        book.groups.push_back(std::move(record));
    }
    return book;
}

}  // namespace

Codebook expand_literal(const GroupedPlan& plan) {
    if (plan.k > 3)
        raise(Errc::UnsupportedLiteralK,
              "the rank-prefix rule is only defined for group sizes 2 and 3");

    Codebook book = expansion_base(plan, CodebookMode::GroupedLiteral);
    for (std::size_t g = 0; g < plan.groups.size(); ++g) {
        const SymbolGroup& group = plan.groups[g];
        for (std::size_t rank = 0; rank < group.members.size(); ++rank)
            book.codes.push_back(
                {group.members[rank].symbol, literal_member_code(plan.group_codes[g], rank)});
    }
    return book;
}

Codebook expand_prefix_free(const GroupedPlan& plan) {
    Codebook book = expansion_base(plan, CodebookMode::GroupedPrefixFree);
    for (std::size_t g = 0; g < plan.groups.size(); ++g) {
        const SymbolGroup& group = plan.groups[g];
        for (std::size_t rank = 0; rank < group.members.size(); ++rank)
            book.codes.push_back({group.members[rank].symbol,
                                  prefix_free_member_code(plan.group_codes[g],
                                                          group.members.size(), rank)});
    }
    return book;
}

Codebook grouped_codebook(const FrequencyTable& table, int k, CodebookMode mode) {
    const GroupedPlan plan = make_grouped_plan(table, k);
    if (mode == CodebookMode::GroupedLiteral) return expand_literal(plan);
    if (mode == CodebookMode::GroupedPrefixFree) return expand_prefix_free(plan);
    throw std::logic_error("grouped_codebook needs a grouped mode");
}

}  // namespace ghc
