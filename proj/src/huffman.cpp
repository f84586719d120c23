#include "ghc/huffman.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <utility>

#include "ghc/error.hpp"

namespace ghc {

const char* mode_name(CodebookMode mode) {
    switch (mode) {
        case CodebookMode::Classic: return "classic";
        case CodebookMode::GroupedLiteral: return "grouped-literal";
        case CodebookMode::GroupedPrefixFree: return "grouped-prefix-free";
    }
    return "?";
}

std::vector<int> build_code_lengths(std::span<const WeightedLeaf> leaves) {
    if (leaves.empty()) raise(Errc::NoLeaves, "no weighted leaves to merge");
    const std::size_t n = leaves.size();
    if (n == 1) return {1};

    struct Node {
        int left = -1;
        int right = -1;
    };
    std::vector<Node> nodes(n);
    nodes.reserve(2 * n - 1);

    // Min-heap on (weight, creation id); the id ordering implements the
    // earliest-created tie-break, leaves counting as created before any
    // internal node.
    using Item = std::pair<std::uint64_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (std::size_t i = 0; i < n; ++i) heap.push({leaves[i].weight, i});

    while (heap.size() > 1) {
        const Item a = heap.top();
        heap.pop();
        const Item b = heap.top();
        heap.pop();
        nodes.push_back({static_cast<int>(a.second), static_cast<int>(b.second)});
        heap.push({a.first + b.first, nodes.size() - 1});
    }

    std::vector<int> lengths(n, 0);
    std::vector<std::pair<int, int>> stack{{static_cast<int>(nodes.size() - 1), 0}};
    while (!stack.empty()) {
        const auto [id, depth] = stack.back();
        stack.pop_back();
        if (id < static_cast<int>(n)) {
            lengths[id] = depth;
            continue;
        }
        stack.push_back({nodes[id].left, depth + 1});
        stack.push_back({nodes[id].right, depth + 1});
    }
    return lengths;
}

std::vector<BitString> assign_canonical_codes(std::span<const int> lengths) {
    std::vector<std::size_t> order(lengths.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return lengths[a] < lengths[b]; });

    std::vector<BitString> codes(lengths.size());
    BitString value;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int len = lengths[order[i]];
        if (len < 1) raise(Errc::KraftViolation, "a code must be at least one bit long");
        if (i == 0) {
            value = BitString::zeros(static_cast<std::size_t>(len));
        } else {
            if (!value.increment())
                raise(Errc::KraftViolation, "code lengths overcommit the code space");
            value.extend(static_cast<std::size_t>(len) - value.size());
        }
        codes[order[i]] = value;
    }
    return codes;
}

const BitString* Codebook::find(Symbol s) const {
    for (const CodeEntry& e : codes)
        if (e.symbol == s) return &e.code;
    return nullptr;
}

Codebook make_classic_codebook(const FrequencyTable& table) {
    std::vector<WeightedLeaf> leaves;
    leaves.reserve(table.size());
    for (std::size_t i = 0; i < table.entries.size(); ++i)
        leaves.push_back({i, table.entries[i].count});

    const std::vector<int> lengths = build_code_lengths(leaves);
    std::vector<BitString> values = assign_canonical_codes(lengths);

    Codebook book;
    book.mode = CodebookMode::Classic;
    book.k = 1;
    book.codes.reserve(table.size());
    for (std::size_t i = 0; i < table.entries.size(); ++i)
        book.codes.push_back({table.entries[i].symbol, std::move(values[i])});
    return book;
}

std::uint64_t weighted_code_cost(const Codebook& book, const FrequencyTable& table) {
    std::uint64_t bits = 0;
    for (const FrequencyEntry& e : table.entries) {
        const BitString* code = book.find(e.symbol);
        if (code == nullptr)
            raise(Errc::MissingSymbol, "no code for byte " + std::to_string(int(e.symbol)));
        bits += e.count * code->size();
    }
    return bits;
}

}  // namespace ghc
