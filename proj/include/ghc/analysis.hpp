#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ghc/huffman.hpp"

namespace ghc {

// Exact dyadic rational num / 2^exp, kept normalized (num odd or exp 0).
// Code lengths can reach a few hundred bits, hence the bignum numerator.
struct Dyadic {
    boost::multiprecision::cpp_int num = 0;
    unsigned exp = 0;

    void add_neg_pow2(unsigned len);  // += 2^-len
    bool is_one() const { return exp == 0 && num == 1; }
    bool at_most_one() const;
    std::string str() const;  // "1", "1/2", "3/4"

    bool operator==(const Dyadic& other) const { return exp == other.exp && num == other.num; }
};

Dyadic kraft_sum(std::span<const BitString> codes);
Dyadic kraft_sum(const Codebook& book);

struct ValidityReport {
    Dyadic kraft;
    std::vector<std::pair<Symbol, Symbol>> duplicate_pairs;  // identical codes
    std::vector<std::pair<Symbol, Symbol>> prefix_pairs;     // (shorter, longer)
    bool decodable = false;  // true iff both pair lists are empty
};

// Complete pairwise scan for duplicates and strict-prefix pairs; no early
// exit, so the violation multiset is independent of code order.
ValidityReport prefix_violations(const Codebook& book);

// Bit size of the serialized code-book section of the container header,
// computed from the layout arithmetic (the codec must serialize to exactly
// this many bits).
std::uint64_t header_overhead(const Codebook& book);

}  // namespace ghc
