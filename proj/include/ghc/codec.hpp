#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ghc/huffman.hpp"

namespace ghc {

// Container file layout, all multi-byte integers big-endian:
//
//   magic    4 bytes, "GHC1"
//   version  1 byte, 0x01
//   code-book section (what serialize_header emits):
//     mode          1 byte: 0 classic, 1 grouped-literal, 2 grouped-prefix-free
//     k             1 byte (1 for classic)
//     symbol_count  u16
//     mode 0:   symbol_count records of { symbol: 1 byte, code_length: 1 byte }
//     mode 1/2: group_count u16, then per group
//               { member_count m: 1 byte, m member symbols in rank order,
//                 group_code_length: 1 byte }
//   payload_bit_count  u64
//   payload  packed bits, MSB-first within each byte, zero-padded
//
// Code values are never stored: they are rebuilt canonically from the
// lengths (record order breaking ties) and, for grouped modes, member codes
// come from the mode's expansion rule.

struct Container {
    Codebook codebook;
    std::uint64_t payload_bit_count = 0;
    std::vector<std::uint8_t> payload;
};

// Concatenates the per-symbol codes in input order, MSB-first. Encoding is
// allowed for grouped-literal books; their ambiguity is a decode problem.
// Throws MissingSymbol when an input byte has no code.
Container encode_payload(std::span<const std::uint8_t> input, const Codebook& book);

// Tree-walk decoding of exactly payload_bit_count bits. Throws
// AmbiguousCodebook when the embedded book is not uniquely decodable,
// TruncatedPayload when the bits end inside a code word, InvalidPayload on
// a bit path no code word covers, and TrailingGarbage on nonzero padding.
std::vector<std::uint8_t> decode_payload(const Container& container);

// Code-book section only; 8 * size in bytes equals header_overhead.
std::vector<std::uint8_t> serialize_header(const Codebook& book);
Codebook deserialize_header(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> write_container(const Container& container);
Container read_container(std::span<const std::uint8_t> bytes);

}  // namespace ghc
