#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ghc {

// Sequence of bits in MSB-first order. Codewords are at most a few hundred
// bits, so bits are kept one per element for clarity; packing into bytes is
// the codec's job.
class BitString {
public:
    BitString() = default;

    static BitString zeros(std::size_t n);
    static BitString parse(std::string_view s);  // "0110"

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int bit(std::size_t i) const { return bits_[i]; }

    void push_back(int b) { bits_.push_back(static_cast<std::uint8_t>(b & 1)); }
    void prepend(int b) { bits_.insert(bits_.begin(), static_cast<std::uint8_t>(b & 1)); }
    void append(const BitString& tail);

    // Binary +1 at fixed width. Returns false when the carry falls off the
    // most significant end (the value was all ones).
    bool increment();

    // Append n zero bits, i.e. shift the value left by n.
    void extend(std::size_t n);

    bool is_strict_prefix_of(const BitString& other) const;

    std::string str() const;

    auto operator<=>(const BitString&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

}  // namespace ghc
