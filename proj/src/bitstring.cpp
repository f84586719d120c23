#include "ghc/bitstring.hpp"

#include <algorithm>

namespace ghc {

BitString BitString::zeros(std::size_t n) {
    BitString b;
    b.bits_.assign(n, 0);
    return b;
}

BitString BitString::parse(std::string_view s) {
    BitString b;
    b.bits_.reserve(s.size());
    for (char c : s) b.bits_.push_back(c == '1' ? 1 : 0);
    return b;
}

void BitString::append(const BitString& tail) {
    bits_.insert(bits_.end(), tail.bits_.begin(), tail.bits_.end());
}

bool BitString::increment() {
    for (std::size_t i = bits_.size(); i-- > 0;) {
        if (bits_[i] == 0) {
            bits_[i] = 1;
            return true;
        }
        bits_[i] = 0;
    }
    return false;
}

void BitString::extend(std::size_t n) { bits_.insert(bits_.end(), n, 0); }

bool BitString::is_strict_prefix_of(const BitString& other) const {
    if (bits_.size() >= other.bits_.size()) return false;
    return std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

std::string BitString::str() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

}  // namespace ghc
