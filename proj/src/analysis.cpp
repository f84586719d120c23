#include "ghc/analysis.hpp"

namespace ghc {

using boost::multiprecision::cpp_int;

void Dyadic::add_neg_pow2(unsigned len) {
    if (len > exp) {
        num <<= (len - exp);
        exp = len;
    }
    num += cpp_int(1) << (exp - len);
    while (exp > 0 && (num & 1) == 0) {
        num >>= 1;
        --exp;
    }
}

bool Dyadic::at_most_one() const { return num <= (cpp_int(1) << exp); }

std::string Dyadic::str() const {
    if (exp == 0) return num.str();
    return num.str() + "/" + (cpp_int(1) << exp).str();
}

Dyadic kraft_sum(std::span<const BitString> codes) {
    Dyadic sum;
    for (const BitString& code : codes) sum.add_neg_pow2(static_cast<unsigned>(code.size()));
    return sum;
}

Dyadic kraft_sum(const Codebook& book) {
    Dyadic sum;
    for (const CodeEntry& e : book.codes) sum.add_neg_pow2(static_cast<unsigned>(e.code.size()));
    return sum;
}

ValidityReport prefix_violations(const Codebook& book) {
    ValidityReport report;
    report.kraft = kraft_sum(book);

    const auto& cs = book.codes;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            if (cs[i].code == cs[j].code) {
                report.duplicate_pairs.emplace_back(cs[i].symbol, cs[j].symbol);
            } else if (cs[i].code.is_strict_prefix_of(cs[j].code)) {
                report.prefix_pairs.emplace_back(cs[i].symbol, cs[j].symbol);
            } else if (cs[j].code.is_strict_prefix_of(cs[i].code)) {
                report.prefix_pairs.emplace_back(cs[j].symbol, cs[i].symbol);
            }
        }
    }
    report.decodable = report.duplicate_pairs.empty() && report.prefix_pairs.empty();
    return report;
}

std::uint64_t header_overhead(const Codebook& book) {
    std::uint64_t bits = 8 + 8 + 16;  // mode + k + symbol_count
    if (book.mode == CodebookMode::Classic) {
        bits += static_cast<std::uint64_t>(book.codes.size()) * (8 + 8);
    } else {
        bits += 16;  // group_count
        for (const GroupRecord& g : book.groups)
            bits += 8 + 8 * static_cast<std::uint64_t>(g.members.size()) + 8;
    }
    return bits;
}

}  // namespace ghc
