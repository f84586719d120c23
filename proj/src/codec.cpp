#include "ghc/codec.hpp"

#include <array>
#include <limits>
#include <stdexcept>

#include "ghc/analysis.hpp"
#include "ghc/error.hpp"
#include "ghc/grouping.hpp"

namespace ghc {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic{0x47, 0x48, 0x43, 0x31};  // "GHC1"
constexpr std::uint8_t kVersion = 1;

class ByteWriter {
public:
    void u8(std::uint8_t v) { out_.push_back(v); }

    void u16(std::uint16_t v) {
        u8(static_cast<std::uint8_t>(v >> 8));
        u8(static_cast<std::uint8_t>(v & 0xff));
    }

    void u64(std::uint64_t v) {
        for (int shift = 56; shift >= 0; shift -= 8)
            u8(static_cast<std::uint8_t>((v >> shift) & 0xff));
    }

    void bytes(std::span<const std::uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }

    std::vector<std::uint8_t> take() { return std::move(out_); }

private:
    std::vector<std::uint8_t> out_;
};

class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t u8() {
        need(1);
        return data_[pos_++];
    }

    std::uint16_t u16() {
        const std::uint16_t hi = u8();
        return static_cast<std::uint16_t>((hi << 8) | u8());
    }

    std::uint64_t u64() {
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | u8();
        return v;
    }

    std::span<const std::uint8_t> bytes(std::size_t n) {
        need(n);
        auto s = data_.subspan(pos_, n);
        pos_ += n;
        return s;
    }

    std::size_t remaining() const { return data_.size() - pos_; }

private:
    void need(std::size_t n) const {
        if (data_.size() - pos_ < n) raise(Errc::MalformedHeader, "container truncated");
    }

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

// MSB-first packing into bytes.
class BitWriter {
public:
    void put(const BitString& code) {
        for (std::size_t i = 0; i < code.size(); ++i) put_bit(code.bit(i));
    }

    void put_bit(int b) {
        acc_ = static_cast<std::uint8_t>((acc_ << 1) | (b & 1));
        if (++filled_ == 8) {
            out_.push_back(acc_);
            acc_ = 0;
            filled_ = 0;
        }
    }

    std::vector<std::uint8_t> finish() {
        if (filled_ > 0) out_.push_back(static_cast<std::uint8_t>(acc_ << (8 - filled_)));
        return std::move(out_);
    }

private:
    std::vector<std::uint8_t> out_;
    std::uint8_t acc_ = 0;
    int filled_ = 0;
};

int payload_bit(std::span<const std::uint8_t> payload, std::uint64_t i) {
    return (payload[i >> 3] >> (7 - (i & 7))) & 1;
}

std::vector<BitString> canonical_or_malformed(std::span<const int> lengths) {
    try {
        return assign_canonical_codes(lengths);
    } catch (const Error& e) {
        raise(Errc::MalformedHeader, std::string("stored code lengths are invalid (") +
                                         e.what() + ")");
    }
}

Codebook parse_codebook(ByteReader& reader) {
    const std::uint8_t mode_byte = reader.u8();
    if (mode_byte > 2) raise(Errc::MalformedHeader, "unknown mode byte");
    const auto mode = static_cast<CodebookMode>(mode_byte);
    const int k = reader.u8();
    const std::size_t symbol_count = reader.u16();
    if (symbol_count == 0) raise(Errc::MalformedHeader, "empty code book");

    Codebook book;
    book.mode = mode;
    book.k = k;

    std::array<bool, 256> seen{};
    auto claim_symbol = [&seen](Symbol s) {
        if (seen[s]) raise(Errc::MalformedHeader, "symbol listed twice");
        seen[s] = true;
    };

    if (mode == CodebookMode::Classic) {
        if (k != 1) raise(Errc::MalformedHeader, "classic mode requires k = 1");
        std::vector<Symbol> symbols(symbol_count);
        std::vector<int> lengths(symbol_count);
        for (std::size_t i = 0; i < symbol_count; ++i) {
            symbols[i] = reader.u8();
            claim_symbol(symbols[i]);
            lengths[i] = reader.u8();
        }
        std::vector<BitString> codes = canonical_or_malformed(lengths);
        book.codes.reserve(symbol_count);
        for (std::size_t i = 0; i < symbol_count; ++i)
            book.codes.push_back({symbols[i], std::move(codes[i])});
        return book;
    }

    if (k < 2) raise(Errc::MalformedHeader, "grouped modes require k >= 2");
    if (mode == CodebookMode::GroupedLiteral && k > 3)
        raise(Errc::MalformedHeader, "grouped-literal is only defined for k = 2 or 3");

    const std::size_t group_count = reader.u16();
    if (group_count == 0) raise(Errc::MalformedHeader, "no groups");

    std::vector<int> group_lengths(group_count);
    std::size_t members_total = 0;
    book.groups.reserve(group_count);
    for (std::size_t g = 0; g < group_count; ++g) {
        GroupRecord record;
        const std::size_t member_count = reader.u8();
        if (member_count == 0) raise(Errc::MalformedHeader, "empty group");
        if (member_count > static_cast<std::size_t>(k))
            raise(Errc::MalformedHeader, "group larger than k");
        record.members.resize(member_count);
        for (std::size_t m = 0; m < member_count; ++m) {
            record.members[m] = reader.u8();
            claim_symbol(record.members[m]);
        }
        record.code_length = reader.u8();
        group_lengths[g] = record.code_length;
        members_total += member_count;
        book.groups.push_back(std::move(record));
    }
    if (members_total != symbol_count)
        raise(Errc::MalformedHeader, "group members disagree with symbol count");

    const std::vector<BitString> group_codes = canonical_or_malformed(group_lengths);
    book.codes.reserve(symbol_count);
    for (std::size_t g = 0; g < group_count; ++g) {
        const GroupRecord& record = book.groups[g];
        for (std::size_t rank = 0; rank < record.members.size(); ++rank) {
            BitString code = mode == CodebookMode::GroupedLiteral
                                 ? literal_member_code(group_codes[g], rank)
                                 : prefix_free_member_code(group_codes[g],
                                                           record.members.size(), rank);
            book.codes.push_back({record.members[rank], std::move(code)});
        }
    }
    return book;
}

}  // namespace

Container encode_payload(std::span<const std::uint8_t> input, const Codebook& book) {
    std::array<const BitString*, 256> lookup{};
    for (const CodeEntry& e : book.codes) lookup[e.symbol] = &e.code;

    BitWriter writer;
    std::uint64_t bits = 0;
    for (const std::uint8_t b : input) {
        const BitString* code = lookup[b];
        if (code == nullptr)
            raise(Errc::MissingSymbol, "input byte " + std::to_string(int(b)) + " has no code");
        writer.put(*code);
        bits += code->size();
    }

    Container container;
    container.codebook = book;
    container.payload_bit_count = bits;
    container.payload = writer.finish();
    return container;
}

std::vector<std::uint8_t> decode_payload(const Container& container) {
    const ValidityReport validity = prefix_violations(container.codebook);
    if (!validity.decodable)
        raise(Errc::AmbiguousCodebook,
              "embedded code book is not uniquely decodable (" +
                  std::to_string(validity.duplicate_pairs.size()) + " duplicate, " +
                  std::to_string(validity.prefix_pairs.size()) + " prefix pair(s))");

    if (container.payload.size() != (container.payload_bit_count + 7) / 8)
        raise(Errc::MalformedHeader, "payload byte length disagrees with the bit count");

    struct Node {
        int child[2] = {-1, -1};
        int symbol = -1;
    };
    std::vector<Node> tree(1);
    for (const CodeEntry& e : container.codebook.codes) {
        int at = 0;
        for (std::size_t i = 0; i < e.code.size(); ++i) {
            const int b = e.code.bit(i);
            if (tree[at].child[b] == -1) {
                tree[at].child[b] = static_cast<int>(tree.size());
                tree.emplace_back();
            }
            at = tree[at].child[b];
        }
        tree[at].symbol = e.symbol;
    }

    std::vector<std::uint8_t> output;
    std::uint64_t pos = 0;
    while (pos < container.payload_bit_count) {
        int at = 0;
        while (tree[at].symbol == -1) {
            if (pos == container.payload_bit_count)
                raise(Errc::TruncatedPayload, "bit stream ended inside a code word");
            at = tree[at].child[payload_bit(container.payload, pos++)];
            if (at == -1) raise(Errc::InvalidPayload, "bit pattern matches no code word");
        }
        output.push_back(static_cast<std::uint8_t>(tree[at].symbol));
    }

    for (std::uint64_t i = container.payload_bit_count; i < container.payload.size() * 8; ++i)
        if (payload_bit(container.payload, i) != 0)
            raise(Errc::TrailingGarbage, "nonzero padding after the payload");

    return output;
}

std::vector<std::uint8_t> serialize_header(const Codebook& book) {
    if (book.codes.empty()) raise(Errc::MalformedHeader, "refusing to serialize an empty book");
    if (book.codes.size() > 0xffff) raise(Errc::MalformedHeader, "too many symbols");
    if (book.k < 1 || book.k > 0xff) raise(Errc::MalformedHeader, "k out of range");

    ByteWriter writer;
    writer.u8(static_cast<std::uint8_t>(book.mode));
    writer.u8(static_cast<std::uint8_t>(book.k));
    writer.u16(static_cast<std::uint16_t>(book.codes.size()));

    if (book.mode == CodebookMode::Classic) {
        for (const CodeEntry& e : book.codes) {
            if (e.code.size() == 0 || e.code.size() > 0xff)
                raise(Errc::MalformedHeader, "code length out of range");
            writer.u8(e.symbol);
            writer.u8(static_cast<std::uint8_t>(e.code.size()));
        }
    } else {
        writer.u16(static_cast<std::uint16_t>(book.groups.size()));
        for (const GroupRecord& g : book.groups) {
            if (g.members.empty() || g.members.size() > 0xff)
                raise(Errc::MalformedHeader, "group size out of range");
            if (g.code_length < 1 || g.code_length > 0xff)
                raise(Errc::MalformedHeader, "group code length out of range");
            writer.u8(static_cast<std::uint8_t>(g.members.size()));
            for (const Symbol s : g.members) writer.u8(s);
            writer.u8(static_cast<std::uint8_t>(g.code_length));
        }
    }
    return writer.take();
}

Codebook deserialize_header(std::span<const std::uint8_t> bytes) {
    ByteReader reader(bytes);
    Codebook book = parse_codebook(reader);
    if (reader.remaining() != 0) raise(Errc::MalformedHeader, "trailing bytes after code book");
    return book;
}

std::vector<std::uint8_t> write_container(const Container& container) {
    ByteWriter writer;
    writer.bytes(kMagic);
    writer.u8(kVersion);
    const std::vector<std::uint8_t> header = serialize_header(container.codebook);
    writer.bytes(header);
    writer.u64(container.payload_bit_count);
    writer.bytes(container.payload);
    return writer.take();
}

Container read_container(std::span<const std::uint8_t> bytes) {
    ByteReader reader(bytes);
    for (const std::uint8_t expected : kMagic)
        if (reader.u8() != expected) raise(Errc::BadMagic, "not a GHC1 container");
    const std::uint8_t version = reader.u8();
    if (version != kVersion)
        raise(Errc::BadVersion, "unsupported container version " + std::to_string(int(version)));

    Container container;
    container.codebook = parse_codebook(reader);
    container.payload_bit_count = reader.u64();
    if (container.payload_bit_count > std::numeric_limits<std::uint64_t>::max() - 7)
        raise(Errc::MalformedHeader, "payload bit count out of range");
    const std::uint64_t payload_bytes = (container.payload_bit_count + 7) / 8;
    const auto payload = reader.bytes(payload_bytes);
    container.payload.assign(payload.begin(), payload.end());
    if (reader.remaining() != 0) raise(Errc::TrailingGarbage, "bytes after the payload");
    return container;
}

}  // namespace ghc
