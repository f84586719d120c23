#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ghc/analysis.hpp"

namespace ghc {

// Bits saved against the fixed 8-bit baseline, as an exact fraction.
// Negative when a scheme loses to the baseline.
struct Ratio {
    std::int64_t num = 0;   // baseline_bits - payload_bits
    std::uint64_t den = 1;  // baseline_bits

    std::string percent() const;

    bool operator==(const Ratio&) const = default;
};

// num/den as a percentage, two decimals, round half away from zero.
std::string percent_string(std::int64_t num, std::uint64_t den);

// A bit count published for the reference example, with the ratio exactly
// as printed there (which may disagree with its own bit count).
struct PublishedClaim {
    std::uint64_t bits = 0;
    std::string printed_ratio;  // empty when none was given
    std::string source;
};

struct ReportRow {
    std::string scheme;
    std::optional<CodebookMode> mode;  // nullopt for the baseline row
    int k = 1;
    std::uint64_t payload_bits = 0;
    std::uint64_t header_bits = 0;
    Ratio ratio;
    std::optional<ValidityReport> validity;
    std::vector<PublishedClaim> claims;
};

struct ComparisonReport {
    std::uint64_t input_bytes = 0;
    std::uint64_t baseline_bits = 0;  // 8 bits per input byte
    std::vector<ReportRow> rows;
};

// The worked-example input whose published figures the report attaches for
// side-by-side comparison.
extern const std::string_view kReferenceInput;

// One row per scheme: 8-bit baseline, classic, grouped-literal k=2/3 and
// grouped-prefix-free k=2/3. Throws EmptyInput.
ComparisonReport compression_report(std::span<const std::uint8_t> input);

std::string render_text(const ComparisonReport& report);

// Flat key=value rendering carrying every field of the text report.
std::string render_kv(const ComparisonReport& report, const std::string& prefix = "");

std::string symbol_display(Symbol s);  // 'E' for printable bytes, 0x0A otherwise

}  // namespace ghc
