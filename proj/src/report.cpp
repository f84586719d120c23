#include "ghc/report.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "ghc/error.hpp"
#include "ghc/grouping.hpp"

namespace ghc {

const std::string_view kReferenceInput = "IEEECOMPUTATIONALINTELLIGENCE";

std::string percent_string(std::int64_t num, std::uint64_t den) {
    if (den == 0) throw std::logic_error("percent of a zero denominator");
    const bool negative = num < 0;
    const unsigned __int128 n =
        negative ? static_cast<unsigned __int128>(-(num + 1)) + 1 : static_cast<unsigned __int128>(num);
    // round half away from zero at two decimals
    const unsigned __int128 scaled = (n * 10000 * 2 + den) / (2 * static_cast<unsigned __int128>(den));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%llu.%02llu%%", negative ? "-" : "",
                  static_cast<unsigned long long>(scaled / 100),
                  static_cast<unsigned long long>(scaled % 100));
    return buf;
}

std::string Ratio::percent() const { return percent_string(num, den); }

std::string symbol_display(Symbol s) {
    if (std::isprint(s) != 0) return std::string("'") + static_cast<char>(s) + "'";
    char buf[8];
    std::snprintf(buf, sizeof buf, "0x%02X", s);
    return buf;
}

namespace {

std::string scheme_slug(CodebookMode mode, int k) {
    if (mode == CodebookMode::Classic) return "classic";
    return std::string(mode_name(mode)) + "-k" + std::to_string(k);
}

std::vector<PublishedClaim> published_claims(std::optional<CodebookMode> mode, int k) {
    if (!mode.has_value()) return {{232, "0%", "results table"}};
    if (*mode == CodebookMode::Classic)
        return {{100, "", "worked example"}, {99, "57.33%", "results table"}};
    if (*mode == CodebookMode::GroupedLiteral && k == 2)
        return {{82, "63.37%", "worked example, results table"}};
    if (*mode == CodebookMode::GroupedLiteral && k == 3)
        return {{77, "76.30%", "worked example, results table"}};
    return {};
}

void verify_rows(const ComparisonReport& report) {
    for (const ReportRow& row : report.rows) {
        const std::int64_t saved = static_cast<std::int64_t>(report.baseline_bits) -
                                   static_cast<std::int64_t>(row.payload_bits);
        if (row.ratio.num != saved || row.ratio.den != report.baseline_bits)
            throw std::logic_error("report row ratio does not recompute from its own bits");
    }
}

}  // namespace

ComparisonReport compression_report(std::span<const std::uint8_t> input) {
    const FrequencyTable table = build_frequency_table(input);

    ComparisonReport report;
    report.input_bytes = table.total;
    report.baseline_bits = table.total * 8;

    const bool reference =
        input.size() == kReferenceInput.size() &&
        std::equal(input.begin(), input.end(), kReferenceInput.begin(),
                   [](std::uint8_t a, char b) { return a == static_cast<std::uint8_t>(b); });

    ReportRow baseline;
    baseline.scheme = "baseline-8bit";
    baseline.payload_bits = report.baseline_bits;
    baseline.header_bits = 0;
    baseline.ratio = {0, report.baseline_bits};
    if (reference) baseline.claims = published_claims(std::nullopt, 0);
    report.rows.push_back(std::move(baseline));

    struct Scheme {
        CodebookMode mode;
        int k;
    };
    const Scheme schemes[] = {
        {CodebookMode::Classic, 1},
        {CodebookMode::GroupedLiteral, 2},
        {CodebookMode::GroupedLiteral, 3},
        {CodebookMode::GroupedPrefixFree, 2},
        {CodebookMode::GroupedPrefixFree, 3},
    };
    for (const Scheme& s : schemes) {
        const Codebook book = s.mode == CodebookMode::Classic
                                  ? make_classic_codebook(table)
                                  : grouped_codebook(table, s.k, s.mode);
        ReportRow row;
        row.scheme = scheme_slug(s.mode, s.k);
        row.mode = s.mode;
        row.k = s.k;
        row.payload_bits = weighted_code_cost(book, table);
        row.header_bits = header_overhead(book);
        row.ratio = {static_cast<std::int64_t>(report.baseline_bits) -
                         static_cast<std::int64_t>(row.payload_bits),
                     report.baseline_bits};
        row.validity = prefix_violations(book);
        if (reference) row.claims = published_claims(s.mode, s.k);
        report.rows.push_back(std::move(row));
    }

    verify_rows(report);
    return report;
}

std::string render_text(const ComparisonReport& report) {
    std::ostringstream out;
    out << "input: " << report.input_bytes << " bytes, baseline " << report.baseline_bits
        << " bits (8 per byte)\n\n";

    char line[160];
    std::snprintf(line, sizeof line, "%-24s %10s %8s %9s %8s %10s\n", "scheme", "payload",
                  "header", "ratio", "kraft", "decodable");
    out << line;
    for (const ReportRow& row : report.rows) {
        const std::string kraft = row.validity ? row.validity->kraft.str() : "-";
        const std::string decodable =
            row.validity ? (row.validity->decodable ? "yes" : "no") : "-";
        std::snprintf(line, sizeof line, "%-24s %10llu %8llu %9s %8s %10s\n", row.scheme.c_str(),
                      static_cast<unsigned long long>(row.payload_bits),
                      static_cast<unsigned long long>(row.header_bits), row.ratio.percent().c_str(),
                      kraft.c_str(), decodable.c_str());
        out << line;
    }

    bool any_violation = false;
    for (const ReportRow& row : report.rows)
        if (row.validity && !row.validity->decodable) any_violation = true;
    if (any_violation) {
        out << "\nvalidity problems:\n";
        for (const ReportRow& row : report.rows) {
            if (!row.validity || row.validity->decodable) continue;
            const ValidityReport& v = *row.validity;
            out << "  " << row.scheme << ": " << v.duplicate_pairs.size()
                << " duplicate pair(s), " << v.prefix_pairs.size() << " prefix pair(s)";
            std::vector<std::string> samples;
            for (const auto& [a, b] : v.duplicate_pairs)
                samples.push_back(symbol_display(a) + "=" + symbol_display(b));
            for (const auto& [a, b] : v.prefix_pairs)
                samples.push_back(symbol_display(a) + "<" + symbol_display(b));
            out << " [";
            for (std::size_t s = 0; s < samples.size() && s < 4; ++s)
                out << (s ? ", " : "") << samples[s];
            if (samples.size() > 4) out << ", ...";
            out << "]\n";
        }
    }

    bool any_claim = false;
    for (const ReportRow& row : report.rows)
        if (!row.claims.empty()) any_claim = true;
    if (any_claim) {
        out << "\npublished figures for this input (ratio as printed / recomputed as "
               "(baseline-bits)/baseline):\n";
        for (const ReportRow& row : report.rows) {
            if (row.claims.empty()) continue;
            out << "  " << row.scheme << ": measured " << row.payload_bits << " bits";
            for (const PublishedClaim& claim : row.claims) {
                out << "; published " << claim.bits << " bits";
                if (!claim.printed_ratio.empty())
                    out << ", " << claim.printed_ratio << " / "
                        << percent_string(static_cast<std::int64_t>(report.baseline_bits) -
                                              static_cast<std::int64_t>(claim.bits),
                                          report.baseline_bits);
                out << " [" << claim.source << "]";
            }
            out << "\n";
        }
    }
    return out.str();
}

std::string render_kv(const ComparisonReport& report, const std::string& prefix) {
    std::ostringstream out;
    out << prefix << "input_bytes=" << report.input_bytes << "\n";
    out << prefix << "baseline_bits=" << report.baseline_bits << "\n";
    out << prefix << "rows=" << report.rows.size() << "\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const ReportRow& row = report.rows[i];
        const std::string key = prefix + "row." + std::to_string(i) + ".";
        out << key << "scheme=" << row.scheme << "\n";
        if (row.mode) {
            out << key << "mode=" << mode_name(*row.mode) << "\n";
            out << key << "k=" << row.k << "\n";
        }
        out << key << "payload_bits=" << row.payload_bits << "\n";
        out << key << "header_bits=" << row.header_bits << "\n";
        out << key << "ratio=" << row.ratio.num << "/" << row.ratio.den << "\n";
        out << key << "ratio_percent=" << row.ratio.percent() << "\n";
        if (row.validity) {
            const ValidityReport& v = *row.validity;
            out << key << "kraft=" << v.kraft.str() << "\n";
            out << key << "decodable=" << (v.decodable ? 1 : 0) << "\n";
            out << key << "duplicate_pairs=" << v.duplicate_pairs.size() << "\n";
            for (std::size_t p = 0; p < v.duplicate_pairs.size(); ++p)
                out << key << "duplicate_pair." << p << "=" << int(v.duplicate_pairs[p].first)
                    << "," << int(v.duplicate_pairs[p].second) << "\n";
            out << key << "prefix_pairs=" << v.prefix_pairs.size() << "\n";
            for (std::size_t p = 0; p < v.prefix_pairs.size(); ++p)
                out << key << "prefix_pair." << p << "=" << int(v.prefix_pairs[p].first) << ","
                    << int(v.prefix_pairs[p].second) << "\n";
        }
        out << key << "claims=" << row.claims.size() << "\n";
        for (std::size_t c = 0; c < row.claims.size(); ++c) {
            const PublishedClaim& claim = row.claims[c];
            const std::string ckey = key + "claim." + std::to_string(c) + ".";
            out << ckey << "bits=" << claim.bits << "\n";
            if (!claim.printed_ratio.empty()) {
                out << ckey << "printed_ratio=" << claim.printed_ratio << "\n";
                out << ckey << "recomputed_ratio="
                    << percent_string(static_cast<std::int64_t>(report.baseline_bits) -
                                          static_cast<std::int64_t>(claim.bits),
                                      report.baseline_bits)
                    << "\n";
            }
            out << ckey << "source=" << claim.source << "\n";
        }
    }
    return out.str();
}

}  // namespace ghc
