#include "ghc/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ghc/analysis.hpp"
#include "ghc/codec.hpp"
#include "ghc/error.hpp"
#include "ghc/grouping.hpp"
#include "ghc/report.hpp"

namespace ghc {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBadCodebook = 2;
constexpr int kExitIo = 3;
constexpr int kExitBadContainer = 4;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::EmptyInput:
        case Errc::BadGroupSize:
            return kExitUsage;
        case Errc::UnsupportedLiteralK:
        case Errc::AmbiguousCodebook:
        case Errc::MissingSymbol:
            return kExitBadCodebook;
        case Errc::IoFailure:
            return kExitIo;
        default:
            return kExitBadContainer;
    }
}

std::vector<std::uint8_t> load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::IoFailure, "cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) raise(Errc::IoFailure, "read failed on " + path);
    return bytes;
}

void save_file(const std::string& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) raise(Errc::IoFailure, "cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) raise(Errc::IoFailure, "write failed on " + path);
}

// Empty path means stdout.
void emit_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) raise(Errc::IoFailure, "cannot open " + path + " for writing");
    out << text;
    if (!out) raise(Errc::IoFailure, "write failed on " + path);
}

struct Options {
    std::string input;
    std::string output;
    std::string mode = "classic";
    int k = 0;
    std::string format = "text";
};

CodebookMode parse_mode(const std::string& mode) {
    if (mode == "classic") return CodebookMode::Classic;
    if (mode == "grouped-literal") return CodebookMode::GroupedLiteral;
    return CodebookMode::GroupedPrefixFree;
}

Codebook build_codebook(const FrequencyTable& table, CodebookMode mode, int k) {
    if (mode == CodebookMode::Classic) return make_classic_codebook(table);
    return grouped_codebook(table, k, mode);
}

std::string codebook_listing_text(const std::string& scheme, const Codebook& book,
                                  const ValidityReport& validity) {
    std::ostringstream out;
    out << scheme << ": " << book.codes.size() << " codes, kraft " << validity.kraft.str()
        << ", " << (validity.decodable ? "decodable" : "NOT decodable") << "\n";
    for (const CodeEntry& e : book.codes)
        out << "  " << symbol_display(e.symbol) << " -> " << e.code.str() << "\n";
    return out.str();
}

std::string codebook_listing_kv(const std::string& key, const Codebook& book) {
    std::ostringstream out;
    for (std::size_t i = 0; i < book.codes.size(); ++i) {
        out << key << "code." << i << ".symbol=" << int(book.codes[i].symbol) << "\n";
        out << key << "code." << i << ".bits=" << book.codes[i].code.str() << "\n";
    }
    return out.str();
}

int cmd_analyze(const Options& opt) {
    const std::vector<std::uint8_t> input = load_file(opt.input);
    const ComparisonReport report = compression_report(input);
    const FrequencyTable table = build_frequency_table(input);

    std::ostringstream out;
    if (opt.format == "kv") {
        for (std::size_t i = 0; i < table.entries.size(); ++i) {
            const FrequencyEntry& e = table.entries[i];
            out << "freq." << i << ".symbol=" << int(e.symbol) << "\n";
            out << "freq." << i << ".count=" << e.count << "\n";
            out << "freq." << i << ".first_pos=" << e.first_pos << "\n";
        }
        out << render_kv(report);
        for (std::size_t i = 1; i < report.rows.size(); ++i) {
            const ReportRow& row = report.rows[i];
            const Codebook book = build_codebook(table, *row.mode, row.k);
            out << codebook_listing_kv("row." + std::to_string(i) + ".", book);
        }
    } else {
        out << "frequency table: " << table.total << " bytes, " << table.size()
            << " distinct symbols\n";
        for (const FrequencyEntry& e : table.entries)
            out << "  " << symbol_display(e.symbol) << " count " << e.count << " first_pos "
                << e.first_pos << "\n";
        out << "\ncode books:\n";
        for (std::size_t i = 1; i < report.rows.size(); ++i) {
            const ReportRow& row = report.rows[i];
            const Codebook book = build_codebook(table, *row.mode, row.k);
            out << codebook_listing_text(row.scheme, book, *row.validity);
        }
        out << "\n" << render_text(report);
    }
    emit_text(opt.output, out.str());
    return kExitOk;
}

int cmd_encode(const Options& opt) {
    const std::vector<std::uint8_t> input = load_file(opt.input);
    const FrequencyTable table = build_frequency_table(input);
    const CodebookMode mode = parse_mode(opt.mode);

    const Codebook book = build_codebook(table, mode, opt.k);
    const ValidityReport validity = prefix_violations(book);
    if (!validity.decodable)
        std::cerr << "warning: " << mode_name(mode) << " code book is not uniquely decodable ("
                  << validity.duplicate_pairs.size() << " duplicate, "
                  << validity.prefix_pairs.size()
                  << " prefix pair(s)); the container will not decode\n";

    const Container container = encode_payload(input, book);
    save_file(opt.output, write_container(container));
    return kExitOk;
}

int cmd_decode(const Options& opt) {
    const std::vector<std::uint8_t> bytes = load_file(opt.input);
    const Container container = read_container(bytes);
    const std::vector<std::uint8_t> output = decode_payload(container);
    save_file(opt.output, output);
    return kExitOk;
}

int cmd_bench(const Options& opt) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(opt.input, ec)) raise(Errc::IoFailure, opt.input + " is not a directory");

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(opt.input, ec))
        if (entry.is_regular_file()) files.push_back(entry.path());
    if (ec) raise(Errc::IoFailure, "cannot list " + opt.input);
    std::sort(files.begin(), files.end());

    struct Totals {
        std::uint64_t payload = 0;
        std::uint64_t header = 0;
    };
    std::vector<std::string> schemes;
    std::vector<Totals> totals;
    std::uint64_t baseline_total = 0;
    std::size_t analyzed = 0;

    std::ostringstream out;
    const bool kv = opt.format == "kv";
    if (kv) out << "corpus=" << opt.input << "\n";
    else out << "corpus bench: " << opt.input << "\n";

    for (const fs::path& file : files) {
        const std::vector<std::uint8_t> bytes = load_file(file.string());
        if (bytes.empty()) {
            if (!kv) out << "\n-- " << file.filename().string() << ": empty, skipped --\n";
            continue;
        }
        const ComparisonReport report = compression_report(bytes);
        if (kv) {
            const std::string prefix = "file." + std::to_string(analyzed) + ".";
            out << prefix << "path=" << file.filename().string() << "\n";
            out << render_kv(report, prefix);
        } else {
            out << "\n-- " << file.filename().string() << " --\n" << render_text(report);
        }

        if (schemes.empty()) {
            for (const ReportRow& row : report.rows) schemes.push_back(row.scheme);
            totals.resize(report.rows.size());
        }
        baseline_total += report.baseline_bits;
        for (std::size_t i = 0; i < report.rows.size(); ++i) {
            totals[i].payload += report.rows[i].payload_bits;
            totals[i].header += report.rows[i].header_bits;
        }
        ++analyzed;
    }

    if (kv) {
        out << "files=" << analyzed << "\n";
        out << "aggregate.baseline_bits=" << baseline_total << "\n";
        for (std::size_t i = 0; i < schemes.size(); ++i) {
            out << "aggregate." << schemes[i] << ".payload_bits=" << totals[i].payload << "\n";
            out << "aggregate." << schemes[i] << ".header_bits=" << totals[i].header << "\n";
            out << "aggregate." << schemes[i] << ".ratio_percent="
                << percent_string(static_cast<std::int64_t>(baseline_total) -
                                      static_cast<std::int64_t>(totals[i].payload),
                                  baseline_total == 0 ? 1 : baseline_total)
                << "\n";
        }
    } else {
        out << "\naggregate over " << analyzed << " file(s), baseline " << baseline_total
            << " bits:\n";
        char line[160];
        std::snprintf(line, sizeof line, "%-24s %12s %10s %9s\n", "scheme", "payload", "header",
                      "ratio");
        out << line;
        for (std::size_t i = 0; i < schemes.size(); ++i) {
            std::snprintf(line, sizeof line, "%-24s %12llu %10llu %9s\n", schemes[i].c_str(),
                          static_cast<unsigned long long>(totals[i].payload),
                          static_cast<unsigned long long>(totals[i].header),
                          percent_string(static_cast<std::int64_t>(baseline_total) -
                                             static_cast<std::int64_t>(totals[i].payload),
                                         baseline_total == 0 ? 1 : baseline_total)
                              .c_str());
            out << line;
        }
    }
    emit_text(opt.output, out.str());
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"grouped-huffman entropy coder"};
    app.require_subcommand(1);

    Options opt;
    const auto modes = CLI::IsMember({"classic", "grouped-literal", "grouped-prefix-free"});
    const auto formats = CLI::IsMember({"text", "kv"});

    CLI::App* analyze = app.add_subcommand("analyze", "frequency table, code books, comparison");
    analyze->add_option("--input", opt.input, "file to analyze")->required();
    analyze->add_option("--output", opt.output, "report destination (default stdout)");
    analyze->add_option("--format", opt.format, "text or kv")->check(formats);

    CLI::App* encode = app.add_subcommand("encode", "compress a file into a container");
    encode->add_option("--input", opt.input, "file to compress")->required();
    encode->add_option("--output", opt.output, "container destination")->required();
    encode->add_option("--mode", opt.mode, "code-book construction")->check(modes);
    encode->add_option("--k", opt.k, "group size for grouped modes");

    CLI::App* decode = app.add_subcommand("decode", "expand a container back to bytes");
    decode->add_option("--input", opt.input, "container to read")->required();
    decode->add_option("--output", opt.output, "destination for the decoded bytes")->required();

    CLI::App* bench = app.add_subcommand("bench", "per-file comparison reports over a directory");
    bench->add_option("--input", opt.input, "corpus directory")->required();
    bench->add_option("--output", opt.output, "report destination (default stdout)");
    bench->add_option("--format", opt.format, "text or kv")->check(formats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (encode->parsed() && opt.mode != "classic" && opt.k < 2) {
        std::cerr << "error: " << opt.mode << " needs --k of at least 2\n";
        return kExitUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(opt);
        if (encode->parsed()) return cmd_encode(opt);
        if (decode->parsed()) return cmd_decode(opt);
        if (bench->parsed()) return cmd_bench(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace ghc
