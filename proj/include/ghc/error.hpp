#pragma once

#include <stdexcept>
#include <string>

namespace ghc {

enum class Errc {
    EmptyInput,
    NoLeaves,
    KraftViolation,
    MissingSymbol,
    BadGroupSize,
    UnsupportedLiteralK,
    AmbiguousCodebook,
    TruncatedPayload,
    TrailingGarbage,
    InvalidPayload,
    BadMagic,
    BadVersion,
    MalformedHeader,
    IoFailure,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ghc
