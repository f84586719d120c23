#include "ghc/error.hpp"

namespace ghc {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::NoLeaves: return "NoLeaves";
        case Errc::KraftViolation: return "KraftViolation";
        case Errc::MissingSymbol: return "MissingSymbol";
        case Errc::BadGroupSize: return "BadGroupSize";
        case Errc::UnsupportedLiteralK: return "UnsupportedLiteralK";
        case Errc::AmbiguousCodebook: return "AmbiguousCodebook";
        case Errc::TruncatedPayload: return "TruncatedPayload";
        case Errc::TrailingGarbage: return "TrailingGarbage";
        case Errc::InvalidPayload: return "InvalidPayload";
        case Errc::BadMagic: return "BadMagic";
        case Errc::BadVersion: return "BadVersion";
        case Errc::MalformedHeader: return "MalformedHeader";
        case Errc::IoFailure: return "IoFailure";
    }
    return "UnknownError";
}

}  // namespace ghc
