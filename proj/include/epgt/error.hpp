#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace epgt {

/// Failure categories raised by the library. Each maps onto one named
/// error condition of an operation; callers switch on `code()` rather than
/// parsing messages.
enum class ErrorCode {
    NotAdjacent,
    InvalidPath,
    NotOneBend,
    ParseError,
    BadParameter,
    SizeLimitExceeded,
    WindowTooLarge,
    BoundsTooLarge,
    NotAClique,
    NotB1,
    NotBentAtCorner,
    AssumptionViolated,
    NotChordlessC4,
    Unclassifiable,
    UnknownSubtype,
    EmptyFamily,
    DuplicateMember,
    SegmentsNotColinear,
    NoFeasibleRecoloring,
    Timeout,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::NotOneBend: return "NotOneBend";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::BoundsTooLarge: return "BoundsTooLarge";
    case ErrorCode::NotAClique: return "NotAClique";
    case ErrorCode::NotB1: return "NotB1";
    case ErrorCode::NotBentAtCorner: return "NotBentAtCorner";
    case ErrorCode::AssumptionViolated: return "AssumptionViolated";
    case ErrorCode::NotChordlessC4: return "NotChordlessC4";
    case ErrorCode::Unclassifiable: return "Unclassifiable";
    case ErrorCode::UnknownSubtype: return "UnknownSubtype";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::DuplicateMember: return "DuplicateMember";
    case ErrorCode::SegmentsNotColinear: return "SegmentsNotColinear";
    case ErrorCode::NoFeasibleRecoloring: return "NoFeasibleRecoloring";
    case ErrorCode::Timeout: return "Timeout";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace epgt
