#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hnflag {

enum class ErrorKind {
    // input shape and parsing
    ParseError,
    ValidationError,
    EmptyInput,
    NonIncreasingRank,
    NonDecreasingSlope,
    NotStrictlyDecreasing,
    DimensionMismatch,
    BasisMismatch,
    ZeroMultiplicity,
    IndexOutOfRange,
    CapExceeded,
    // mathematical preconditions
    SemistableBundle,
    RankNotInHNProfile,
    NotNef,
    AssumptionNotSatisfied,
    // broken internal invariants
    InvariantFailure,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NonIncreasingRank: return "NonIncreasingRank";
    case ErrorKind::NonDecreasingSlope: return "NonDecreasingSlope";
    case ErrorKind::NotStrictlyDecreasing: return "NotStrictlyDecreasing";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::ZeroMultiplicity: return "ZeroMultiplicity";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::SemistableBundle: return "SemistableBundle";
    case ErrorKind::RankNotInHNProfile: return "RankNotInHNProfile";
    case ErrorKind::NotNef: return "NotNef";
    case ErrorKind::AssumptionNotSatisfied: return "AssumptionNotSatisfied";
    case ErrorKind::InvariantFailure: return "InvariantFailure";
    }
    return "Unknown";
}

/// Process exit code associated with an error kind:
/// 2 malformed input, 3 violated mathematical precondition, 4 internal invariant failure.
constexpr int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::SemistableBundle:
    case ErrorKind::RankNotInHNProfile:
    case ErrorKind::NotNef:
    case ErrorKind::AssumptionNotSatisfied:
        return 3;
    case ErrorKind::InvariantFailure:
        return 4;
    default:
        return 2;
    }
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace hnflag
