#pragma once

#include <stdexcept>
#include <string>

namespace csp {

enum class ErrorCode {
    NonPositive,
    LengthExceedsCapacity,
    DimensionMismatch,
    NTooLarge,
    KOutOfRange,
    MalformedSystem,
    EmptyColumnSet,
    NotDownwardClosed,
    OverlappingSets,
    NotMonotone,
    PatternExplosion,
    ParseError,
    ConsistencyViolation,
    PivotLimit,
};

struct Error : std::runtime_error {
    ErrorCode code;
    Error(ErrorCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) { throw Error(c, msg); }

} // namespace csp
