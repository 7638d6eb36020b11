#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace explab {

// Domain error codes. Their names are part of the CLI's machine-readable output.
enum class ErrorCode {
    ZeroPolynomial,
    LengthMismatch,
    DegreeTooLow,
    DegenerateComponent,
    BoundaryTooLarge,
    EmptyBoundary,
    PhaseTooHigh,
    InsufficientPoints,
    SizeMismatch,
    InvalidPermutation,
    ZeroNorm,
    DegenerateM,
    InvalidRunnerConfig,
    ConditionNotMet,
    NonIntegerSpeeds,
    InvalidArgument,
    ParseError,
    UnknownKey,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

}  // namespace explab
