#include "expansionlab/error.hpp"

namespace explab {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::DegreeTooLow: return "DegreeTooLow";
        case ErrorCode::DegenerateComponent: return "DegenerateComponent";
        case ErrorCode::BoundaryTooLarge: return "BoundaryTooLarge";
        case ErrorCode::EmptyBoundary: return "EmptyBoundary";
        case ErrorCode::PhaseTooHigh: return "PhaseTooHigh";
        case ErrorCode::InsufficientPoints: return "InsufficientPoints";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::InvalidPermutation: return "InvalidPermutation";
        case ErrorCode::ZeroNorm: return "ZeroNorm";
        case ErrorCode::DegenerateM: return "DegenerateM";
        case ErrorCode::InvalidRunnerConfig: return "InvalidRunnerConfig";
        case ErrorCode::ConditionNotMet: return "ConditionNotMet";
        case ErrorCode::NonIntegerSpeeds: return "NonIntegerSpeeds";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownKey: return "UnknownKey";
    }
    return "Unknown";
}

}  // namespace explab
