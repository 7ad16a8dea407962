#include "trinil/error.hpp"

namespace trinil {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::InadmissibleModulus: return "InadmissibleModulus";
        case ErrorCode::ModulusMismatch: return "ModulusMismatch";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::DegenerateFactor: return "DegenerateFactor";
        case ErrorCode::NotAlmostIdempotent: return "NotAlmostIdempotent";
        case ErrorCode::NotAlmostTripotent: return "NotAlmostTripotent";
        case ErrorCode::FallbackBudgetExhausted: return "FallbackBudgetExhausted";
        case ErrorCode::InternalVerificationFailure: return "InternalVerificationFailure";
        case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace trinil
