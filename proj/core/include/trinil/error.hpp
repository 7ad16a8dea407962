#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace trinil {

enum class ErrorCode {
    NotAUnit,
    InadmissibleModulus,
    ModulusMismatch,
    DimensionMismatch,
    ShapeMismatch,
    NotCoprime,
    DegenerateFactor,
    NotAlmostIdempotent,
    NotAlmostTripotent,
    FallbackBudgetExhausted,
    InternalVerificationFailure,
    EnumerationTooLarge,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by the GF(2) randomized search; retrying with a larger budget
/// (or another seed) is the expected recovery.
class FallbackBudgetExhausted : public Error {
public:
    FallbackBudgetExhausted(std::string block, std::uint64_t seed, std::uint64_t attempts)
        : Error(ErrorCode::FallbackBudgetExhausted,
                "randomized idempotent search exhausted its budget after " +
                    std::to_string(attempts) + " samples (block " + block +
                    ", seed " + std::to_string(seed) + "); retry with a larger budget"),
          block_(std::move(block)), seed_(seed), attempts_(attempts) {}

    [[nodiscard]] const std::string& block() const noexcept { return block_; }
    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
    [[nodiscard]] std::uint64_t attempts() const noexcept { return attempts_; }

private:
    std::string block_;
    std::uint64_t seed_;
    std::uint64_t attempts_;
};

}  // namespace trinil
