#pragma once

// End-to-end tripotent + nilpotent decomposition of matrices over Z/mZ,
// m = 2^k 3^l, with a certificate that is re-checked from scratch.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trinil/fieldsplit.hpp"
#include "trinil/matrix.hpp"

namespace trinil {

struct CertificateChecks {
    bool sum_ok = false;        // E + W = A
    bool tripotent_ok = false;  // E^3 = E
    bool nilpotent_ok = false;  // W^exponent = 0
    bool residue_ok = false;    // E mod 2, E mod 3 match the field-level splits

    [[nodiscard]] bool all() const noexcept { return sum_ok && tripotent_ok && nilpotent_ok && residue_ok; }
    friend bool operator==(const CertificateChecks&, const CertificateChecks&) = default;
};

struct TrinilCertificate {
    MatZ a;
    MatZ e;
    MatZ w;
    std::uint64_t nilpotency_exponent = 0;
    CertificateChecks checks;
    /// One entry per field block, e.g. "GF2:CaseI" or "GF3:CaseIII_big".
    std::vector<std::string> provenance;
    std::uint64_t seed = 0;
    /// Field-level tripotents E was lifted from (absent for factors not in m).
    std::optional<MatGF> residue_e2;
    std::optional<MatGF> residue_e3;
};

struct Verification {
    bool ok = false;
    CertificateChecks checks;
    /// Name of the first failing check, empty when ok.
    std::string failure;
};

/// CRT split, field canonical forms and block splits, lifting, CRT combine.
/// Throws InadmissibleModulus, FallbackBudgetExhausted or
/// InternalVerificationFailure.
TrinilCertificate decompose(const MatZ& a, std::uint64_t seed = 0,
                            std::uint64_t fallback_budget = kDefaultFallbackBudget);

/// Recomputes every check; stored flags are ignored.
Verification verify(const TrinilCertificate& cert);

/// An element of the upper triangular ring T_s(Z/m).
struct TriangularInput {
    Modulus modulus;
    std::size_t s = 0;
    std::vector<std::int64_t> diagonal;      // s entries
    std::vector<std::int64_t> strict_upper;  // s(s-1)/2 entries, row by row

    [[nodiscard]] MatZ matrix() const;
};

/// E is the diagonal of scalar tripotents; W = T - E is triangular with a
/// nilpotent diagonal.  The stored exponent is the least t with W^t = 0.
TrinilCertificate decompose_triangular(const TriangularInput& t);

struct BatchItem {
    std::optional<TrinilCertificate> certificate;
    std::optional<ErrorCode> error;
    std::string message;
};

/// Item i is decomposed with seed + i.  Errors are collected per item and
/// the output order matches the input.  threads = 0 picks the hardware count.
std::vector<BatchItem> decompose_batch(std::span<const MatZ> matrices, std::uint64_t seed,
                                       std::uint64_t fallback_budget = kDefaultFallbackBudget,
                                       unsigned threads = 0);

}  // namespace trinil
