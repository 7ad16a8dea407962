#pragma once

// Brute-force oracles and ring classifiers over Z/mZ.  Nothing in here
// calls the decomposition engine; these are the ground truth it is checked
// against.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trinil/matrix.hpp"
#include "trinil/zmod.hpp"

namespace trinil::lab {

/// Exhaustive sweeps are limited to m <= 2^20.
inline constexpr std::uint64_t kMaxClassifyModulus = std::uint64_t{1} << 20;
/// Matrix enumeration is limited to m^(n*n) <= 2^24 candidates.
inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 24;

struct RingReport {
    std::uint64_t m = 0;
    bool is_trinil_clean = false;
    bool is_strongly_2_nil_clean = false;  // a - a^3 nilpotent for all a
    bool is_tripotent_ring = false;        // a^3 = a for all a
    bool is_2_boolean = false;             // a^2 idempotent for all a
    /// Least e with (a - a^3)^e = 0 for every a, when one exists.
    std::optional<std::uint64_t> bounded_index_exponent;
    /// First element violating each predicate.
    std::optional<std::uint64_t> trinil_witness;
    std::optional<std::uint64_t> strongly_2_nil_clean_witness;
    std::optional<std::uint64_t> tripotent_witness;
    std::optional<std::uint64_t> two_boolean_witness;
};

/// All predicates by exhaustive element sweeps.
RingReport classify_zm(std::uint64_t m);

/// Nilpotency by direct powering up to n * floor(log2 m), valid for any m.
bool brute_force_nilpotent(const MatZ& w);

/// Every tripotent n x n matrix over Z/m, in lexicographic entry order.
std::vector<MatZ> enumerate_tripotents(std::size_t n, const Modulus& mod);

/// All tripotent E with A - E nilpotent.  An empty result proves that A has
/// no tripotent + nilpotent decomposition.  Throws EnumerationTooLarge.
std::vector<MatZ> oracle_decompose(const MatZ& a);
/// Same, against a precomputed tripotent list.
std::vector<MatZ> oracle_decompose(const MatZ& a, const std::vector<MatZ>& tripotents);

struct RefuterEvidence {
    MatZ a;                // [[1,1],[1,0]] in the top-left corner, identity elsewhere
    MatZ cube_minus_a;     // A^3 - A
    MatZ claimed_inverse;  // [[1,-1],[-1,2]], 2 x 2
    MatZ corner_product;   // corner of A^3 - A times the claimed inverse
    bool corner_inverse_ok = false;
    bool not_nilpotent = false;
};

/// Shows M_n(Z/m) is not strongly 2-nil-clean: A^3 - A has an invertible
/// 2 x 2 corner block, so no power of it vanishes.  `flip_sign` corrupts the
/// claimed inverse (used to exercise failure reporting).
RefuterEvidence refute_strongly_2_nil_clean_matrices(const Modulus& mod, std::size_t n, bool flip_sign = false);

struct ConverseWitness {
    std::uint64_t a = 0;
    std::uint64_t candidates_examined = 0;
    bool no_decomposition = false;
};

/// Over GF(p): finds a with a^2 != 1 and checks that a I_n has no
/// tripotent + nilpotent decomposition.  nullopt when every a satisfies
/// a^2 = 1 or a = 0 (p = 2, 3).
std::optional<ConverseWitness> field_converse_sweep(std::uint64_t p, std::size_t n);

struct SweepRow {
    std::uint64_t m = 0;
    bool trinil_clean = false;
    bool only_primes_2_3 = false;
    [[nodiscard]] bool agrees() const noexcept { return trinil_clean == only_primes_2_3; }
};

/// classify_zm(m).is_trinil_clean against "m = 2^a 3^b" for 2 <= m <= limit (<= 10^4).
std::vector<SweepRow> modulus_admissibility_sweep(std::uint64_t limit);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// The packaged reproductions: refuter at several moduli and sizes, the
/// converse at p = 5, and the admissibility sweep to 100.
std::vector<CheckResult> reproduction_checks(bool inject_fault = false);

}  // namespace trinil::lab
