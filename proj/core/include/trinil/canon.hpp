#pragma once

// Block-companion (rational) canonical forms over GF(2) and GF(3), with
// an explicit similarity transform, and factorization of the polynomials
// that label the blocks.

#include <cstdint>
#include <vector>

#include "trinil/gfpoly.hpp"
#include "trinil/matrix.hpp"

namespace trinil {

/// Companion block with subdiagonal ones and last column (c_0, ..., c_{n-1}).
struct CompanionBlock {
    std::uint8_t p = 2;
    std::vector<std::uint8_t> coeffs;

    [[nodiscard]] std::size_t size() const noexcept { return coeffs.size(); }
    [[nodiscard]] MatGF matrix() const { return MatGF::companion(p, coeffs); }
    /// x^n - c_{n-1} x^{n-1} - ... - c_0.
    [[nodiscard]] PolyGF char_poly() const { return PolyGF::from_companion(p, coeffs); }
    /// c_{n-1}.
    [[nodiscard]] std::uint8_t subleading() const noexcept { return coeffs.empty() ? 0 : coeffs.back(); }

    friend bool operator==(const CompanionBlock&, const CompanionBlock&) = default;
};

CompanionBlock companion_of(const PolyGF& monic_poly);

/// S A = F S where F is the block-diagonal matrix of `blocks`.
struct SimilarityForm {
    MatGF s;
    MatGF s_inv;
    std::vector<CompanionBlock> blocks;

    /// The block-diagonal matrix F.
    [[nodiscard]] MatGF form() const;
    /// Checks S A = F S, S S_inv = I and the block sizes against A.
    [[nodiscard]] bool certifies(const MatGF& a) const;
};

/// Any block-companion decomposition (no invariant-factor ordering).
/// Deterministic; the result is verified before it is returned.
SimilarityForm frobenius_form(const MatGF& a);

/// Refines one companion block whose characteristic polynomial is q1 * q2
/// with gcd(q1, q2) = 1 into blocks for q1 and q2 (in that order).
/// Throws DegenerateFactor for a constant factor, NotCoprime for a common
/// factor, InvalidArgument when q1 q2 is not the block's polynomial.
SimilarityForm coprime_split_block(const CompanionBlock& block, const PolyGF& q1, const PolyGF& q2);

struct PolyFactor {
    PolyGF irreducible;
    unsigned multiplicity = 0;

    friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// Complete factorization of a monic polynomial into monic irreducibles,
/// sorted by degree then coefficients.
std::vector<PolyFactor> poly_factor(const PolyGF& q);

/// The pairwise coprime prime powers pi^e whose product is q, same order.
std::vector<PolyGF> primary_components(const PolyGF& q);

bool is_irreducible(const PolyGF& q);

}  // namespace trinil
