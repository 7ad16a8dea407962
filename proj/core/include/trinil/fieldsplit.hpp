#pragma once

// Per-block splittings over the residue fields: tripotent + nilpotent over
// GF(3), idempotent + nilpotent over GF(2).

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "trinil/canon.hpp"
#include "trinil/matrix.hpp"

namespace trinil {

enum class Provenance {
    CaseI,           // last coefficient 1: last-column idempotent + shift
    CaseII,          // last coefficient -1 (GF(3)): E^2 = -E
    CaseIII_n2,      // last coefficient 0, n = 2
    CaseIII_n3,      // last coefficient 0, n = 3
    CaseIII_big,     // last coefficient 0, n >= 4: corner tripotent
    NilBlock,        // characteristic polynomial x^n
    ShiftTrick,      // GF(2): split of C + I, shifted back by I
    RandomFallback,  // GF(2): seeded search over conjugated projections
    Scalar,          // 1 x 1 block over GF(3)
};

std::string_view to_string(Provenance p) noexcept;

enum class SplitKind { Idempotent, Tripotent };

/// E + W equals the block's matrix and W^n = 0.
struct BlockSplit {
    MatGF e;
    MatGF w;
    SplitKind kind = SplitKind::Tripotent;
    /// Strongest strategy used anywhere inside the block.
    Provenance provenance = Provenance::Scalar;
    /// One entry per primary piece the block was refined into, in order.
    std::vector<Provenance> parts;
};

/// Deterministic tripotent split of a GF(3) companion block.
BlockSplit split_gf3_block(const CompanionBlock& block);

inline constexpr std::uint64_t kDefaultFallbackBudget = 100000;

/// Idempotent split of a GF(2) companion block.  Deterministic strategies
/// are tried first; primary blocks that none of them covers are handled by
/// a seeded random search, which throws FallbackBudgetExhausted after
/// `attempt_budget` samples.
BlockSplit split_gf2_block(const CompanionBlock& block, std::uint64_t seed,
                           std::uint64_t attempt_budget = kDefaultFallbackBudget);

struct FieldDecomposition {
    MatGF e;
    MatGF w;
};

/// Conjugates the block splits back: E = S^{-1} diag(E_i) S, likewise W.
FieldDecomposition assemble_field_decomposition(const SimilarityForm& form, std::span<const BlockSplit> splits);

}  // namespace trinil
