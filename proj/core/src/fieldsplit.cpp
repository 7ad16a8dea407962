#include "trinil/fieldsplit.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "gf_dense.hpp"

namespace trinil {

std::string_view to_string(Provenance p) noexcept {
    switch (p) {
        case Provenance::CaseI: return "CaseI";
        case Provenance::CaseII: return "CaseII";
        case Provenance::CaseIII_n2: return "CaseIII_n2";
        case Provenance::CaseIII_n3: return "CaseIII_n3";
        case Provenance::CaseIII_big: return "CaseIII_big";
        case Provenance::NilBlock: return "NilBlock";
        case Provenance::ShiftTrick: return "ShiftTrick";
        case Provenance::RandomFallback: return "RandomFallback";
        case Provenance::Scalar: return "Scalar";
    }
    return "Unknown";
}

namespace {

[[noreturn]] void verification_failure(const std::string& what) {
    throw Error(ErrorCode::InternalVerificationFailure, "block split: " + what);
}

void check_split(const MatGF& c, const BlockSplit& s) {
    if (!(s.e + s.w == c)) verification_failure("E + W differs from the block");
    if (!is_nilpotent(s.w)) verification_failure("W^n != 0");
    const bool kind_ok = s.kind == SplitKind::Idempotent ? is_idempotent(s.e) : is_tripotent(s.e);
    if (!kind_ok) verification_failure(s.kind == SplitKind::Idempotent ? "E^2 != E" : "E^3 != E");
}

/// Pure subdiagonal shift: the nilpotent half of Cases I and II.
MatGF shift(std::size_t n, std::uint8_t p) {
    MatGF w = MatGF::zero(n, p);
    for (std::size_t i = 1; i < n; ++i) w.set(i, i - 1, 1);
    return w;
}

/// Last-column matrix: the tripotent half of Cases I and II.
MatGF last_column(const CompanionBlock& b) {
    const std::size_t n = b.size();
    MatGF e = MatGF::zero(n, b.p);
    for (std::size_t i = 0; i < n; ++i) e.set(i, n - 1, b.coeffs[i]);
    return e;
}

BlockSplit single(MatGF e, MatGF w, SplitKind kind, Provenance prov) {
    return {std::move(e), std::move(w), kind, prov, {prov}};
}

}  // namespace

// ------------------------------------------------------------------ GF(3)

BlockSplit split_gf3_block(const CompanionBlock& block) {
    if (block.p != 3) throw Error(ErrorCode::InvalidArgument, "split_gf3_block needs a GF(3) block");
    const std::size_t n = block.size();
    if (n == 0) throw Error(ErrorCode::DimensionMismatch, "empty companion block");
    const MatGF c = block.matrix();
    BlockSplit out = [&] {
        if (n == 1) {
            // Every element of GF(3) is tripotent.
            return single(c, MatGF::zero(1, 3), SplitKind::Tripotent, Provenance::Scalar);
        } else if (block.subleading() == 1) {
            return single(last_column(block), shift(n, 3), SplitKind::Tripotent, Provenance::CaseI);
        } else if (block.subleading() == 2) {
            return single(last_column(block), shift(n, 3), SplitKind::Tripotent, Provenance::CaseII);
        } else if (n == 2) {
            // [[0, c0], [1, 0]] = [[0, 1], [1, 0]] + [[0, c0 - 1], [0, 0]]
            MatGF e = MatGF::from_rows({{0, 1}, {1, 0}}, 3);
            return single(e, c - e, SplitKind::Tripotent, Provenance::CaseIII_n2);
        } else if (n == 3) {
            MatGF e = MatGF::from_rows({{0, 0, 0}, {1, 0, 1}, {0, 1, 0}}, 3);
            return single(e, c - e, SplitKind::Tripotent, Provenance::CaseIII_n3);
        } else {
            // Corner pattern on the last three coordinates:
            // (n-1, n-2), (n-1, n), (n, n-1) in 1-based indexing.
            MatGF e = MatGF::zero(n, 3);
            e.set(n - 2, n - 3, 1);
            e.set(n - 2, n - 1, 1);
            e.set(n - 1, n - 2, 1);
            return single(e, c - e, SplitKind::Tripotent, Provenance::CaseIII_big);
        }
    }();
    check_split(c, out);
    return out;
}

// ------------------------------------------------------------------ GF(2)

namespace {

int strength(Provenance p) {
    switch (p) {
        case Provenance::RandomFallback: return 4;
        case Provenance::ShiftTrick: return 3;
        case Provenance::CaseI: return 2;
        case Provenance::NilBlock: return 1;
        default: return 0;
    }
}

class Gf2Splitter {
public:
    Gf2Splitter(std::uint64_t seed, std::uint64_t budget) : rng_(seed), seed_(seed), budget_(budget) {}

    BlockSplit split(const CompanionBlock& b) {
        const std::size_t n = b.size();
        const MatGF c = b.matrix();
        const PolyGF q = b.char_poly();

        // (1) nilpotent block
        if (std::all_of(b.coeffs.begin(), b.coeffs.end(), [](std::uint8_t x) { return x == 0; })) {
            return single(MatGF::zero(n, 2), c, SplitKind::Idempotent, Provenance::NilBlock);
        }
        // (2) split off the x^s factor
        const auto first_nonzero = static_cast<std::size_t>(
            std::find_if(b.coeffs.begin(), b.coeffs.end(), [](std::uint8_t x) { return x != 0; }) - b.coeffs.begin());
        if (first_nonzero > 0) {
            const PolyGF xs = PolyGF::x_power(2, first_nonzero);
            return refine(c, coprime_split_block(b, xs, q / xs));
        }
        // (3) Case I
        if (b.subleading() == 1) {
            return single(last_column(b), shift(n, 2), SplitKind::Idempotent, Provenance::CaseI);
        }
        // (4) C + I has characteristic polynomial q(x + 1)
        const PolyGF shifted = q.shifted(1);
        if (shifted == PolyGF::x_power(2, n)) {
            const MatGF id = MatGF::identity(n, 2);
            return single(id, c + id, SplitKind::Idempotent, Provenance::ShiftTrick);
        }
        if (shifted.subleading() == 1) return shift_trick(c, shifted);
        // (5) several primary components: refine and retry per piece
        const auto primaries = primary_components(q);
        if (primaries.size() > 1) return refine(c, coprime_split_block(b, primaries.front(), q / primaries.front()));
        // (6) a primary block no deterministic rule covers
        return random_fallback(b);
    }

private:
    BlockSplit refine(const MatGF& c, const SimilarityForm& form) {
        std::vector<BlockSplit> parts;
        for (const auto& sub : form.blocks) parts.push_back(split(sub));
        const auto field = assemble_field_decomposition(form, parts);
        BlockSplit out{field.e, field.w, SplitKind::Idempotent, Provenance::NilBlock, {}};
        for (const auto& p : parts) {
            if (strength(p.provenance) > strength(out.provenance)) out.provenance = p.provenance;
            out.parts.insert(out.parts.end(), p.parts.begin(), p.parts.end());
        }
        check_split(c, out);
        return out;
    }

    BlockSplit shift_trick(const MatGF& c, const PolyGF& shifted) {
        const std::size_t n = c.size();
        const MatGF id = MatGF::identity(n, 2);
        const MatGF b = c + id;
        // e_1 is cyclic for C, hence for C + I; its Krylov basis puts C + I
        // into companion form.
        std::vector<detail::GfVec> cols{detail::unit_vector(n, 0)};
        for (std::size_t j = 1; j < n; ++j) cols.push_back(detail::apply(b, cols.back()));
        const MatGF k = detail::from_columns(cols, 2);
        const auto k_inv = detail::inverse(k);
        const CompanionBlock target = companion_of(shifted);
        if (!k_inv || !(*k_inv * b * k == target.matrix())) verification_failure("C + I is not cyclic on e_1");
        const MatGF e = k * last_column(target) * *k_inv + id;
        const MatGF w = k * shift(n, 2) * *k_inv;
        BlockSplit out = single(e, w, SplitKind::Idempotent, Provenance::ShiftTrick);
        check_split(c, out);
        return out;
    }

    BlockSplit random_fallback(const CompanionBlock& blk) {
        const std::size_t n = blk.size();
        if (n < 4 || n % 2 != 0) verification_failure("fallback reached for a block of size " + std::to_string(n));
        const MatGF c = blk.matrix();
        std::bernoulli_distribution bit(0.5);
        const std::size_t rank_count = (n - 2) / 2;
        for (std::uint64_t attempt = 0; attempt < budget_; ++attempt) {
            const std::size_t r = 2 + 2 * static_cast<std::size_t>(attempt % rank_count);
            MatGF p = MatGF::zero(n, 2);
            std::optional<MatGF> p_inv;
            do {
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) p.set(i, j, bit(rng_) ? 1 : 0);
                p_inv = detail::inverse(p);
            } while (!p_inv);
            MatGF d = MatGF::zero(n, 2);
            for (std::size_t i = 0; i < r; ++i) d.set(i, i, 1);
            const MatGF e = p * d * *p_inv;
            const MatGF w = c - e;
            if (is_nilpotent(w)) {
                BlockSplit out = single(e, w, SplitKind::Idempotent, Provenance::RandomFallback);
                check_split(c, out);
                return out;
            }
        }
        throw FallbackBudgetExhausted(blk.char_poly().to_string(), seed_, budget_);
    }

    std::mt19937_64 rng_;
    std::uint64_t seed_;
    std::uint64_t budget_;
};

}  // namespace

BlockSplit split_gf2_block(const CompanionBlock& block, std::uint64_t seed, std::uint64_t attempt_budget) {
    if (block.p != 2) throw Error(ErrorCode::InvalidArgument, "split_gf2_block needs a GF(2) block");
    if (block.size() == 0) throw Error(ErrorCode::DimensionMismatch, "empty companion block");
    if (attempt_budget == 0) throw Error(ErrorCode::InvalidArgument, "attempt budget must be at least 1");
    Gf2Splitter splitter(seed, attempt_budget);
    BlockSplit out = splitter.split(block);
    check_split(block.matrix(), out);
    return out;
}

FieldDecomposition assemble_field_decomposition(const SimilarityForm& form, std::span<const BlockSplit> splits) {
    if (splits.size() != form.blocks.size()) {
        throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(form.blocks.size()) + " splits, got " +
                                                  std::to_string(splits.size()));
    }
    std::vector<MatGF> es, ws;
    for (std::size_t i = 0; i < splits.size(); ++i) {
        if (splits[i].e.size() != form.blocks[i].size() || splits[i].e.prime() != form.blocks[i].p) {
            throw Error(ErrorCode::ShapeMismatch, "split " + std::to_string(i) + " does not match its block");
        }
        es.push_back(splits[i].e);
        ws.push_back(splits[i].w);
    }
    return {form.s_inv * MatGF::block_diagonal(es) * form.s, form.s_inv * MatGF::block_diagonal(ws) * form.s};
}

}  // namespace trinil
