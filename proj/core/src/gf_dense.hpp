#pragma once

// Vector-level linear algebra over GF(2) and GF(3) used by the canonical-form
// and block-splitting code.  Not part of the installed interface.

#include <cstdint>
#include <optional>
#include <vector>

#include "trinil/matrix.hpp"

namespace trinil::detail {

using GfVec = std::vector<std::uint8_t>;

GfVec unit_vector(std::size_t n, std::size_t i);
GfVec apply(const MatGF& a, const GfVec& v);
/// Row vector times matrix.
GfVec apply_left(const GfVec& y, const MatGF& a);
bool is_zero(const GfVec& v);

/// Columns -> square matrix.
MatGF from_columns(const std::vector<GfVec>& columns, std::uint8_t p);
std::vector<GfVec> columns_of(const MatGF& a);

std::optional<MatGF> inverse(const MatGF& a);

/// Basis of {x : R x = 0} for the given rows over GF(p), in free-column order.
std::vector<GfVec> nullspace(const std::vector<GfVec>& rows, std::size_t ncols, std::uint8_t p);

/// Some x with R x = rhs (free variables set to zero), if consistent.
std::optional<GfVec> solve(const std::vector<GfVec>& rows, const GfVec& rhs, std::size_t ncols, std::uint8_t p);

/// Incremental row echelon form that remembers how each stored vector was
/// built, so a dependent insert reports its coefficients over earlier
/// independent inserts.
class SpanTracker {
public:
    SpanTracker(std::size_t dim, std::uint8_t p) : dim_(dim), p_(p) {}

    /// Stores v and returns nullopt if v is independent of the stored span;
    /// otherwise returns c with v = sum_j c_j u_j over the independent inserts u_j.
    std::optional<GfVec> insert(const GfVec& v);
    /// Membership test without storing.
    [[nodiscard]] bool contains(const GfVec& v) const;
    [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }

private:
    struct Row {
        GfVec vec;
        std::size_t pivot;
        GfVec combo;  // vec = sum combo_j u_j
    };

    std::size_t dim_;
    std::uint8_t p_;
    std::vector<Row> rows_;
};

}  // namespace trinil::detail
