#include "gf_dense.hpp"

#include <algorithm>

namespace trinil::detail {

namespace {

std::uint8_t md(int v, std::uint8_t p) { return static_cast<std::uint8_t>(((v % p) + p) % p); }

// v -= f * w
void axpy(GfVec& v, std::uint8_t f, const GfVec& w, std::uint8_t p) {
    if (f == 0) return;
    if (v.size() < w.size()) v.resize(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) v[i] = md(v[i] - f * w[i], p);
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<GfVec>& rows, std::size_t ncols, std::uint8_t p) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const std::uint8_t inv = gf_inv(rows[r][c], p);
        for (auto& x : rows[r]) x = md(x * inv, p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r) axpy(rows[i], rows[i][c], rows[r], p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

GfVec unit_vector(std::size_t n, std::size_t i) {
    GfVec v(n, 0);
    v[i] = 1;
    return v;
}

GfVec apply(const MatGF& a, const GfVec& v) {
    const std::size_t n = a.size();
    GfVec out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        unsigned acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * v[j];
        out[i] = static_cast<std::uint8_t>(acc % a.prime());
    }
    return out;
}

GfVec apply_left(const GfVec& y, const MatGF& a) {
    const std::size_t n = a.size();
    GfVec out(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        unsigned acc = 0;
        for (std::size_t i = 0; i < n; ++i) acc += y[i] * a(i, j);
        out[j] = static_cast<std::uint8_t>(acc % a.prime());
    }
    return out;
}

bool is_zero(const GfVec& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
}

MatGF from_columns(const std::vector<GfVec>& columns, std::uint8_t p) {
    const std::size_t n = columns.size();
    MatGF out = MatGF::zero(n, p);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) out.set(i, j, columns[j][i]);
    return out;
}

std::vector<GfVec> columns_of(const MatGF& a) {
    std::vector<GfVec> cols(a.size(), GfVec(a.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) cols[j][i] = a(i, j);
    return cols;
}

std::optional<MatGF> inverse(const MatGF& a) {
    const std::size_t n = a.size();
    const std::uint8_t p = a.prime();
    std::vector<GfVec> rows(n, GfVec(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
        rows[i][n + i] = 1;
    }
    const auto pivots = rref(rows, n, p);
    if (pivots.size() != n) return std::nullopt;
    MatGF out = MatGF::zero(n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, rows[i][n + j]);
    return out;
}

std::vector<GfVec> nullspace(const std::vector<GfVec>& rows, std::size_t ncols, std::uint8_t p) {
    std::vector<GfVec> work(rows);
    for (auto& r : work) r.resize(ncols, 0);
    const auto pivots = rref(work, ncols, p);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<GfVec> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        GfVec v(ncols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = md(-work[r][f], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<GfVec> solve(const std::vector<GfVec>& rows, const GfVec& rhs, std::size_t ncols, std::uint8_t p) {
    std::vector<GfVec> work(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        work[i] = rows[i];
        work[i].resize(ncols, 0);
        work[i].push_back(rhs[i]);
    }
    const auto pivots = rref(work, ncols, p);
    for (std::size_t r = pivots.size(); r < work.size(); ++r) {
        if (work[r][ncols] != 0) return std::nullopt;
    }
    GfVec x(ncols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = work[r][ncols];
    return x;
}

std::optional<GfVec> SpanTracker::insert(const GfVec& v) {
    GfVec cur(v);
    cur.resize(dim_, 0);
    GfVec combo(rows_.size() + 1, 0);
    for (const auto& row : rows_) {
        const std::uint8_t x = cur[row.pivot];
        if (x == 0) continue;
        const std::uint8_t f = md(x * gf_inv(row.vec[row.pivot], p_), p_);
        axpy(cur, f, row.vec, p_);
        axpy(combo, f, row.combo, p_);
    }
    // cur = v - sum f_i r_i, and combo = -sum f_i combo_i.
    const auto it = std::find_if(cur.begin(), cur.end(), [](std::uint8_t x) { return x != 0; });
    if (it == cur.end()) {
        combo.pop_back();
        for (auto& c : combo) c = md(-c, p_);
        return combo;
    }
    combo.back() = 1;
    const auto pivot = static_cast<std::size_t>(it - cur.begin());
    rows_.push_back({std::move(cur), pivot, std::move(combo)});
    return std::nullopt;
}

bool SpanTracker::contains(const GfVec& v) const {
    GfVec cur(v);
    cur.resize(dim_, 0);
    for (const auto& row : rows_) {
        const std::uint8_t x = cur[row.pivot];
        if (x != 0) axpy(cur, md(x * gf_inv(row.vec[row.pivot], p_), p_), row.vec, p_);
    }
    return is_zero(cur);
}

}  // namespace trinil::detail
