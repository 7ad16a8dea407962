#include "trinil/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace trinil {

namespace {

void require_compatible(const MatZ& a, const MatZ& b) {
    if (!(a.modulus() == b.modulus())) {
        throw Error(ErrorCode::ModulusMismatch,
                    "matrices modulo " + std::to_string(a.modulus().m()) + " and " +
                        std::to_string(b.modulus().m()));
    }
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "matrices of size " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
}

void require_compatible(const MatGF& a, const MatGF& b) {
    if (a.prime() != b.prime()) throw Error(ErrorCode::ModulusMismatch, "matrices over different fields");
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "matrices of size " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
}

std::uint32_t reduce_signed(std::int64_t v, std::uint64_t m) {
    const auto mm = static_cast<std::int64_t>(m);
    return static_cast<std::uint32_t>(((v % mm) + mm) % mm);
}

}  // namespace

// ------------------------------------------------------------------ MatZ

MatZ MatZ::zero(std::size_t n, const Modulus& mod) {
    if (n == 0) throw Error(ErrorCode::DimensionMismatch, "matrix dimension must be at least 1");
    return MatZ(n, mod);
}

MatZ MatZ::identity(std::size_t n, const Modulus& mod) { return scalar(n, 1, mod); }

MatZ MatZ::scalar(std::size_t n, std::int64_t c, const Modulus& mod) {
    MatZ out = zero(n, mod);
    const auto v = reduce_signed(c, mod.m());
    for (std::size_t i = 0; i < n; ++i) out.a_[i * n + i] = v;
    return out;
}

MatZ MatZ::from_entries(std::size_t n, const Modulus& mod, std::span<const std::int64_t> entries) {
    if (entries.size() != n * n) {
        throw Error(ErrorCode::DimensionMismatch,
                    "expected " + std::to_string(n * n) + " entries, got " + std::to_string(entries.size()));
    }
    MatZ out = zero(n, mod);
    std::transform(entries.begin(), entries.end(), out.a_.begin(),
                   [&](std::int64_t v) { return reduce_signed(v, mod.m()); });
    return out;
}

MatZ MatZ::from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows, const Modulus& mod) {
    const std::size_t n = rows.size();
    std::vector<std::int64_t> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "matrix rows must form a square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_entries(n, mod, flat);
}

MatZ MatZ::lift(const MatGF& a, const Modulus& mod) {
    MatZ out = zero(a.size(), mod);
    std::copy(a.entries().begin(), a.entries().end(), out.a_.begin());
    return out;
}

void MatZ::set(std::size_t i, std::size_t j, std::int64_t value) { a_[i * n_ + j] = reduce_signed(value, mod_.m()); }

bool MatZ::is_zero() const noexcept {
    return std::all_of(a_.begin(), a_.end(), [](std::uint32_t v) { return v == 0; });
}

MatZ operator+(const MatZ& a, const MatZ& b) {
    require_compatible(a, b);
    MatZ out(a.n_, a.mod_);
    const std::uint64_t m = a.mod_.m();
    for (std::size_t i = 0; i < a.a_.size(); ++i) {
        out.a_[i] = static_cast<std::uint32_t>((std::uint64_t{a.a_[i]} + b.a_[i]) % m);
    }
    return out;
}

MatZ operator-(const MatZ& a, const MatZ& b) {
    require_compatible(a, b);
    MatZ out(a.n_, a.mod_);
    const std::uint64_t m = a.mod_.m();
    for (std::size_t i = 0; i < a.a_.size(); ++i) {
        out.a_[i] = static_cast<std::uint32_t>((std::uint64_t{a.a_[i]} + m - b.a_[i]) % m);
    }
    return out;
}

MatZ operator*(const MatZ& a, const MatZ& b) {
    require_compatible(a, b);
    const std::size_t n = a.n_;
    const std::uint64_t m = a.mod_.m();
    MatZ out(n, a.mod_);
    // When n (m-1)^2 fits in 64 bits, accumulate a whole row before reducing.
    const std::uint64_t sq = (m - 1) * (m - 1);
    const bool lazy = sq == 0 || n <= UINT64_MAX / sq;
    std::vector<std::uint64_t> acc(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t t = 0; t < n; ++t) {
            const std::uint64_t x = a.a_[i * n + t];
            if (x == 0) continue;
            const std::uint32_t* brow = &b.a_[t * n];
            if (lazy) {
                for (std::size_t j = 0; j < n; ++j) acc[j] += x * brow[j];
            } else {
                for (std::size_t j = 0; j < n; ++j) acc[j] = (acc[j] + x * brow[j]) % m;
            }
        }
        for (std::size_t j = 0; j < n; ++j) out.a_[i * n + j] = static_cast<std::uint32_t>(acc[j] % m);
    }
    return out;
}

MatZ operator*(std::int64_t c, const MatZ& a) {
    MatZ out(a.n_, a.mod_);
    const std::uint64_t m = a.mod_.m();
    const std::uint64_t cc = reduce_signed(c, m);
    for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = static_cast<std::uint32_t>(mulmod(cc, a.a_[i], m));
    return out;
}

std::string MatZ::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
        os << (i ? "\n[" : "[");
        for (std::size_t j = 0; j < n_; ++j) os << (j ? " " : "") << a_[i * n_ + j];
        os << "]";
    }
    os << " mod " << mod_.m();
    return os.str();
}

// ----------------------------------------------------------------- MatGF

MatGF MatGF::zero(std::size_t n, std::uint8_t p) {
    if (p != 2 && p != 3) throw Error(ErrorCode::InvalidArgument, "field matrices require p in {2, 3}");
    return MatGF(n, p);
}

MatGF MatGF::identity(std::size_t n, std::uint8_t p) {
    MatGF out = zero(n, p);
    for (std::size_t i = 0; i < n; ++i) out.a_[i * n + i] = 1;
    return out;
}

MatGF MatGF::from_rows(std::initializer_list<std::initializer_list<int>> rows, std::uint8_t p) {
    const std::size_t n = rows.size();
    MatGF out = zero(n, p);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "matrix rows must form a square");
        std::size_t j = 0;
        for (int v : row) out.set(i, j++, v);
        ++i;
    }
    return out;
}

MatGF MatGF::from_entries(std::size_t n, std::uint8_t p, std::span<const std::uint8_t> entries) {
    if (entries.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "entry count does not match dimension");
    MatGF out = zero(n, p);
    for (std::size_t i = 0; i < entries.size(); ++i) out.a_[i] = entries[i] % p;
    return out;
}

MatGF MatGF::companion(std::uint8_t p, std::span<const std::uint8_t> coeffs) {
    const std::size_t n = coeffs.size();
    MatGF out = zero(n, p);
    for (std::size_t i = 1; i < n; ++i) out.a_[i * n + i - 1] = 1;
    for (std::size_t i = 0; i < n; ++i) out.a_[i * n + n - 1] = coeffs[i] % p;
    return out;
}

MatGF MatGF::block_diagonal(std::span<const MatGF> blocks) {
    if (blocks.empty()) throw Error(ErrorCode::ShapeMismatch, "no blocks to assemble");
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (b.p_ != blocks.front().p_) throw Error(ErrorCode::ModulusMismatch, "blocks over different fields");
        n += b.n_;
    }
    MatGF out = zero(n, blocks.front().p_);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.n_; ++i)
            for (std::size_t j = 0; j < b.n_; ++j) out.a_[(off + i) * n + off + j] = b(i, j);
        off += b.n_;
    }
    return out;
}

bool MatGF::is_zero() const noexcept {
    return std::all_of(a_.begin(), a_.end(), [](std::uint8_t v) { return v == 0; });
}

MatGF MatGF::transposed() const {
    MatGF out(n_, p_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out.a_[j * n_ + i] = a_[i * n_ + j];
    return out;
}

MatGF MatGF::principal_block(std::size_t offset, std::size_t size) const {
    if (offset + size > n_) throw Error(ErrorCode::ShapeMismatch, "principal block out of range");
    MatGF out(size, p_);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) out.a_[i * size + j] = a_[(offset + i) * n_ + offset + j];
    return out;
}

MatGF operator+(const MatGF& a, const MatGF& b) {
    require_compatible(a, b);
    MatGF out(a.n_, a.p_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = static_cast<std::uint8_t>((a.a_[i] + b.a_[i]) % a.p_);
    return out;
}

MatGF operator-(const MatGF& a, const MatGF& b) {
    require_compatible(a, b);
    MatGF out(a.n_, a.p_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) {
        out.a_[i] = static_cast<std::uint8_t>((a.a_[i] + a.p_ - b.a_[i]) % a.p_);
    }
    return out;
}

MatGF operator*(const MatGF& a, const MatGF& b) {
    require_compatible(a, b);
    const std::size_t n = a.n_;
    MatGF out(n, a.p_);
    std::vector<unsigned> acc(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(acc.begin(), acc.end(), 0U);
        for (std::size_t t = 0; t < n; ++t) {
            const unsigned x = a.a_[i * n + t];
            if (x == 0) continue;
            const std::uint8_t* brow = &b.a_[t * n];
            for (std::size_t j = 0; j < n; ++j) acc[j] += x * brow[j];
        }
        for (std::size_t j = 0; j < n; ++j) out.a_[i * n + j] = static_cast<std::uint8_t>(acc[j] % a.p_);
    }
    return out;
}

std::string MatGF::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
        os << (i ? "\n[" : "[");
        for (std::size_t j = 0; j < n_; ++j) os << (j ? " " : "") << int(a_[i * n_ + j]);
        os << "]";
    }
    os << " over GF(" << int(p_) << ")";
    return os.str();
}

// ------------------------------------------------------------ arithmetic

namespace {

template <typename Mat>
Mat pow_impl(Mat base, std::uint64_t t, Mat result) {
    while (t != 0) {
        if (t & 1U) result = result * base;
        t >>= 1U;
        if (t != 0) base = base * base;
    }
    return result;
}

}  // namespace

MatZ pow(const MatZ& a, std::uint64_t t) { return pow_impl(a, t, MatZ::identity(a.size(), a.modulus())); }

MatGF pow(const MatGF& a, std::uint64_t t) { return pow_impl(a, t, MatGF::identity(a.size(), a.prime())); }

MatZ poly_eval(std::span<const std::int64_t> coeffs, const MatZ& a) {
    MatZ acc = MatZ::zero(a.size(), a.modulus());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * a + MatZ::scalar(a.size(), *it, a.modulus());
    }
    return acc;
}

MatGF poly_eval(const PolyGF& f, const MatGF& a) {
    if (f.prime() != a.prime()) throw Error(ErrorCode::ModulusMismatch, "polynomial and matrix over different fields");
    MatGF acc = MatGF::zero(a.size(), a.prime());
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * a;
        for (std::size_t i = 0; i < a.size(); ++i) acc.set(i, i, acc(i, i) + *it);
    }
    return acc;
}

bool is_tripotent(const MatZ& a) { return a * a * a == a; }
bool is_idempotent(const MatZ& a) { return a * a == a; }
bool is_tripotent(const MatGF& a) { return a * a * a == a; }
bool is_idempotent(const MatGF& a) { return a * a == a; }

bool is_nilpotent(const MatGF& a) { return pow(a, a.size()).is_zero(); }

NilpotencyWitness is_nilpotent(const MatZ& a) {
    const Modulus& mod = a.modulus();
    mod.require_admissible();
    if (mod.k() && !is_nilpotent(reduce(a, 2))) return {};
    if (mod.l() && !is_nilpotent(reduce(a, 3))) return {};
    const std::uint64_t exponent = a.size() * mod.nil_index();
    if (!pow(a, exponent).is_zero()) {
        throw Error(ErrorCode::InternalVerificationFailure,
                    "residue-field nilpotent matrix failed the bound A^" + std::to_string(exponent) + " = 0");
    }
    return {true, exponent};
}

// ------------------------------------------------------- reduction and CRT

MatGF reduce(const MatZ& a, std::uint8_t p) {
    if (a.modulus().m() % p != 0) {
        throw Error(ErrorCode::ModulusMismatch,
                    std::to_string(int(p)) + " does not divide " + std::to_string(a.modulus().m()));
    }
    MatGF out = MatGF::zero(a.size(), p);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out.set(i, j, static_cast<int>(a(i, j) % p));
    return out;
}

MatCrtParts crt_split(const MatZ& a) {
    const Modulus& mod = a.modulus();
    mod.require_admissible();
    MatCrtParts parts;
    const std::size_t n = a.size();
    std::vector<std::int64_t> flat(a.entries().begin(), a.entries().end());
    if (mod.k()) parts.two = MatZ::from_entries(n, Modulus::make(mod.two_part()), flat);
    if (mod.l()) parts.three = MatZ::from_entries(n, Modulus::make(mod.three_part()), flat);
    return parts;
}

MatZ crt_combine(const MatCrtParts& parts, const Modulus& mod) {
    mod.require_admissible();
    const std::uint64_t m2 = mod.two_part();
    const std::uint64_t m3 = mod.three_part();
    if (bool(parts.two) != (mod.k() > 0) || bool(parts.three) != (mod.l() > 0) ||
        (parts.two && parts.two->modulus().m() != m2) || (parts.three && parts.three->modulus().m() != m3)) {
        throw Error(ErrorCode::ModulusMismatch, "CRT components do not match modulus " + std::to_string(mod.m()));
    }
    if (parts.two && parts.three && parts.two->size() != parts.three->size()) {
        throw Error(ErrorCode::DimensionMismatch, "CRT components of different sizes");
    }
    const std::size_t n = parts.two ? parts.two->size() : parts.three->size();
    std::vector<std::int64_t> flat(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
        const std::uint64_t a2 = parts.two ? parts.two->entries()[i] : 0;
        const std::uint64_t a3 = parts.three ? parts.three->entries()[i] : 0;
        flat[i] = static_cast<std::int64_t>(crt_pair(a2, m2, a3, m3));
    }
    return MatZ::from_entries(n, mod, flat);
}

// --------------------------------------------------- characteristic poly

PolyGF char_poly(const MatGF& a) {
    const std::size_t n = a.size();
    const std::uint8_t p = a.prime();
    // Working copy reduced to upper Hessenberg form by elementary similarities.
    std::vector<std::vector<int>> h(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h[i][j] = a(i, j);
    const auto md = [p](int v) { return ((v % p) + p) % p; };

    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t r = j + 1;
        while (r < n && h[r][j] == 0) ++r;
        if (r == n) continue;
        if (r != j + 1) {
            std::swap(h[r], h[j + 1]);
            for (std::size_t i = 0; i < n; ++i) std::swap(h[i][r], h[i][j + 1]);
        }
        const int inv = gf_inv(static_cast<std::uint8_t>(h[j + 1][j]), p);
        for (std::size_t i = j + 2; i < n; ++i) {
            const int u = md(h[i][j] * inv);
            if (u == 0) continue;
            for (std::size_t c = 0; c < n; ++c) h[i][c] = md(h[i][c] - u * h[j + 1][c]);
            for (std::size_t rr = 0; rr < n; ++rr) h[rr][j + 1] = md(h[rr][j + 1] + u * h[rr][i]);
        }
    }

    // p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_ik (prod_{t=i+1..k} h_{t,t-1}) p_i
    std::vector<PolyGF> polys;
    polys.reserve(n + 1);
    polys.emplace_back(PolyGF::constant(p, 1));
    for (std::size_t k = 0; k < n; ++k) {
        PolyGF next = PolyGF::linear(p, static_cast<std::uint8_t>(md(-h[k][k]))) * polys[k];
        int prod = 1;
        for (std::size_t i = k; i-- > 0;) {
            prod = md(prod * h[i + 1][i]);
            if (prod == 0) break;
            const int coeff = md(h[i][k] * prod);
            if (coeff != 0) next = next - PolyGF::constant(p, static_cast<std::uint8_t>(coeff)) * polys[i];
        }
        polys.push_back(std::move(next));
    }
    return polys.back();
}

}  // namespace trinil
