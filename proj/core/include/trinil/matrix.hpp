#pragma once

// Dense exact matrices over Z/mZ (MatZ) and over GF(2), GF(3) (MatGF).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trinil/gfpoly.hpp"
#include "trinil/zmod.hpp"

namespace trinil {

class MatGF;

/// n x n matrix of residues mod m, row-major.
class MatZ {
public:
    static MatZ zero(std::size_t n, const Modulus& mod);
    static MatZ identity(std::size_t n, const Modulus& mod);
    static MatZ scalar(std::size_t n, std::int64_t c, const Modulus& mod);
    /// Row-major entries; signed values are reduced into [0, m).
    static MatZ from_entries(std::size_t n, const Modulus& mod, std::span<const std::int64_t> entries);
    static MatZ from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows, const Modulus& mod);
    /// Entrywise lift of a field matrix with representatives in [0, p).
    static MatZ lift(const MatGF& a, const Modulus& mod);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] const Modulus& modulus() const noexcept { return mod_; }
    [[nodiscard]] std::uint64_t operator()(std::size_t i, std::size_t j) const noexcept {
        return a_[i * n_ + j];
    }
    void set(std::size_t i, std::size_t j, std::int64_t value);
    [[nodiscard]] std::span<const std::uint32_t> entries() const noexcept { return a_; }
    [[nodiscard]] bool is_zero() const noexcept;

    friend MatZ operator+(const MatZ& a, const MatZ& b);
    friend MatZ operator-(const MatZ& a, const MatZ& b);
    friend MatZ operator*(const MatZ& a, const MatZ& b);
    friend MatZ operator*(std::int64_t c, const MatZ& a);
    friend bool operator==(const MatZ& a, const MatZ& b) noexcept {
        return a.mod_ == b.mod_ && a.n_ == b.n_ && a.a_ == b.a_;
    }

    [[nodiscard]] std::string to_string() const;

private:
    MatZ(std::size_t n, const Modulus& mod) : n_(n), mod_(mod), a_(n * n, 0) {}

    std::size_t n_;
    Modulus mod_;
    std::vector<std::uint32_t> a_;
};

/// Square matrix over GF(p), p in {2, 3}.
class MatGF {
public:
    static MatGF zero(std::size_t n, std::uint8_t p);
    static MatGF identity(std::size_t n, std::uint8_t p);
    static MatGF from_rows(std::initializer_list<std::initializer_list<int>> rows, std::uint8_t p);
    static MatGF from_entries(std::size_t n, std::uint8_t p, std::span<const std::uint8_t> entries);
    /// Companion block in the fixed orientation: ones on the subdiagonal and
    /// (c_0, ..., c_{n-1}) down the last column.
    static MatGF companion(std::uint8_t p, std::span<const std::uint8_t> coeffs);
    /// Block-diagonal assembly.
    static MatGF block_diagonal(std::span<const MatGF> blocks);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] std::uint8_t prime() const noexcept { return p_; }
    [[nodiscard]] std::uint8_t operator()(std::size_t i, std::size_t j) const noexcept {
        return a_[i * n_ + j];
    }
    void set(std::size_t i, std::size_t j, int value) noexcept {
        a_[i * n_ + j] = static_cast<std::uint8_t>(((value % p_) + p_) % p_);
    }
    [[nodiscard]] std::span<const std::uint8_t> entries() const noexcept { return a_; }
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] MatGF transposed() const;
    /// Rows/columns [offset, offset + size) as a square submatrix.
    [[nodiscard]] MatGF principal_block(std::size_t offset, std::size_t size) const;

    friend MatGF operator+(const MatGF& a, const MatGF& b);
    friend MatGF operator-(const MatGF& a, const MatGF& b);
    friend MatGF operator*(const MatGF& a, const MatGF& b);
    friend bool operator==(const MatGF& a, const MatGF& b) noexcept {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.a_ == b.a_;
    }

    [[nodiscard]] std::string to_string() const;

private:
    MatGF(std::size_t n, std::uint8_t p) : n_(n), p_(p), a_(n * n, 0) {}

    std::size_t n_;
    std::uint8_t p_;
    std::vector<std::uint8_t> a_;
};

// ------------------------------------------------------------ arithmetic

MatZ pow(const MatZ& a, std::uint64_t t);
MatGF pow(const MatGF& a, std::uint64_t t);
/// f(A) by Horner with integer coefficients, lowest degree first.
MatZ poly_eval(std::span<const std::int64_t> coeffs, const MatZ& a);
MatGF poly_eval(const PolyGF& f, const MatGF& a);

bool is_tripotent(const MatZ& a);
bool is_idempotent(const MatZ& a);
bool is_tripotent(const MatGF& a);
bool is_idempotent(const MatGF& a);

struct NilpotencyWitness {
    bool nilpotent = false;
    /// n * max(k, l) when nilpotent; A^exponent = 0 has been checked.
    std::uint64_t exponent = 0;
};

/// Decides nilpotency through the residue fields and re-verifies the bound
/// A^{n max(k,l)} = 0 by repeated squaring.  Requires an admissible modulus.
NilpotencyWitness is_nilpotent(const MatZ& a);
/// Over a field: A^n = 0.
bool is_nilpotent(const MatGF& a);

// ------------------------------------------------------- reduction and CRT

/// Entrywise reduction mod p; p must divide m.
MatGF reduce(const MatZ& a, std::uint8_t p);

struct MatCrtParts {
    std::optional<MatZ> two;    // over Z/2^k
    std::optional<MatZ> three;  // over Z/3^l
};

MatCrtParts crt_split(const MatZ& a);
MatZ crt_combine(const MatCrtParts& parts, const Modulus& mod);

/// Characteristic polynomial det(xI - A) via Hessenberg reduction.
PolyGF char_poly(const MatGF& a);

}  // namespace trinil
