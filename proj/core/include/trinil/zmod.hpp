#pragma once

// Residue arithmetic in Z/mZ for moduli of the form 2^k * 3^l.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "trinil/error.hpp"

namespace trinil {

/// Largest modulus accepted; keeps every product inside 64 bits.
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

/// A validated modulus.  Moduli with primes other than 2 and 3 can be
/// represented (the classifiers need them) but are flagged inadmissible.
class Modulus {
public:
    /// Throws InvalidArgument unless 2 <= m <= kMaxModulus.
    static Modulus make(std::uint64_t m);

    [[nodiscard]] std::uint64_t m() const noexcept { return m_; }
    /// Exponent of 2 in m.
    [[nodiscard]] unsigned k() const noexcept { return k_; }
    /// Exponent of 3 in m.
    [[nodiscard]] unsigned l() const noexcept { return l_; }
    /// Product of the distinct primes dividing m.
    [[nodiscard]] std::uint64_t radical() const noexcept { return radical_; }
    /// True iff m has no prime factor other than 2 and 3.
    [[nodiscard]] bool admissible() const noexcept { return cofactor_ == 1; }
    /// Smallest prime factor of m other than 2 or 3, if any.
    [[nodiscard]] std::optional<std::uint64_t> offending_prime() const noexcept;
    /// max(k, l): every nilpotent residue satisfies a^t = 0 for this t.
    [[nodiscard]] unsigned nil_index() const noexcept { return k_ > l_ ? k_ : l_; }

    /// 2^k and 3^l (1 when the factor is absent).
    [[nodiscard]] std::uint64_t two_part() const noexcept;
    [[nodiscard]] std::uint64_t three_part() const noexcept;

    /// Throws InadmissibleModulus naming the offending prime.
    void require_admissible() const;

    friend bool operator==(const Modulus& a, const Modulus& b) noexcept { return a.m_ == b.m_; }

private:
    Modulus() = default;

    std::uint64_t m_ = 2;
    unsigned k_ = 1;
    unsigned l_ = 0;
    std::uint64_t radical_ = 2;
    std::uint64_t cofactor_ = 1;  // m / (2^k 3^l)
};

/// Canonical representative of a class in Z/mZ.
class Residue {
public:
    Residue(std::uint64_t value, const Modulus& mod)
        : mod_(mod), value_(value % mod.m()) {}
    /// Reduces a signed integer into [0, m).
    static Residue from_signed(std::int64_t value, const Modulus& mod);

    [[nodiscard]] std::uint64_t value() const noexcept { return value_; }
    [[nodiscard]] const Modulus& modulus() const noexcept { return mod_; }

    friend Residue operator+(const Residue& a, const Residue& b);
    friend Residue operator-(const Residue& a, const Residue& b);
    friend Residue operator*(const Residue& a, const Residue& b);
    friend Residue operator-(const Residue& a);
    friend bool operator==(const Residue& a, const Residue& b) noexcept {
        return a.mod_ == b.mod_ && a.value_ == b.value_;
    }

private:
    Modulus mod_;
    std::uint64_t value_;
};

/// Multiplicative inverse; throws NotAUnit when gcd(a, m) != 1.
Residue inverse(const Residue& a);
Residue power(const Residue& a, std::uint64_t exponent);

/// a is nilpotent iff it vanishes modulo the radical of m.
bool is_nilpotent(const Residue& a) noexcept;
bool is_tripotent(const Residue& a) noexcept;
bool is_idempotent(const Residue& a) noexcept;

struct ScalarSplit {
    Residue tripotent;
    Residue nilpotent;
};

/// a = e + w with e^3 = e and w nilpotent.  On the 2-adic side e is a mod 2;
/// on the 3-adic side e is 0, 1 or -1 according to a mod 3.
ScalarSplit trinil_decompose(const Residue& a);

/// Components of Z/mZ = Z/2^k x Z/3^l; an absent factor is left empty.
struct CrtParts {
    std::optional<Residue> two;
    std::optional<Residue> three;
};

CrtParts crt_split(const Residue& a);
/// Inverse of crt_split; absent components must match the modulus shape.
Residue crt_combine(const CrtParts& parts, const Modulus& mod);

/// Raw helpers shared by the matrix kernels.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept;
/// Inverse of a mod m, or nullopt when gcd(a, m) != 1.
std::optional<std::uint64_t> invmod(std::uint64_t a, std::uint64_t m) noexcept;
/// CRT on raw integers: the x in [0, m2*m3) with x = a2 (m2), x = a3 (m3).
std::uint64_t crt_pair(std::uint64_t a2, std::uint64_t m2, std::uint64_t a3, std::uint64_t m3) noexcept;

}  // namespace trinil
