#include "trinil/zmod.hpp"

#include <numeric>
#include <string>

namespace trinil {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    // Operands are < 2^31, so the product fits.
    return (a * b) % m;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept {
    std::uint64_t result = 1 % m;
    a %= m;
    while (e != 0) {
        if (e & 1U) result = mulmod(result, a, m);
        a = mulmod(a, a, m);
        e >>= 1U;
    }
    return result;
}

std::optional<std::uint64_t> invmod(std::uint64_t a, std::uint64_t m) noexcept {
    std::int64_t old_r = static_cast<std::int64_t>(a % m);
    std::int64_t r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1;
    std::int64_t s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1) {
        if (m == 1) return 0;
        return std::nullopt;
    }
    const auto mm = static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

std::uint64_t crt_pair(std::uint64_t a2, std::uint64_t m2, std::uint64_t a3, std::uint64_t m3) noexcept {
    // x = a2 + m2 * t with t = (a3 - a2) * m2^{-1} mod m3.
    const std::uint64_t inv = *invmod(m2 % m3, m3);
    const std::uint64_t diff = ((a3 % m3) + m3 - (a2 % m3)) % m3;
    const std::uint64_t t = mulmod(diff, inv, m3);
    return a2 + m2 * t;
}

// ---------------------------------------------------------------- Modulus

Modulus Modulus::make(std::uint64_t m) {
    if (m < 2 || m > kMaxModulus) {
        throw Error(ErrorCode::InvalidArgument,
                    "modulus must lie in [2, 2^31 - 1], got " + std::to_string(m));
    }
    Modulus mod;
    mod.m_ = m;
    mod.k_ = 0;
    mod.l_ = 0;
    std::uint64_t rest = m;
    while (rest % 2 == 0) {
        rest /= 2;
        ++mod.k_;
    }
    while (rest % 3 == 0) {
        rest /= 3;
        ++mod.l_;
    }
    mod.cofactor_ = rest;
    std::uint64_t radical = (mod.k_ ? 2 : 1) * (mod.l_ ? 3 : 1);
    for (std::uint64_t p = 5; p * p <= rest; p += 2) {
        if (rest % p != 0) continue;
        radical *= p;
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1) radical *= rest;
    mod.radical_ = radical;
    return mod;
}

std::optional<std::uint64_t> Modulus::offending_prime() const noexcept {
    if (cofactor_ == 1) return std::nullopt;
    for (std::uint64_t p = 5; p * p <= cofactor_; p += 2) {
        if (cofactor_ % p == 0) return p;
    }
    return cofactor_;
}

std::uint64_t Modulus::two_part() const noexcept { return std::uint64_t{1} << k_; }

std::uint64_t Modulus::three_part() const noexcept {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < l_; ++i) r *= 3;
    return r;
}

void Modulus::require_admissible() const {
    if (auto p = offending_prime()) {
        throw Error(ErrorCode::InadmissibleModulus,
                    "modulus " + std::to_string(m_) + " has prime factor " + std::to_string(*p) +
                        "; only moduli of the form 2^k * 3^l are supported");
    }
}

// ---------------------------------------------------------------- Residue

namespace {

void require_same(const Residue& a, const Residue& b) {
    if (!(a.modulus() == b.modulus())) {
        throw Error(ErrorCode::ModulusMismatch,
                    "residues modulo " + std::to_string(a.modulus().m()) + " and " +
                        std::to_string(b.modulus().m()));
    }
}

}  // namespace

Residue Residue::from_signed(std::int64_t value, const Modulus& mod) {
    const auto m = static_cast<std::int64_t>(mod.m());
    return Residue(static_cast<std::uint64_t>(((value % m) + m) % m), mod);
}

Residue operator+(const Residue& a, const Residue& b) {
    require_same(a, b);
    return Residue(a.value_ + b.value_, a.mod_);
}

Residue operator-(const Residue& a, const Residue& b) {
    require_same(a, b);
    return Residue(a.value_ + a.mod_.m() - b.value_, a.mod_);
}

Residue operator*(const Residue& a, const Residue& b) {
    require_same(a, b);
    return Residue(mulmod(a.value_, b.value_, a.mod_.m()), a.mod_);
}

Residue operator-(const Residue& a) { return Residue(a.mod_.m() - a.value_, a.mod_); }

Residue inverse(const Residue& a) {
    auto inv = invmod(a.value(), a.modulus().m());
    if (!inv) {
        throw Error(ErrorCode::NotAUnit,
                    std::to_string(a.value()) + " is not a unit modulo " +
                        std::to_string(a.modulus().m()) + " (gcd = " +
                        std::to_string(std::gcd(a.value(), a.modulus().m())) + ")");
    }
    return Residue(*inv, a.modulus());
}

Residue power(const Residue& a, std::uint64_t exponent) {
    return Residue(powmod(a.value(), exponent, a.modulus().m()), a.modulus());
}

bool is_nilpotent(const Residue& a) noexcept { return a.value() % a.modulus().radical() == 0; }

bool is_tripotent(const Residue& a) noexcept {
    const auto m = a.modulus().m();
    return powmod(a.value(), 3, m) == a.value();
}

bool is_idempotent(const Residue& a) noexcept {
    return mulmod(a.value(), a.value(), a.modulus().m()) == a.value();
}

ScalarSplit trinil_decompose(const Residue& a) {
    const Modulus& mod = a.modulus();
    mod.require_admissible();
    const std::uint64_t m2 = mod.two_part();
    const std::uint64_t m3 = mod.three_part();
    const std::uint64_t e2 = mod.k() ? a.value() % 2 : 0;
    std::uint64_t e3 = 0;
    if (mod.l()) {
        const std::uint64_t r = a.value() % 3;
        e3 = r == 2 ? m3 - 1 : r;
    }
    const std::uint64_t e = crt_pair(e2, m2, e3, m3);
    const Residue tri(e, mod);
    return {tri, a - tri};
}

CrtParts crt_split(const Residue& a) {
    const Modulus& mod = a.modulus();
    mod.require_admissible();
    CrtParts parts;
    if (mod.k()) parts.two.emplace(a.value(), Modulus::make(mod.two_part()));
    if (mod.l()) parts.three.emplace(a.value(), Modulus::make(mod.three_part()));
    return parts;
}

Residue crt_combine(const CrtParts& parts, const Modulus& mod) {
    mod.require_admissible();
    const std::uint64_t m2 = mod.two_part();
    const std::uint64_t m3 = mod.three_part();
    if (bool(parts.two) != (mod.k() > 0) || bool(parts.three) != (mod.l() > 0) ||
        (parts.two && parts.two->modulus().m() != m2) ||
        (parts.three && parts.three->modulus().m() != m3)) {
        throw Error(ErrorCode::ModulusMismatch,
                    "CRT components do not match modulus " + std::to_string(mod.m()));
    }
    const std::uint64_t a2 = parts.two ? parts.two->value() : 0;
    const std::uint64_t a3 = parts.three ? parts.three->value() : 0;
    return Residue(crt_pair(a2, m2, a3, m3), mod);
}

}  // namespace trinil
