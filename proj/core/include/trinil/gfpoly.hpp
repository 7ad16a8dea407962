#pragma once

// Dense univariate polynomials over GF(2) and GF(3).

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trinil {

/// Inverse of a nonzero element of GF(p), p in {2, 3}.
inline constexpr std::uint8_t gf_inv(std::uint8_t a, std::uint8_t p) noexcept {
    // Every nonzero element of GF(2) and GF(3) is its own inverse.
    (void)p;
    return a;
}

inline constexpr std::uint8_t gf_neg(std::uint8_t a, std::uint8_t p) noexcept {
    return static_cast<std::uint8_t>((p - a) % p);
}

/// Coefficients are stored low degree first with no trailing zeros; the zero
/// polynomial has an empty coefficient vector and degree -1.
class PolyGF {
public:
    explicit PolyGF(std::uint8_t p = 2) : p_(p) {}
    PolyGF(std::uint8_t p, std::vector<std::uint8_t> coeffs);

    static PolyGF constant(std::uint8_t p, std::uint8_t c) { return PolyGF(p, {c}); }
    static PolyGF x_power(std::uint8_t p, std::size_t degree);
    /// x + c.
    static PolyGF linear(std::uint8_t p, std::uint8_t c) { return PolyGF(p, {c, 1}); }
    /// x^n - c_{n-1} x^{n-1} - ... - c_0, the characteristic polynomial of the
    /// companion block with last column (c_0, ..., c_{n-1}).
    static PolyGF from_companion(std::uint8_t p, std::span<const std::uint8_t> coeffs);

    [[nodiscard]] std::uint8_t prime() const noexcept { return p_; }
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    [[nodiscard]] bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    [[nodiscard]] std::uint8_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    [[nodiscard]] const std::vector<std::uint8_t>& coeffs() const noexcept { return c_; }
    [[nodiscard]] std::uint8_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    /// Coefficient of x^{n-1} for a degree-n polynomial.
    [[nodiscard]] std::uint8_t subleading() const noexcept {
        return c_.size() >= 2 ? c_[c_.size() - 2] : 0;
    }

    /// The companion last column (c_0, ..., c_{n-1}); requires a monic polynomial.
    [[nodiscard]] std::vector<std::uint8_t> companion_coeffs() const;
    [[nodiscard]] PolyGF monic() const;
    /// q(x + c).
    [[nodiscard]] PolyGF shifted(std::uint8_t c) const;
    [[nodiscard]] PolyGF derivative() const;
    [[nodiscard]] std::uint8_t eval(std::uint8_t x) const noexcept;

    friend PolyGF operator+(const PolyGF& a, const PolyGF& b);
    friend PolyGF operator-(const PolyGF& a, const PolyGF& b);
    friend PolyGF operator*(const PolyGF& a, const PolyGF& b);
    friend bool operator==(const PolyGF& a, const PolyGF& b) noexcept {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }

    /// Lexicographic by degree, then coefficient vector read from the top.
    friend bool operator<(const PolyGF& a, const PolyGF& b) noexcept;

    [[nodiscard]] std::string to_string() const;

private:
    void trim() noexcept;

    std::uint8_t p_;
    std::vector<std::uint8_t> c_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<PolyGF, PolyGF> divmod(const PolyGF& a, const PolyGF& b);
PolyGF operator%(const PolyGF& a, const PolyGF& b);
PolyGF operator/(const PolyGF& a, const PolyGF& b);
/// Monic gcd (zero when both inputs are zero).
PolyGF gcd(const PolyGF& a, const PolyGF& b);
PolyGF lcm(const PolyGF& a, const PolyGF& b);

/// u, v with u*a + v*b = gcd(a, b) (monic).
struct Bezout {
    PolyGF g;
    PolyGF u;
    PolyGF v;
};
Bezout xgcd(const PolyGF& a, const PolyGF& b);

/// base^e mod modulus.
PolyGF powmod(const PolyGF& base, std::uint64_t e, const PolyGF& modulus);

}  // namespace trinil
