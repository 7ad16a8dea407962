#include "trinil/gfpoly.hpp"

#include <algorithm>

#include "trinil/error.hpp"

namespace trinil {

namespace {

void require_same_field(const PolyGF& a, const PolyGF& b) {
    if (a.prime() != b.prime()) {
        throw Error(ErrorCode::ModulusMismatch, "polynomials over different fields");
    }
}

}  // namespace

PolyGF::PolyGF(std::uint8_t p, std::vector<std::uint8_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= p_;
    trim();
}

void PolyGF::trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyGF PolyGF::x_power(std::uint8_t p, std::size_t degree) {
    std::vector<std::uint8_t> c(degree + 1, 0);
    c.back() = 1;
    return PolyGF(p, std::move(c));
}

PolyGF PolyGF::from_companion(std::uint8_t p, std::span<const std::uint8_t> coeffs) {
    std::vector<std::uint8_t> c(coeffs.size() + 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = gf_neg(coeffs[i] % p, p);
    c[coeffs.size()] = 1;
    return PolyGF(p, std::move(c));
}

std::vector<std::uint8_t> PolyGF::companion_coeffs() const {
    if (!is_monic()) throw Error(ErrorCode::InvalidArgument, "companion of a non-monic polynomial");
    std::vector<std::uint8_t> out(c_.begin(), c_.end() - 1);
    for (auto& c : out) c = gf_neg(c, p_);
    return out;
}

PolyGF PolyGF::monic() const {
    if (c_.empty()) return *this;
    const std::uint8_t inv = gf_inv(c_.back(), p_);
    std::vector<std::uint8_t> c(c_);
    for (auto& x : c) x = static_cast<std::uint8_t>((x * inv) % p_);
    return PolyGF(p_, std::move(c));
}

PolyGF PolyGF::shifted(std::uint8_t c) const {
    PolyGF result(p_);
    const PolyGF step = linear(p_, c);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        result = result * step + constant(p_, *it);
    }
    return result;
}

PolyGF PolyGF::derivative() const {
    if (c_.size() <= 1) return PolyGF(p_);
    std::vector<std::uint8_t> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<std::uint8_t>((c_[i] * (i % p_)) % p_);
    return PolyGF(p_, std::move(d));
}

std::uint8_t PolyGF::eval(std::uint8_t x) const noexcept {
    unsigned acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % p_;
    return static_cast<std::uint8_t>(acc);
}

PolyGF operator+(const PolyGF& a, const PolyGF& b) {
    require_same_field(a, b);
    std::vector<std::uint8_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<std::uint8_t>((a.coeff(i) + b.coeff(i)) % a.p_);
    return PolyGF(a.p_, std::move(c));
}

PolyGF operator-(const PolyGF& a, const PolyGF& b) {
    require_same_field(a, b);
    std::vector<std::uint8_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = static_cast<std::uint8_t>((a.coeff(i) + a.p_ - b.coeff(i)) % a.p_);
    }
    return PolyGF(a.p_, std::move(c));
}

PolyGF operator*(const PolyGF& a, const PolyGF& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return PolyGF(a.p_);
    std::vector<unsigned> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i] * b.c_[j];
    }
    std::vector<std::uint8_t> c(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<std::uint8_t>(acc[i] % a.p_);
    return PolyGF(a.p_, std::move(c));
}

bool operator<(const PolyGF& a, const PolyGF& b) noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::string PolyGF::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const unsigned c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (c != 1 || i == 0) out += std::to_string(c);
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::pair<PolyGF, PolyGF> divmod(const PolyGF& a, const PolyGF& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
    const std::uint8_t p = a.prime();
    if (a.degree() < b.degree()) return {PolyGF(p), a};
    std::vector<std::uint8_t> rem(a.coeffs());
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    std::vector<std::uint8_t> quo(rem.size() - db, 0);
    const std::uint8_t lead_inv = gf_inv(d.back(), p);
    for (std::size_t i = rem.size(); i-- > db;) {
        const std::uint8_t q = static_cast<std::uint8_t>((rem[i] * lead_inv) % p);
        if (q == 0) continue;
        quo[i - db] = q;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[i - db + j] = static_cast<std::uint8_t>((rem[i - db + j] + p * p - q * d[j]) % p);
        }
    }
    rem.resize(db);
    return {PolyGF(p, std::move(quo)), PolyGF(p, std::move(rem))};
}

PolyGF operator%(const PolyGF& a, const PolyGF& b) { return divmod(a, b).second; }
PolyGF operator/(const PolyGF& a, const PolyGF& b) { return divmod(a, b).first; }

PolyGF gcd(const PolyGF& a, const PolyGF& b) {
    PolyGF x = a;
    PolyGF y = b;
    while (!y.is_zero()) {
        PolyGF r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

PolyGF lcm(const PolyGF& a, const PolyGF& b) {
    if (a.is_zero() || b.is_zero()) return PolyGF(a.prime());
    return ((a * b) / gcd(a, b)).monic();
}

Bezout xgcd(const PolyGF& a, const PolyGF& b) {
    const std::uint8_t p = a.prime();
    PolyGF r0 = a, r1 = b;
    PolyGF s0 = PolyGF::constant(p, 1), s1(p);
    PolyGF t0(p), t1 = PolyGF::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const PolyGF scale = PolyGF::constant(p, gf_inv(r0.leading(), p));
    return {r0 * scale, s0 * scale, t0 * scale};
}

PolyGF powmod(const PolyGF& base, std::uint64_t e, const PolyGF& modulus) {
    PolyGF result = PolyGF::constant(base.prime(), 1) % modulus;
    PolyGF b = base % modulus;
    while (e != 0) {
        if (e & 1U) result = (result * b) % modulus;
        b = (b * b) % modulus;
        e >>= 1U;
    }
    return result;
}

}  // namespace trinil
