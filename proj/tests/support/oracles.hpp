#pragma once

// Reference implementations used only by tests.  None of these share code
// with the library's algorithms: determinants by cofactor expansion,
// irreducibles by sieving, nilpotency by plain powering.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "trinil/gfpoly.hpp"
#include "trinil/matrix.hpp"

namespace trinil::testing {

inline MatZ random_matz(std::mt19937_64& rng, std::size_t n, const Modulus& mod) {
    std::vector<std::int64_t> v(n * n);
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % mod.m());
    return MatZ::from_entries(n, mod, v);
}

inline MatGF random_matgf(std::mt19937_64& rng, std::size_t n, std::uint8_t p) {
    std::vector<std::uint8_t> v(n * n);
    for (auto& x : v) x = static_cast<std::uint8_t>(rng() % p);
    return MatGF::from_entries(n, p, v);
}

/// Every coefficient vector of length n over GF(p), in counting order.
inline std::vector<std::vector<std::uint8_t>> all_vectors(std::uint8_t p, std::size_t n) {
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> v(n, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = 0;
        while (i < n && ++v[i] == p) v[i++] = 0;
        if (i == n) break;
    }
    return out;
}

// Polynomials as plain coefficient vectors (low first) over GF(p).
using RawPoly = std::vector<int>;

inline RawPoly raw_trim(RawPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline RawPoly raw_mul(const RawPoly& a, const RawPoly& b, int p) {
    if (a.empty() || b.empty()) return {};
    RawPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return raw_trim(c);
}

inline RawPoly raw_add(const RawPoly& a, const RawPoly& b, int p, int sign = 1) {
    RawPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int x = i < a.size() ? a[i] : 0;
        const int y = i < b.size() ? b[i] : 0;
        c[i] = ((x + sign * y) % p + p) % p;
    }
    return raw_trim(c);
}

/// det(xI - A) by cofactor expansion along the first row.
inline RawPoly det_poly(const std::vector<std::vector<RawPoly>>& m, int p) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    RawPoly total;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].empty()) continue;
        std::vector<std::vector<RawPoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<RawPoly> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) row.push_back(m[i][c]);
            }
            minor.push_back(std::move(row));
        }
        total = raw_add(total, raw_mul(m[0][j], det_poly(minor, p), p), p, j % 2 == 0 ? 1 : -1);
    }
    return total;
}

inline PolyGF char_poly_by_cofactors(const MatGF& a) {
    const int p = a.prime();
    const std::size_t n = a.size();
    std::vector<std::vector<RawPoly>> m(n, std::vector<RawPoly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const int neg = (p - a(i, j)) % p;
            m[i][j] = i == j ? raw_trim({neg, 1}) : raw_trim({neg});
        }
    }
    const RawPoly d = det_poly(m, p);
    return PolyGF(static_cast<std::uint8_t>(p), std::vector<std::uint8_t>(d.begin(), d.end()));
}

/// All monic irreducibles of degree <= max_degree, by sieving out products.
inline std::vector<PolyGF> irreducibles_up_to(std::uint8_t p, std::size_t max_degree) {
    std::vector<PolyGF> irr;
    for (std::size_t d = 1; d <= max_degree; ++d) {
        for (auto low : all_vectors(p, d)) {
            low.push_back(1);
            const PolyGF q(p, low);
            bool reducible = false;
            for (const auto& f : irr) {
                if (2 * static_cast<std::size_t>(f.degree()) > d) break;
                if ((q % f).is_zero()) {
                    reducible = true;
                    break;
                }
            }
            if (!reducible) irr.push_back(q);
        }
    }
    return irr;
}

/// Trial division by irreducibles in increasing order.
inline std::vector<std::pair<PolyGF, unsigned>> factor_by_trial_division(PolyGF q) {
    std::vector<std::pair<PolyGF, unsigned>> out;
    for (const auto& f : irreducibles_up_to(q.prime(), static_cast<std::size_t>(q.degree()))) {
        if (q.degree() < 1) break;
        unsigned e = 0;
        while ((q % f).is_zero()) {
            q = q / f;
            ++e;
        }
        if (e) out.emplace_back(f, e);
    }
    return out;
}

/// A^t for t up to n * bits(m), plain repeated multiplication.
inline bool nilpotent_by_powering(const MatZ& a) {
    MatZ x = a;
    const std::uint64_t bound = a.size() * 64;
    for (std::uint64_t t = 0; t < bound; ++t) {
        if (x.is_zero()) return true;
        x = x * a;
    }
    return false;
}

inline bool nilpotent_by_powering(const MatGF& a) {
    MatGF x = a;
    for (std::size_t t = 0; t <= a.size(); ++t) {
        if (x.is_zero()) return true;
        x = x * a;
    }
    return false;
}

inline std::vector<std::uint64_t> admissible_moduli(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t a = 1; a <= limit; a *= 2) {
        for (std::uint64_t b = a; b <= limit; b *= 3) {
            if (b >= 2) out.push_back(b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace trinil::testing
