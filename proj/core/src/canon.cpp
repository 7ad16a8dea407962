#include "trinil/canon.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "gf_dense.hpp"

namespace trinil {

using detail::GfVec;

// ------------------------------------------------------------ factoring

namespace {

PolyGF one(std::uint8_t p) { return PolyGF::constant(p, 1); }

bool is_one(const PolyGF& f) { return f.degree() == 0 && f.leading() == 1; }

/// f = g(x^p); returns g.  Over a prime field a^p = a, so this is the p-th root.
PolyGF pth_root(const PolyGF& f) {
    const std::uint8_t p = f.prime();
    std::vector<std::uint8_t> c;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
    return PolyGF(p, std::move(c));
}

void square_free(const PolyGF& f, unsigned scale, std::vector<std::pair<PolyGF, unsigned>>& out) {
    const std::uint8_t p = f.prime();
    PolyGF c = gcd(f, f.derivative());
    PolyGF w = f / c;
    unsigned i = 1;
    while (!is_one(w)) {
        PolyGF y = gcd(w, c);
        PolyGF fac = w / y;
        if (!is_one(fac)) out.emplace_back(fac.monic(), i * scale);
        w = y;
        c = c / y;
        ++i;
    }
    if (!is_one(c.monic())) square_free(pth_root(c.monic()), scale * p, out);
}

// Splits a square-free product of irreducibles of equal degree d.
void equal_degree(const PolyGF& f, int d, std::mt19937_64& rng, std::vector<PolyGF>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const std::uint8_t p = f.prime();
    std::uniform_int_distribution<int> coin(0, p - 1);
    for (;;) {
        std::vector<std::uint8_t> rc(static_cast<std::size_t>(f.degree()));
        for (auto& x : rc) x = static_cast<std::uint8_t>(coin(rng));
        const PolyGF a(p, std::move(rc));
        if (a.degree() < 1) continue;
        PolyGF probe(p);
        if (p == 2) {
            // Trace map a + a^2 + ... + a^{2^{d-1}}.
            PolyGF term = a % f;
            probe = term;
            for (int j = 1; j < d; ++j) {
                term = (term * term) % f;
                probe = probe + term;
            }
        } else {
            // a^{(3^d - 1)/2} = prod_{j<d} a^{3^j}, then subtract 1.
            PolyGF term = a % f;
            PolyGF acc = term;
            for (int j = 1; j < d; ++j) {
                term = powmod(term, 3, f);
                acc = (acc * term) % f;
            }
            probe = acc - one(p);
        }
        PolyGF g = gcd(probe, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

void distinct_degree(PolyGF f, std::mt19937_64& rng, std::vector<PolyGF>& out) {
    const std::uint8_t p = f.prime();
    const PolyGF x = PolyGF::x_power(p, 1);
    PolyGF h = x % f;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = powmod(h, p, f);
        PolyGF g = gcd(h - x, f);
        if (g.degree() > 0) {
            equal_degree(g, d, rng, out);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.push_back(f.monic());
}

}  // namespace

std::vector<PolyFactor> poly_factor(const PolyGF& q) {
    if (!q.is_monic()) throw Error(ErrorCode::InvalidArgument, "poly_factor expects a monic polynomial");
    std::vector<std::pair<PolyGF, unsigned>> sqf;
    if (q.degree() > 0) square_free(q, 1, sqf);
    // The splitting is randomized internally but the sorted result is unique.
    std::mt19937_64 rng(0x7452494e494cULL);
    std::vector<PolyFactor> factors;
    for (const auto& [g, mult] : sqf) {
        std::vector<PolyGF> irr;
        distinct_degree(g, rng, irr);
        for (auto& f : irr) {
            auto it = std::find_if(factors.begin(), factors.end(),
                                   [&](const PolyFactor& pf) { return pf.irreducible == f; });
            if (it == factors.end()) {
                factors.push_back({std::move(f), mult});
            } else {
                it->multiplicity += mult;
            }
        }
    }
    std::sort(factors.begin(), factors.end(),
              [](const PolyFactor& a, const PolyFactor& b) { return a.irreducible < b.irreducible; });
    return factors;
}

std::vector<PolyGF> primary_components(const PolyGF& q) {
    std::vector<PolyGF> out;
    for (const auto& f : poly_factor(q)) {
        PolyGF power = one(q.prime());
        for (unsigned i = 0; i < f.multiplicity; ++i) power = power * f.irreducible;
        out.push_back(std::move(power));
    }
    return out;
}

bool is_irreducible(const PolyGF& q) {
    if (q.degree() < 1) return false;
    const auto f = poly_factor(q.monic());
    return f.size() == 1 && f.front().multiplicity == 1;
}

// -------------------------------------------------------- similarity form

CompanionBlock companion_of(const PolyGF& monic_poly) {
    return {monic_poly.prime(), monic_poly.companion_coeffs()};
}

MatGF SimilarityForm::form() const {
    std::vector<MatGF> mats;
    mats.reserve(blocks.size());
    for (const auto& b : blocks) mats.push_back(b.matrix());
    return MatGF::block_diagonal(mats);
}

bool SimilarityForm::certifies(const MatGF& a) const {
    std::size_t total = 0;
    for (const auto& b : blocks) {
        if (b.p != a.prime() || b.size() == 0) return false;
        total += b.size();
    }
    if (total != a.size() || s.size() != a.size() || s_inv.size() != a.size()) return false;
    if (!(s * s_inv == MatGF::identity(a.size(), a.prime()))) return false;
    return s * a == form() * s;
}

namespace {

struct Krylov {
    std::vector<GfVec> basis;  // v, Av, ..., A^{d-1} v
    PolyGF annihilator;        // monic, degree d
};

Krylov krylov(const MatGF& a, const GfVec& v) {
    const std::uint8_t p = a.prime();
    detail::SpanTracker span(a.size(), p);
    Krylov out{{}, PolyGF(p)};
    GfVec u = v;
    for (;;) {
        if (auto dep = span.insert(u)) {
            // A^d v = sum c_j A^j v  ->  x^d - sum c_j x^j.
            out.annihilator = PolyGF::from_companion(p, *dep);
            return out;
        }
        out.basis.push_back(u);
        u = detail::apply(a, u);
    }
}

// Coordinate vectors (over the frame's columns) mapped to ambient vectors.
std::vector<GfVec> combine_columns(const std::vector<GfVec>& frame, const std::vector<GfVec>& coords,
                                   std::uint8_t p) {
    const std::size_t dim = frame.empty() ? 0 : frame.front().size();
    std::vector<GfVec> res;
    res.reserve(coords.size());
    for (const auto& c : coords) {
        GfVec v(dim, 0);
        for (std::size_t i = 0; i < dim; ++i) {
            unsigned acc = 0;
            for (std::size_t j = 0; j < c.size(); ++j) acc += c[j] * frame[j][i];
            v[i] = static_cast<std::uint8_t>(acc % p);
        }
        res.push_back(std::move(v));
    }
    return res;
}

[[noreturn]] void internal_failure(const std::string& what) {
    throw Error(ErrorCode::InternalVerificationFailure, "canonical form: " + what);
}

/// Restricts A to the invariant subspaces spanned by consecutive column
/// groups of `frame`; returns the diagonal blocks of frame^{-1} A frame.
std::vector<MatGF> restrict_to(const MatGF& a, const std::vector<GfVec>& frame,
                               const std::vector<std::size_t>& sizes) {
    const auto t = detail::from_columns(frame, a.prime());
    const auto t_inv = detail::inverse(t);
    if (!t_inv) internal_failure("invariant subspaces are not complementary");
    const MatGF conj = *t_inv * a * t;
    std::vector<MatGF> out;
    std::size_t off = 0;
    for (auto sz : sizes) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = off; j < off + sz; ++j) {
                if ((i < off || i >= off + sz) && conj(i, j) != 0) internal_failure("subspace is not invariant");
            }
        }
        out.push_back(conj.principal_block(off, sz));
        off += sz;
    }
    return out;
}

/// Appends blocks for A (dimension d) and returns basis columns B with
/// A B = B F for the appended blocks.
std::vector<GfVec> decompose(const MatGF& a, std::vector<CompanionBlock>& blocks) {
    const std::size_t d = a.size();
    const std::uint8_t p = a.prime();
    if (d == 0) return {};

    std::vector<Krylov> orbits;
    orbits.reserve(d);
    PolyGF minpoly = one(p);
    for (std::size_t i = 0; i < d; ++i) {
        orbits.push_back(krylov(a, detail::unit_vector(d, i)));
        minpoly = lcm(minpoly, orbits.back().annihilator);
    }
    const auto best = std::find_if(orbits.begin(), orbits.end(), [&](const Krylov& k) {
        return k.annihilator.degree() == minpoly.degree();
    });

    if (best != orbits.end()) {
        // Cyclic subspace Z of a vector whose annihilator is the minimal
        // polynomial, plus the invariant complement cut out by a functional
        // y with y(A^j v) = [j = deg - 1].
        const std::size_t dz = best->basis.size();
        blocks.push_back(companion_of(best->annihilator));
        if (dz == d) return best->basis;

        GfVec target(dz, 0);
        target[dz - 1] = 1;
        const auto y = detail::solve(best->basis, target, d, p);
        if (!y) internal_failure("no dual functional for the cyclic subspace");
        std::vector<GfVec> rows{*y};
        for (std::size_t j = 1; j < dz; ++j) rows.push_back(detail::apply_left(rows.back(), a));
        const auto complement = detail::nullspace(rows, d, p);
        if (complement.size() != d - dz) internal_failure("complement has the wrong dimension");

        std::vector<GfVec> frame = best->basis;
        frame.insert(frame.end(), complement.begin(), complement.end());
        const auto parts = restrict_to(a, frame, {dz, d - dz});
        const auto sub = decompose(parts[1], blocks);
        auto out = best->basis;
        const auto lifted = combine_columns(complement, sub, p);
        out.insert(out.end(), lifted.begin(), lifted.end());
        return out;
    }

    // No single basis vector reaches the minimal polynomial: split into
    // generalized eigenspaces first.  Each is primary, so the branch above
    // always applies inside them.
    const auto components = primary_components(char_poly(a));
    if (components.size() < 2) internal_failure("primary matrix without a maximal basis vector");
    std::vector<GfVec> frame;
    std::vector<std::size_t> sizes;
    for (const auto& q : components) {
        const auto kernel_rows = detail::columns_of(poly_eval(q, a).transposed());
        auto kernel = detail::nullspace(kernel_rows, d, p);
        sizes.push_back(kernel.size());
        frame.insert(frame.end(), kernel.begin(), kernel.end());
    }
    if (frame.size() != d) internal_failure("generalized eigenspaces do not span");
    const auto parts = restrict_to(a, frame, sizes);
    std::vector<GfVec> out;
    std::size_t off = 0;
    for (std::size_t c = 0; c < parts.size(); ++c) {
        const auto sub = decompose(parts[c], blocks);
        const std::vector<GfVec> local(frame.begin() + static_cast<std::ptrdiff_t>(off),
                                       frame.begin() + static_cast<std::ptrdiff_t>(off + sizes[c]));
        const auto lifted = combine_columns(local, sub, p);
        out.insert(out.end(), lifted.begin(), lifted.end());
        off += sizes[c];
    }
    return out;
}

}  // namespace

SimilarityForm frobenius_form(const MatGF& a) {
    std::vector<CompanionBlock> blocks;
    const auto basis = decompose(a, blocks);
    SimilarityForm form{MatGF::zero(a.size(), a.prime()), detail::from_columns(basis, a.prime()), std::move(blocks)};
    const auto s = detail::inverse(form.s_inv);
    if (!s) internal_failure("transform is singular");
    form.s = *s;
    if (!form.certifies(a)) internal_failure("S A != F S");
    return form;
}

SimilarityForm coprime_split_block(const CompanionBlock& block, const PolyGF& q1, const PolyGF& q2) {
    const std::uint8_t p = block.p;
    if (q1.prime() != p || q2.prime() != p) throw Error(ErrorCode::ModulusMismatch, "factor over a different field");
    if (q1.degree() < 1 || q2.degree() < 1) {
        throw Error(ErrorCode::DegenerateFactor, "coprime split needs two factors of positive degree");
    }
    if (!(q1.monic() * q2.monic() == block.char_poly())) {
        throw Error(ErrorCode::InvalidArgument,
                    "(" + q1.to_string() + ")(" + q2.to_string() + ") is not " + block.char_poly().to_string());
    }
    const Bezout bz = xgcd(q1, q2);
    if (bz.g.degree() != 0) {
        throw Error(ErrorCode::NotCoprime, "factors share " + bz.g.to_string());
    }
    // u q1 + v q2 = 1: (v q2)(C) projects onto ker q1(C), (u q1)(C) onto ker q2(C).
    const MatGF c = block.matrix();
    const std::size_t n = block.size();
    const GfVec e0 = detail::unit_vector(n, 0);
    const GfVec v1 = detail::apply(poly_eval(bz.v * q2, c), e0);
    const GfVec v2 = detail::apply(poly_eval(bz.u * q1, c), e0);
    const Krylov k1 = krylov(c, v1);
    const Krylov k2 = krylov(c, v2);
    if (!(k1.annihilator == q1.monic()) || !(k2.annihilator == q2.monic())) {
        internal_failure("projected vectors do not generate the primary parts");
    }
    std::vector<GfVec> frame = k1.basis;
    frame.insert(frame.end(), k2.basis.begin(), k2.basis.end());
    SimilarityForm form{MatGF::zero(n, p), detail::from_columns(frame, p),
                        {companion_of(k1.annihilator), companion_of(k2.annihilator)}};
    const auto s = detail::inverse(form.s_inv);
    if (!s) internal_failure("coprime split transform is singular");
    form.s = *s;
    if (!form.certifies(c)) internal_failure("coprime split does not certify");
    return form;
}

}  // namespace trinil
