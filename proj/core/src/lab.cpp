#include "trinil/lab.hpp"

#include <bit>
#include <sstream>

namespace trinil::lab {

namespace {

// Nilpotent residues found by powering: a^t = 0 for some t <= log2(m) + 1.
std::vector<char> nilpotent_table(std::uint64_t m) {
    const unsigned bound = static_cast<unsigned>(std::bit_width(m));
    std::vector<char> nil(m, 0);
    for (std::uint64_t a = 0; a < m; ++a) {
        std::uint64_t x = a;
        for (unsigned t = 1; t <= bound && !nil[a]; ++t) {
            if (x == 0) nil[a] = 1;
            x = (x * a) % m;
        }
    }
    return nil;
}

std::uint64_t floor_log2(std::uint64_t m) { return static_cast<std::uint64_t>(std::bit_width(m)) - 1; }

std::uint64_t candidate_count(std::size_t n, std::uint64_t m) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) {
        total *= m;
        if (total > kMaxEnumeration) {
            throw Error(ErrorCode::EnumerationTooLarge,
                        std::to_string(m) + "^" + std::to_string(n * n) + " candidates exceed the 2^24 cap");
        }
    }
    return total;
}

}  // namespace

RingReport classify_zm(std::uint64_t m) {
    if (m < 2 || m > kMaxClassifyModulus) {
        throw Error(ErrorCode::InvalidArgument, "classify_zm needs 2 <= m <= 2^20, got " + std::to_string(m));
    }
    const auto nil = nilpotent_table(m);
    const auto cube = [m](std::uint64_t a) { return (a * a % m) * a % m; };

    std::vector<std::uint64_t> tripotents;
    for (std::uint64_t a = 0; a < m; ++a) {
        if (cube(a) == a) tripotents.push_back(a);
    }

    RingReport r;
    r.m = m;
    for (std::uint64_t a = 0; a < m && !r.trinil_witness; ++a) {
        bool found = false;
        for (auto t : tripotents) {
            if (nil[(a + m - t) % m]) {
                found = true;
                break;
            }
        }
        if (!found) r.trinil_witness = a;
    }
    std::uint64_t uniform_index = 1;
    for (std::uint64_t a = 0; a < m; ++a) {
        const std::uint64_t c = cube(a);
        const std::uint64_t d = (a + m - c) % m;
        if (!r.strongly_2_nil_clean_witness && !nil[d]) r.strongly_2_nil_clean_witness = a;
        if (!r.tripotent_witness && c != a) r.tripotent_witness = a;
        const std::uint64_t sq = a * a % m;
        if (!r.two_boolean_witness && sq * sq % m != sq) r.two_boolean_witness = a;
        if (nil[d]) {
            std::uint64_t e = 1;
            for (std::uint64_t x = d; x != 0; x = x * d % m) ++e;
            uniform_index = std::max(uniform_index, e);
        }
    }
    r.is_trinil_clean = !r.trinil_witness;
    r.is_strongly_2_nil_clean = !r.strongly_2_nil_clean_witness;
    r.is_tripotent_ring = !r.tripotent_witness;
    r.is_2_boolean = !r.two_boolean_witness;
    if (r.is_strongly_2_nil_clean) r.bounded_index_exponent = uniform_index;
    return r;
}

bool brute_force_nilpotent(const MatZ& w) {
    const std::uint64_t bound = w.size() * floor_log2(w.modulus().m());
    MatZ power = w;
    for (std::uint64_t t = 1; t <= bound; ++t) {
        if (power.is_zero()) return true;
        power = power * w;
    }
    return power.is_zero();
}

std::vector<MatZ> enumerate_tripotents(std::size_t n, const Modulus& mod) {
    const std::uint64_t m = mod.m();
    const std::uint64_t total = candidate_count(n, m);
    std::vector<MatZ> out;
    std::vector<std::int64_t> digits(n * n, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t x = idx;
        for (std::size_t i = n * n; i-- > 0;) {
            digits[i] = static_cast<std::int64_t>(x % m);
            x /= m;
        }
        MatZ e = MatZ::from_entries(n, mod, digits);
        if (e * e * e == e) out.push_back(std::move(e));
    }
    return out;
}

std::vector<MatZ> oracle_decompose(const MatZ& a) {
    return oracle_decompose(a, enumerate_tripotents(a.size(), a.modulus()));
}

std::vector<MatZ> oracle_decompose(const MatZ& a, const std::vector<MatZ>& tripotents) {
    candidate_count(a.size(), a.modulus().m());
    std::vector<MatZ> out;
    for (const auto& e : tripotents) {
        if (brute_force_nilpotent(a - e)) out.push_back(e);
    }
    return out;
}

RefuterEvidence refute_strongly_2_nil_clean_matrices(const Modulus& mod, std::size_t n, bool flip_sign) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "the refuter needs n >= 2");
    MatZ a = MatZ::identity(n, mod);
    a.set(0, 0, 1);
    a.set(0, 1, 1);
    a.set(1, 0, 1);
    a.set(1, 1, 0);
    MatZ cube_minus_a = a * a * a - a;

    const std::int64_t off = flip_sign ? 1 : -1;
    MatZ inverse = MatZ::from_rows({{1, off}, {off, 2}}, mod);
    MatZ corner = MatZ::from_rows({{static_cast<std::int64_t>(cube_minus_a(0, 0)), static_cast<std::int64_t>(cube_minus_a(0, 1))},
                                   {static_cast<std::int64_t>(cube_minus_a(1, 0)), static_cast<std::int64_t>(cube_minus_a(1, 1))}},
                                  mod);
    MatZ product = corner * inverse;
    const bool ok = product == MatZ::identity(2, mod);
    const bool not_nil = !brute_force_nilpotent(cube_minus_a);
    return {std::move(a), std::move(cube_minus_a), std::move(inverse), std::move(product), ok, not_nil};
}

std::optional<ConverseWitness> field_converse_sweep(std::uint64_t p, std::size_t n) {
    if (p < 2 || p > kMaxModulus) throw Error(ErrorCode::InvalidArgument, "p out of range");
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    }
    const Modulus mod = Modulus::make(p);
    for (std::uint64_t a = 1; a < p; ++a) {
        if (a * a % p == 1) continue;
        const auto tripotents = enumerate_tripotents(n, mod);
        const auto found = oracle_decompose(MatZ::scalar(n, static_cast<std::int64_t>(a), mod), tripotents);
        return ConverseWitness{a, candidate_count(n, p), found.empty()};
    }
    return std::nullopt;
}

std::vector<SweepRow> modulus_admissibility_sweep(std::uint64_t limit) {
    if (limit < 2 || limit > 10000) throw Error(ErrorCode::InvalidArgument, "sweep limit must lie in [2, 10^4]");
    std::vector<SweepRow> rows;
    rows.reserve(limit - 1);
    for (std::uint64_t m = 2; m <= limit; ++m) {
        std::uint64_t rest = m;
        while (rest % 2 == 0) rest /= 2;
        while (rest % 3 == 0) rest /= 3;
        rows.push_back({m, classify_zm(m).is_trinil_clean, rest == 1});
    }
    return rows;
}

std::vector<CheckResult> reproduction_checks(bool inject_fault) {
    std::vector<CheckResult> out;

    for (std::uint64_t m : {6, 12, 36, 72}) {
        for (std::size_t n : {2, 3, 4}) {
            const auto ev = refute_strongly_2_nil_clean_matrices(Modulus::make(m), n, inject_fault);
            std::ostringstream detail;
            detail << "corner (A^3-A)*[[1,-1],[-1,2]] " << (ev.corner_inverse_ok ? "= I" : "!= I")
                   << ", A^3-A " << (ev.not_nilpotent ? "not nilpotent" : "nilpotent");
            out.push_back({"refuter m=" + std::to_string(m) + " n=" + std::to_string(n),
                           ev.corner_inverse_ok && ev.not_nilpotent, detail.str()});
        }
    }

    const auto converse = field_converse_sweep(5, 2);
    out.push_back({"converse p=5 n=2", converse && converse->no_decomposition,
                   converse ? "a=" + std::to_string(converse->a) + ", " +
                                  std::to_string(converse->candidates_examined) + " candidates, no decomposition"
                            : "no witness"});

    const auto sweep = modulus_admissibility_sweep(100);
    std::uint64_t mismatches = 0;
    for (const auto& row : sweep) mismatches += row.agrees() ? 0 : 1;
    out.push_back({"admissibility sweep m<=100", mismatches == 0, std::to_string(mismatches) + " mismatches"});
    return out;
}

}  // namespace trinil::lab
