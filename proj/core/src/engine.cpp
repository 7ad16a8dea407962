#include "trinil/engine.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "trinil/canon.hpp"
#include "trinil/lift.hpp"

namespace trinil {

namespace {

[[noreturn]] void verification_failure(const std::string& what) {
    throw Error(ErrorCode::InternalVerificationFailure, "decompose: " + what);
}

struct SideResult {
    MatZ e;
    MatGF residue;
    std::vector<std::string> provenance;
};

SideResult two_adic_side(const MatZ& a2, std::uint64_t seed, std::uint64_t budget) {
    const MatGF bar = reduce(a2, 2);
    const SimilarityForm form = frobenius_form(bar);
    std::vector<BlockSplit> splits;
    std::vector<std::string> prov;
    for (std::size_t i = 0; i < form.blocks.size(); ++i) {
        splits.push_back(split_gf2_block(form.blocks[i], seed + i, budget));
        prov.push_back("GF2:" + std::string(to_string(splits.back().provenance)));
    }
    const auto field = assemble_field_decomposition(form, splits);
    if (!(field.e + field.w == bar) || !is_idempotent(field.e) || !is_nilpotent(field.w)) {
        verification_failure("GF(2) assembly");
    }
    auto lifted = idempotent_lift_2adic(a2, field.e);
    return {std::move(lifted.e), field.e, std::move(prov)};
}

SideResult three_adic_side(const MatZ& a3) {
    const MatGF bar = reduce(a3, 3);
    const SimilarityForm form = frobenius_form(bar);
    std::vector<BlockSplit> splits;
    std::vector<std::string> prov;
    for (const auto& block : form.blocks) {
        splits.push_back(split_gf3_block(block));
        prov.push_back("GF3:" + std::string(to_string(splits.back().provenance)));
    }
    const auto field = assemble_field_decomposition(form, splits);
    if (!(field.e + field.w == bar) || !is_tripotent(field.e) || !is_nilpotent(field.w)) {
        verification_failure("GF(3) assembly");
    }
    auto lifted = tripotent_lift_3adic(MatZ::lift(field.e, a3.modulus()));
    return {std::move(lifted.e), field.e, std::move(prov)};
}

}  // namespace

TrinilCertificate decompose(const MatZ& a, std::uint64_t seed, std::uint64_t fallback_budget) {
    const Modulus& mod = a.modulus();
    mod.require_admissible();
    const MatCrtParts parts = crt_split(a);

    TrinilCertificate cert{a, a, a, a.size() * mod.nil_index(), {}, {}, seed, std::nullopt, std::nullopt};
    MatCrtParts e_parts;
    if (parts.two) {
        auto side = two_adic_side(*parts.two, seed, fallback_budget);
        e_parts.two = std::move(side.e);
        cert.residue_e2 = std::move(side.residue);
        cert.provenance.insert(cert.provenance.end(), side.provenance.begin(), side.provenance.end());
    }
    if (parts.three) {
        auto side = three_adic_side(*parts.three);
        e_parts.three = std::move(side.e);
        cert.residue_e3 = std::move(side.residue);
        cert.provenance.insert(cert.provenance.end(), side.provenance.begin(), side.provenance.end());
    }
    cert.e = crt_combine(e_parts, mod);
    cert.w = a - cert.e;

    const Verification v = verify(cert);
    cert.checks = v.checks;
    if (!v.ok) verification_failure("certificate check failed: " + v.failure);
    return cert;
}

Verification verify(const TrinilCertificate& cert) {
    Verification out;
    const auto same_shape = [&](const MatZ& m) {
        return m.size() == cert.a.size() && m.modulus() == cert.a.modulus();
    };
    if (!same_shape(cert.e) || !same_shape(cert.w)) {
        out.failure = "shape";
        return out;
    }
    auto& c = out.checks;
    c.sum_ok = cert.e + cert.w == cert.a;
    c.tripotent_ok = is_tripotent(cert.e);
    c.nilpotent_ok = cert.nilpotency_exponent >= 1 && pow(cert.w, cert.nilpotency_exponent).is_zero();

    const std::uint64_t m = cert.a.modulus().m();
    const auto residue_matches = [&](const std::optional<MatGF>& r, std::uint8_t p) {
        if (!r) return true;
        return m % p == 0 && r->size() == cert.e.size() && reduce(cert.e, p) == *r;
    };
    c.residue_ok = residue_matches(cert.residue_e2, 2) && residue_matches(cert.residue_e3, 3);

    if (!c.sum_ok) {
        out.failure = "sum_ok";
    } else if (!c.tripotent_ok) {
        out.failure = "tripotent_ok";
    } else if (!c.nilpotent_ok) {
        out.failure = "nilpotent_ok";
    } else if (!c.residue_ok) {
        out.failure = "residue_traceability";
    }
    out.ok = c.all();
    return out;
}

MatZ TriangularInput::matrix() const {
    if (diagonal.size() != s || strict_upper.size() != s * (s - 1) / 2) {
        throw Error(ErrorCode::ShapeMismatch, "triangular input has the wrong number of entries");
    }
    MatZ t = MatZ::zero(s, modulus);
    std::size_t k = 0;
    for (std::size_t i = 0; i < s; ++i) {
        t.set(i, i, diagonal[i]);
        for (std::size_t j = i + 1; j < s; ++j) t.set(i, j, strict_upper[k++]);
    }
    return t;
}

TrinilCertificate decompose_triangular(const TriangularInput& t) {
    t.modulus.require_admissible();
    const MatZ a = t.matrix();
    MatZ e = MatZ::zero(t.s, t.modulus);
    for (std::size_t i = 0; i < t.s; ++i) {
        e.set(i, i, static_cast<std::int64_t>(trinil_decompose(Residue(a(i, i), t.modulus)).tripotent.value()));
    }
    TrinilCertificate cert{a, e, a - e, 0, {}, {"triangular"}, 0, std::nullopt, std::nullopt};

    const std::uint64_t bound = t.s * (t.modulus.nil_index() + 1);
    MatZ power = cert.w;
    for (std::uint64_t exp = 1; exp <= bound; ++exp) {
        if (power.is_zero()) {
            cert.nilpotency_exponent = exp;
            break;
        }
        power = power * cert.w;
    }
    if (cert.nilpotency_exponent == 0) verification_failure("triangular remainder is not nilpotent");

    const Verification v = verify(cert);
    cert.checks = v.checks;
    if (!v.ok) verification_failure("triangular certificate check failed: " + v.failure);
    return cert;
}

std::vector<BatchItem> decompose_batch(std::span<const MatZ> matrices, std::uint64_t seed,
                                       std::uint64_t fallback_budget, unsigned threads) {
    std::vector<BatchItem> out(matrices.size());
    const auto run = [&](std::size_t i) {
        try {
            out[i].certificate = decompose(matrices[i], seed + i, fallback_budget);
        } catch (const Error& err) {
            out[i].error = err.code();
            out[i].message = err.what();
        }
    };
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, matrices.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < matrices.size(); ++i) run(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < matrices.size(); i = next++) run(i);
            });
        }
    }
    return out;
}

}  // namespace trinil
