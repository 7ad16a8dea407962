#include "trinil/lift.hpp"

#include <string>

namespace trinil {

namespace {

[[noreturn]] void verification_failure(const std::string& what) {
    throw Error(ErrorCode::InternalVerificationFailure, "lift: " + what);
}

}  // namespace

IdempotentLift newton_idempotent_lift(const MatZ& x) {
    const std::size_t n = x.size();
    const Modulus& mod = x.modulus();
    MatZ defect = x * x - x;
    const auto witness = is_nilpotent(defect);
    if (!witness.nilpotent) {
        throw Error(ErrorCode::NotAlmostIdempotent, "X^2 - X is not nilpotent modulo " + std::to_string(mod.m()));
    }
    IdempotentLift out{x, {0, witness.exponent}};
    const MatZ three = MatZ::scalar(n, 3, mod);
    while (!defect.is_zero()) {
        if (out.trace.iterations == kMaxLiftIterations) verification_failure("iteration cap reached");
        const MatZ& e = out.e;
        const MatZ e2 = e * e;
        MatZ next = 3 * e2 - 2 * (e2 * e);
        MatZ next_defect = next * next - next;
        // d' = d^2 (4d - 3)
        if (!(next_defect == defect * defect * (4 * defect - three))) {
            verification_failure("defect contraction law violated");
        }
        out.e = std::move(next);
        defect = std::move(next_defect);
        ++out.trace.iterations;
    }
    return out;
}

TripotentLift tripotent_lift_3adic(const MatZ& x) {
    const Modulus& mod = x.modulus();
    if (mod.k() != 0 || mod.l() == 0 || !mod.admissible()) {
        throw Error(ErrorCode::ModulusMismatch, "tripotent_lift_3adic needs a modulus 3^l, got " + std::to_string(mod.m()));
    }
    const MatZ x2 = x * x;
    if (!is_nilpotent(x2 * x - x).nilpotent) {
        throw Error(ErrorCode::NotAlmostTripotent, "X^3 - X is not nilpotent modulo " + std::to_string(mod.m()));
    }
    const auto half = static_cast<std::int64_t>(*invmod(2, mod.m()));
    // P - Q = X and P + Q = X^2; P^2 - P = (X^3 - X)(X + 2) / 4.
    const MatZ p = newton_idempotent_lift(half * (x2 + x)).e;
    const MatZ q = newton_idempotent_lift(half * (x2 - x)).e;
    if (!(p * q == q * p)) verification_failure("lifted idempotents do not commute");
    MatZ e = p - q;
    if (!is_tripotent(e)) verification_failure("difference of commuting idempotents is not tripotent");
    return {std::move(e), p, q};
}

TwoAdicLift idempotent_lift_2adic(const MatZ& a, const MatGF& e_bar) {
    const Modulus& mod = a.modulus();
    if (mod.l() != 0 || mod.k() == 0 || !mod.admissible()) {
        throw Error(ErrorCode::ModulusMismatch, "idempotent_lift_2adic needs a modulus 2^k, got " + std::to_string(mod.m()));
    }
    if (e_bar.prime() != 2 || e_bar.size() != a.size()) {
        throw Error(ErrorCode::ShapeMismatch, "residue idempotent does not match the matrix");
    }
    if (!is_idempotent(e_bar)) throw Error(ErrorCode::NotAlmostIdempotent, "residue matrix is not idempotent");
    if (!is_nilpotent(reduce(a, 2) - e_bar)) {
        throw Error(ErrorCode::InvalidArgument, "A - E is not nilpotent modulo 2");
    }
    auto lifted = newton_idempotent_lift(MatZ::lift(e_bar, mod));
    MatZ w = a - lifted.e;
    return {std::move(lifted.e), std::move(w), lifted.trace};
}

}  // namespace trinil
