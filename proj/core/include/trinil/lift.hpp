#pragma once

// Lifting residue-field decompositions to Z/2^k and Z/3^l.

#include <cstdint>

#include "trinil/matrix.hpp"

namespace trinil {

/// Iterations never exceed this; hitting it means a broken precondition.
inline constexpr unsigned kMaxLiftIterations = 64;

struct LiftTrace {
    unsigned iterations = 0;
    /// N with (X^2 - X)^N = 0, taken from the nilpotency witness.
    std::uint64_t initial_defect_exponent = 0;
};

struct IdempotentLift {
    MatZ e;
    LiftTrace trace;
};

/// Newton iteration e <- 3e^2 - 2e^3 from X until e^2 = e.  The result is a
/// polynomial in X and congruent to X modulo the ideal generated by X^2 - X.
/// At every step the new defect d' = e'^2 - e' is checked against
/// d^2 (4d - 3).  Throws NotAlmostIdempotent if X^2 - X is not nilpotent.
IdempotentLift newton_idempotent_lift(const MatZ& x);

struct TripotentLift {
    MatZ e;
    /// The commuting idempotents with e = p - q.
    MatZ p;
    MatZ q;
};

/// For X over Z/3^l with X^3 - X nilpotent: lifts P = (X^2 + X)/2 and
/// Q = (X^2 - X)/2 to commuting idempotents p, q and returns E = p - q, a
/// tripotent congruent to X mod 3.  Throws NotAlmostTripotent otherwise.
TripotentLift tripotent_lift_3adic(const MatZ& x);

struct TwoAdicLift {
    MatZ e;
    MatZ w;
    LiftTrace trace;
};

/// Lifts an idempotent Ebar over GF(2) with (A mod 2) - Ebar nilpotent to
/// an idempotent E over Z/2^k with E = Ebar mod 2; W = A - E.
TwoAdicLift idempotent_lift_2adic(const MatZ& a, const MatGF& e_bar);

}  // namespace trinil
