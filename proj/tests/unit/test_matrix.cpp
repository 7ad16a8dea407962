#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "trinil/matrix.hpp"

using namespace trinil;
using trinil::testing::random_matgf;
using trinil::testing::random_matz;

TEST_CASE("construction and shape errors") {
    const auto mod = Modulus::make(12);
    CHECK_THROWS_AS((void)MatZ::zero(0, mod), Error);
    const std::vector<std::int64_t> three{1, 2, 3};
    CHECK_THROWS_AS((void)MatZ::from_entries(2, mod, three), Error);
    const auto a = MatZ::from_rows({{-1, 13}, {24, 5}}, mod);
    CHECK(a(0, 0) == 11);
    CHECK(a(0, 1) == 1);
    CHECK(a(1, 0) == 0);

    try {
        (void)(MatZ::identity(2, mod) + MatZ::identity(3, mod));
        FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
    try {
        (void)(MatZ::identity(2, mod) * MatZ::identity(2, Modulus::make(6)));
        FAIL("expected ModulusMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ModulusMismatch);
    }
}

TEST_CASE("powers and polynomial evaluation") {
    const auto mod = Modulus::make(12);
    const auto a = MatZ::from_rows({{1, 1}, {1, 0}}, mod);
    CHECK(pow(a, 0) == MatZ::identity(2, mod));
    CHECK(pow(a, 5) == a * a * a * a * a);

    const std::vector<std::int64_t> t2_minus_t{0, -1, 1};
    CHECK(poly_eval(t2_minus_t, MatZ::identity(3, mod)).is_zero());

    // A^3 - A for the Fibonacci matrix
    const std::vector<std::int64_t> t3_minus_t{0, -1, 0, 1};
    CHECK(poly_eval(t3_minus_t, a) == MatZ::from_rows({{2, 1}, {1, 1}}, mod));
}

TEST_CASE("polynomial values commute with the argument") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto mod = Modulus::make(std::vector<std::uint64_t>{6, 12, 36, 72}[trial % 4]);
        const std::size_t n = 1 + trial % 6;
        const auto a = random_matz(rng, n, mod);
        std::vector<std::int64_t> f(1 + rng() % 6);
        for (auto& c : f) c = static_cast<std::int64_t>(rng() % 1000) - 500;
        const auto fa = poly_eval(f, a);
        CHECK(fa * a == a * fa);
    }
}

TEST_CASE("lazy and eager products agree") {
    // Large moduli force the per-term reduction path.
    std::mt19937_64 rng(3);
    for (std::uint64_t m : {std::uint64_t{1} << 30, std::uint64_t{3} << 29, std::uint64_t{1162261467}}) {
        const auto mod = Modulus::make(m);
        for (std::size_t n : {1, 3, 7}) {
            const auto a = random_matz(rng, n, mod);
            const auto b = random_matz(rng, n, mod);
            const auto c = a * b;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    unsigned __int128 s = 0;
                    for (std::size_t t = 0; t < n; ++t) s += static_cast<unsigned __int128>(a(i, t)) * b(t, j);
                    CHECK(c(i, j) == static_cast<std::uint64_t>(s % m));
                }
            }
        }
    }
}

TEST_CASE("nilpotency with witness") {
    const auto m6 = Modulus::make(6);
    const auto strict = MatZ::from_rows({{0, 5}, {0, 0}}, m6);
    const auto w = is_nilpotent(strict);
    CHECK(w.nilpotent);
    CHECK(w.exponent == 2);
    CHECK(is_nilpotent(MatZ::from_rows({{2, 2}, {2, 2}}, Modulus::make(4))).nilpotent);
    CHECK_FALSE(is_nilpotent(MatZ::identity(3, m6)).nilpotent);
    CHECK_THROWS_AS((void)is_nilpotent(MatZ::zero(2, Modulus::make(10))), Error);
}

TEST_CASE("nilpotency agrees with direct powering") {
    std::mt19937_64 rng(5);
    int nilpotent_seen = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const auto mod = Modulus::make(std::vector<std::uint64_t>{4, 8, 9, 12, 27, 36, 72}[trial % 7]);
        const std::size_t n = 1 + trial % 5;
        auto a = random_matz(rng, n, mod);
        // Bias towards nilpotent inputs: strictly upper part plus radical multiples.
        if (trial % 2 == 0) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j <= i; ++j) {
                    a.set(i, j, static_cast<std::int64_t>(a(i, j) * mod.radical()));
                }
            }
        }
        const auto w = is_nilpotent(a);
        const bool direct = pow(a, n * mod.nil_index()).is_zero();
        CHECK(w.nilpotent == direct);
        CHECK(w.nilpotent == testing::nilpotent_by_powering(a));
        if (w.nilpotent) {
            ++nilpotent_seen;
            CHECK(w.exponent == n * mod.nil_index());
        }
    }
    CHECK(nilpotent_seen > 100);
}

TEST_CASE("tripotent and idempotent predicates") {
    const auto mod = Modulus::make(36);
    auto b = MatZ::zero(5, mod);
    b.set(3, 2, 1);
    b.set(3, 4, 1);
    b.set(4, 3, 1);
    CHECK(is_tripotent(b));
    CHECK_FALSE(is_idempotent(b));
    CHECK(is_tripotent(MatZ::zero(3, mod)));
    CHECK(is_idempotent(MatZ::identity(3, mod)));
    CHECK(is_tripotent(MatZ::from_rows({{0, 1}, {1, 0}}, Modulus::make(3))));

    auto bg = MatGF::zero(4, 3);
    bg.set(2, 1, 1);
    bg.set(2, 3, 1);
    bg.set(3, 2, 1);
    CHECK(is_tripotent(bg));
    CHECK_FALSE(is_idempotent(bg));
}

TEST_CASE("reduction and matrix CRT") {
    const auto m6 = Modulus::make(6);
    const auto parts = crt_split(MatZ::scalar(2, 5, m6));
    REQUIRE(parts.two);
    REQUIRE(parts.three);
    CHECK(*parts.two == MatZ::identity(2, Modulus::make(2)));
    CHECK(*parts.three == MatZ::scalar(2, 2, Modulus::make(3)));

    const MatCrtParts p{MatZ::scalar(2, 3, Modulus::make(4)), MatZ::identity(2, Modulus::make(3))};
    CHECK(crt_combine(p, Modulus::make(12)) == MatZ::scalar(2, 7, Modulus::make(12)));
    CHECK(reduce(MatZ::identity(3, m6), 2) == MatGF::identity(3, 2));
    CHECK_THROWS_AS((void)reduce(MatZ::identity(2, Modulus::make(4)), 3), Error);
}

TEST_CASE("matrix CRT is a ring isomorphism") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto mod = Modulus::make(std::vector<std::uint64_t>{6, 12, 36, 72}[trial % 4]);
        const std::size_t n = 1 + trial % 6;
        const auto a = random_matz(rng, n, mod);
        const auto b = random_matz(rng, n, mod);
        const auto sa = crt_split(a);
        const auto sb = crt_split(b);
        CHECK(crt_combine(sa, mod) == a);
        const auto sab = crt_split(a * b);
        CHECK(*sab.two == *sa.two * *sb.two);
        CHECK(*sab.three == *sa.three * *sb.three);
    }
}

TEST_CASE("characteristic polynomial") {
    const std::vector<std::uint8_t> c{1, 0};
    CHECK(char_poly(MatGF::companion(2, c)) == PolyGF(2, {1, 0, 1}));
    CHECK(char_poly(MatGF::zero(4, 3)) == PolyGF::x_power(3, 4));
    // x^2 - x - 1 over GF(3)
    CHECK(char_poly(MatGF::from_rows({{1, 1}, {1, 0}}, 3)) == PolyGF(3, {2, 2, 1}));
}

TEST_CASE("characteristic polynomial agrees with cofactor expansion") {
    std::mt19937_64 rng(21);
    for (std::uint8_t p : {2, 3}) {
        for (int trial = 0; trial < 300; ++trial) {
            const std::size_t n = 1 + trial % 7;
            auto a = random_matgf(rng, n, p);
            if (trial % 3 == 0) {
                // sparse inputs exercise the zero-pivot paths
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) {
                        if (rng() % 3) a.set(i, j, 0);
                    }
                }
            }
            CHECK(char_poly(a) == testing::char_poly_by_cofactors(a));
        }
    }
}

TEST_CASE("companion blocks have the fixed characteristic polynomial") {
    for (std::uint8_t p : {2, 3}) {
        for (std::size_t n = 1; n <= 5; ++n) {
            for (const auto& c : testing::all_vectors(p, n)) {
                CHECK(char_poly(MatGF::companion(p, c)) == PolyGF::from_companion(p, c));
            }
        }
    }
}

TEST_CASE("field nilpotency matches the characteristic polynomial") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 400; ++trial) {
        const std::uint8_t p = trial % 2 ? 2 : 3;
        const std::size_t n = 1 + trial % 6;
        auto a = random_matgf(rng, n, p);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                if (rng() % 4) a.set(i, j, 0);
            }
        }
        CHECK(is_nilpotent(a) == (char_poly(a) == PolyGF::x_power(p, n)));
        CHECK(is_nilpotent(a) == testing::nilpotent_by_powering(a));
    }
}
