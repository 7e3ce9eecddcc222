#include <doctest.h>

#include "ecgl/errors.hpp"
#include "ecgl/field.hpp"
#include "ecgl/sampling.hpp"
#include "support/oracles.hpp"

using namespace ecgl;

TEST_CASE("primality agrees with trial division below 20000") {
    for (std::uint64_t n = 0; n < 20000; ++n) CHECK_MESSAGE(is_prime_u64(n) == oracle::is_prime_slow(n), n);
}

TEST_CASE("primality on large known values") {
    CHECK(is_prime_u64((1ULL << 61) - 1));
    CHECK(is_prime_u64(18446744073709551557ULL));  // largest 64-bit prime
    CHECK_FALSE(is_prime_u64(3215031751ULL));       // strong pseudoprime to 2, 3, 5, 7
    CHECK_FALSE(is_prime_u64(3825123056546413051ULL));
    CHECK_FALSE(is_prime_u64(((1ULL << 31) - 1) * ((1ULL << 31) - 1)));
}

TEST_CASE("Prime rejects small and composite values") {
    CHECK_THROWS_AS(Prime(0), InvalidPrime);
    CHECK_THROWS_AS(Prime(2), InvalidPrime);
    CHECK_THROWS_AS(Prime(3), InvalidPrime);
    CHECK_THROWS_AS(Prime(9), InvalidPrime);
    CHECK(Prime(5).value() == 5);
}

TEST_CASE("inverse") {
    const Prime p7(7);
    CHECK(fp_inv(FpElement(2, p7)).residue() == 4);
    for (std::uint64_t p : {5ULL, 7ULL, 1000003ULL}) CHECK(fp_inv(FpElement(1, Prime(p))).residue() == 1);
    CHECK_THROWS_AS(fp_inv(FpElement(0, p7)), ZeroInverse);
}

TEST_CASE("inverse property on random elements") {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        const Prime p = random_prime(static_cast<unsigned>(rng.between(3, 62)), rng);
        const FpElement x(rng.between(1, p.value() - 1), p);
        CHECK((x * fp_inv(x)).residue() == 1);
    }
}

TEST_CASE("legendre symbol matches the table of squares") {
    const Prime p7(7);
    CHECK(fp_legendre(FpElement(2, p7)) == 1);
    CHECK(fp_legendre(FpElement(3, p7)) == -1);
    CHECK(fp_legendre(FpElement(0, Prime(11))) == 0);
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL, 101ULL, 997ULL}) {
        const auto squares = oracle::squares_mod(p);
        for (std::uint64_t x = 0; x < p; ++x) {
            const int expected = x == 0 ? 0 : (squares.count(x) ? 1 : -1);
            CHECK(fp_legendre(FpElement(x, Prime(p))) == expected);
        }
    }
}

TEST_CASE("square roots") {
    const Prime p7(7);
    const auto r = fp_sqrt(FpElement(2, p7));
    REQUIRE(r.size() == 2);
    CHECK(r[0].residue() == 3);
    CHECK(r[1].residue() == 4);
    const auto z = fp_sqrt(FpElement(0, Prime(13)));
    REQUIRE(z.size() == 1);
    CHECK(z[0].residue() == 0);
    CHECK_THROWS_AS(fp_sqrt(FpElement(3, p7)), NotASquare);
}

TEST_CASE("square roots exist exactly for squares, small primes") {
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 97ULL, 257ULL, 641ULL}) {
        const auto squares = oracle::squares_mod(p);
        for (std::uint64_t x = 0; x < p; ++x) {
            const FpElement e(x, Prime(p));
            if (squares.count(x)) {
                for (const auto& r : fp_sqrt(e)) CHECK(r * r == e);
            } else {
                CHECK_THROWS_AS(fp_sqrt(e), NotASquare);
            }
        }
    }
}

TEST_CASE("square roots of random squares over large primes") {
    Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        const Prime p = random_prime(static_cast<unsigned>(rng.between(3, 62)), rng);
        const FpElement r(rng.below(p.value()), p);
        const FpElement sq = r * r;
        const auto roots = fp_sqrt(sq);
        CHECK((roots[0] == r || roots.back() == r));
        for (const auto& s : roots) CHECK(s * s == sq);
    }
}

TEST_CASE("residues stay reduced and moduli must match") {
    const Prime p(1000003);
    const FpElement x = FpElement::from_signed(-1, p);
    CHECK(x.residue() == 1000002);
    CHECK((x + x).residue() == 1000001);
    CHECK((x * x).residue() == 1);
    CHECK((-x).residue() == 1);
    CHECK((FpElement(0, p) - x).residue() == 1);
    CHECK(x.pow(0).residue() == 1);
    CHECK(FpElement(3, p).pow(4).residue() == 81);
    CHECK(FpElement(1000003 + 5, p).residue() == 5);
    CHECK_THROWS_AS(x + FpElement(1, Prime(7)), ModulusMismatch);
    CHECK_THROWS_AS(x * FpElement(1, Prime(7)), ModulusMismatch);
}
