#include "test_support.hpp"

#include <qfprimes/arith.hpp>

#include <gtest/gtest.h>

using qfprimes::Integer;
using namespace qfprimes;

TEST(ModPow, Examples)
{
    EXPECT_EQ(mod_pow(2, 112, 113), 1);
    EXPECT_EQ(mod_pow(5, 0, 7), 1);
    EXPECT_EQ(mod_pow(2, 10, 1000), 24);
    EXPECT_EQ(mod_pow(-3, 3, 7), 1); // -27 = 1 (mod 7)
    EXPECT_EQ(mod_pow(12, 5, 1), 0);
}

TEST(ModPow, Errors)
{
    EXPECT_THROW(mod_pow(2, 3, 0), DomainError);
    EXPECT_THROW(mod_pow(2, -1, 7), DomainError);
}

TEST(ModPow, ExponentsAdd)
{
    std::mt19937_64 rng(0x51);
    for (int i = 0; i < 2000; ++i) {
        const Integer m = qftest::random_bits(rng, 1 + rng() % 200) + 1;
        const Integer b = qftest::random_bits(rng, 1 + rng() % 200) - qftest::random_bits(rng, 100);
        const Integer e1 = qftest::random_bits(rng, 1 + rng() % 80);
        const Integer e2 = qftest::random_bits(rng, 1 + rng() % 80);
        const Integer lhs = mod_pow(b, e1 + e2, m);
        EXPECT_EQ(lhs, mod_floor(mod_pow(b, e1, m) * mod_pow(b, e2, m), m));
        EXPECT_GE(lhs, 0);
        EXPECT_LT(lhs, m);
    }
}

TEST(Jacobi, Examples)
{
    EXPECT_EQ(jacobi(1, 15), 1);
    EXPECT_EQ(jacobi(2, 7), 1);
    EXPECT_EQ(jacobi(3, 7), -1);
    EXPECT_EQ(jacobi(-7, 113), 1);
    EXPECT_EQ(qftest::brute_legendre(-7, 113), 1);
    EXPECT_EQ(jacobi(21, 7), 0);
    EXPECT_EQ(jacobi(2, 15), 1); // Jacobi, not Legendre: 2 is not a square mod 15
}

TEST(Jacobi, RejectsEvenOrNonPositiveModulus)
{
    EXPECT_THROW(jacobi(3, 8), DomainError);
    EXPECT_THROW(jacobi(3, 0), DomainError);
    EXPECT_THROW(jacobi(3, -7), DomainError);
}

TEST(Jacobi, MatchesBruteForceLegendre)
{
    for (long long p : qftest::primes_below(400)) {
        if (p == 2) continue;
        const Integer P(static_cast<long>(p));
        for (long long a = -p; a < 2 * p; ++a)
            ASSERT_EQ(jacobi(Integer(static_cast<long>(a)), P), qftest::brute_legendre(a, p)) << a << "/" << p;
    }
}

TEST(Jacobi, Multiplicative)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10000; ++i) {
        const Integer n = qftest::random_bits(rng, 1 + rng() % 128) * 2 + 1;
        const Integer a = qftest::random_bits(rng, 1 + rng() % 128) - qftest::random_bits(rng, 64);
        const Integer b = qftest::random_bits(rng, 1 + rng() % 128) - qftest::random_bits(rng, 64);
        ASSERT_EQ(jacobi(a * b, n), jacobi(a, n) * jacobi(b, n));
    }
}

TEST(Kronecker, Examples)
{
    EXPECT_EQ(kronecker(-56, 3), 1);
    EXPECT_EQ(kronecker(8, 7), 1);
    for (int a = -20; a <= 20; ++a) EXPECT_EQ(kronecker(a, 1), 1);
}

TEST(Kronecker, SpecialLowerArguments)
{
    // (a/2): 0 for even a, +1 for a = +-1 (mod 8), -1 for a = +-3 (mod 8)
    EXPECT_EQ(kronecker(-7, 2), 1);
    EXPECT_EQ(kronecker(5, 2), -1);
    EXPECT_EQ(kronecker(6, 2), 0);
    EXPECT_EQ(kronecker(-3, 4), 1);
    EXPECT_EQ(kronecker(5, 8), -1);
    // (a/0) = 1 iff a = +-1; (a/-1) = sign of a
    EXPECT_EQ(kronecker(1, 0), 1);
    EXPECT_EQ(kronecker(-1, 0), 1);
    EXPECT_EQ(kronecker(2, 0), 0);
    EXPECT_EQ(kronecker(-5, -1), -1);
    EXPECT_EQ(kronecker(5, -1), 1);
}

TEST(Kronecker, AgreesWithJacobiOnOddPositive)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 5000; ++i) {
        const Integer n = qftest::random_bits(rng, 1 + rng() % 96) * 2 + 1;
        const Integer a = qftest::random_bits(rng, 96) - qftest::random_bits(rng, 96);
        ASSERT_EQ(kronecker(a, n), jacobi(a, n));
    }
}

TEST(Kronecker, CompletelyMultiplicativeInLowerArgument)
{
    for (int a = -30; a <= 30; ++a)
        for (int m = -12; m <= 12; ++m)
            for (int n = -12; n <= 12; ++n) {
                if (m == 0 || n == 0) continue;
                ASSERT_EQ(kronecker(a, m * n), kronecker(a, m) * kronecker(a, n)) << a << " " << m << " " << n;
            }
}

TEST(SqrtModPrime, Examples)
{
    EXPECT_EQ(sqrt_mod_prime(0, 13), 0);
    EXPECT_EQ(sqrt_mod_prime(2, 7), 4);
    // roots of 106 mod 113 by enumeration: {28, 85}
    EXPECT_EQ(sqrt_mod_prime(-7, 113), 85);
}

TEST(SqrtModPrime, NonResidueThrows)
{
    EXPECT_THROW(sqrt_mod_prime(3, 7), NoSquareRoot);
    EXPECT_THROW(sqrt_mod_prime(-1, 7), NoSquareRoot);
    EXPECT_THROW(sqrt_mod_prime(2, 9), DomainError);
}

TEST(SqrtModPrime, RoundTripAllResidues)
{
    for (std::uint64_t p : qftest::primes_below(10000)) {
        if (p == 2) continue;
        const Integer P = qfprimes::from_u64(p);
        std::vector<bool> square(p, false);
        for (std::uint64_t t = 1; t < p; ++t) square[t * t % p] = true;
        for (std::uint64_t a = 1; a < p; ++a) {
            if (!square[a]) continue;
            const Integer t = sqrt_mod_prime(qfprimes::from_u64(a), P);
            ASSERT_EQ(mod_floor(t * t, P), a) << a << " mod " << p;
            ASSERT_GT(2 * t, P);
        }
    }
}

TEST(SqrtModPrime, LargePrimeWithHighTwoAdicity)
{
    // 2^64 - 2^32 + 1 has p - 1 divisible by 2^32
    const Integer p = qfprimes::pow_ui(2, 64) - qfprimes::pow_ui(2, 32) + 1;
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const Integer a = mod_floor(qftest::random_bits(rng, 64), p);
        const Integer sq = a * a % p;
        const Integer t = sqrt_mod_prime(sq, p);
        EXPECT_EQ(t * t % p, sq);
    }
}

TEST(Isqrt, Examples)
{
    EXPECT_EQ(isqrt(0), 0);
    EXPECT_EQ(isqrt(113), 10);
    EXPECT_EQ(isqrt(Integer("140737471578113")), 11863282);
    EXPECT_THROW(isqrt(-1), DomainError);
}

TEST(Isqrt, Bracketing)
{
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 100000; ++i) {
        const Integer n = qftest::random_bits(rng, 1 + rng() % 256);
        const Integer s = isqrt(n);
        ASSERT_LE(s * s, n);
        ASSERT_GT((s + 1) * (s + 1), n);
    }
}

TEST(EulerCriterion, AgreesWithJacobiBelow1000)
{
    // The full p < 10^4 sweep lives in the acceptance suite.
    for (std::uint64_t p : qftest::primes_below(1000)) {
        if (p == 2) continue;
        const Integer P = qfprimes::from_u64(p);
        for (std::uint64_t a = 0; a < p; ++a) {
            const Integer e = mod_pow(qfprimes::from_u64(a), (P - 1) / 2, P);
            const int expected = e == 0 ? 0 : (e == 1 ? 1 : -1);
            ASSERT_EQ(jacobi(qfprimes::from_u64(a), P), expected);
        }
    }
}
