#include "test_support.hpp"

#include <qfprimes/norm_sequences.hpp>

#include <gtest/gtest.h>

using namespace qfprimes;

namespace {

// Direct evaluation in Z[i]: norm of (1+i)^p - 1.
Integer gaussian_norm_direct(unsigned long p)
{
    Integer re = 1, im = 0;
    for (unsigned long i = 0; i < p; ++i) {
        Integer r2 = re - im; // (re + im i)(1 + i)
        Integer i2 = re + im;
        re = r2;
        im = i2;
    }
    re -= 1;
    return re * re + im * im;
}

// Direct evaluation in Z[w], w^2 = -1 - w: norm of (1-w)^p - 1 is a^2 - ab + b^2.
Integer eisenstein_norm_direct(unsigned long p)
{
    Integer a = 1, b = 0;
    for (unsigned long i = 0; i < p; ++i) {
        Integer a2 = a + b; // (a + b w)(1 - w) = (a + b) + (2b - a) w
        Integer b2 = 2 * b - a;
        a = a2;
        b = b2;
    }
    a -= 1;
    return a * a - a * b + b * b;
}

} // namespace

TEST(Mersenne, Examples)
{
    EXPECT_EQ(mersenne(2), 3);
    EXPECT_EQ(mersenne(31), 2147483647);
    EXPECT_EQ(mersenne(7), 127);
}

TEST(Mersenne, SevenModEight)
{
    for (std::uint64_t p : qftest::primes_below(300))
        if (p >= 3) EXPECT_EQ(mod_ui(mersenne(p), 8), 7u);
}

TEST(GaussianMersenne, Examples)
{
    EXPECT_EQ(gaussian_mersenne_norm(7), 113);
    EXPECT_EQ(gaussian_mersenne_norm(47), Integer("140737471578113"));
    EXPECT_EQ(gaussian_mersenne_norm(3), 13);
    EXPECT_EQ(gaussian_mersenne_norm(5), 41);
    EXPECT_EQ(gaussian_mersenne_norm(73), Integer("9444732965601851473921"));
    EXPECT_EQ(gaussian_mersenne_norm(113), Integer("10384593717069655112945804582584321"));
}

TEST(GaussianMersenne, Errors)
{
    EXPECT_THROW(gaussian_mersenne_norm(2), DomainError);
    EXPECT_THROW(gaussian_mersenne_norm(9), DomainError);
    EXPECT_THROW(gaussian_mersenne_norm(1), DomainError);
}

TEST(GaussianMersenne, ClosedFormMatchesGaussianIntegerNorm)
{
    for (std::uint64_t p : qftest::primes_below(258)) {
        if (p == 2) continue;
        const Integer g = gaussian_mersenne_norm(p);
        ASSERT_EQ(g, gaussian_norm_direct(p)) << p;
        if (p > 3) ASSERT_EQ(mod_ui(g, 8), 1u) << p;
        if (p > 7) ASSERT_EQ(mod_ui(g, 32), 1u) << p;
    }
}

TEST(EisensteinMersenne, Examples)
{
    EXPECT_EQ(eisenstein_mersenne_norm(7), 2269);
    EXPECT_EQ(eisenstein_mersenne_norm(19), 1162320517);
    EXPECT_EQ(eisenstein_mersenne_norm(5), 271);
    EXPECT_EQ(eisenstein_mersenne_norm(79), Integer("49269609804781974450852068861184694669"));
}

TEST(EisensteinMersenne, Errors)
{
    EXPECT_THROW(eisenstein_mersenne_norm(2), DomainError);
    EXPECT_THROW(eisenstein_mersenne_norm(3), DomainError);
    EXPECT_THROW(eisenstein_mersenne_norm(25), DomainError);
}

TEST(EisensteinMersenne, ClosedFormMatchesEisensteinNorm)
{
    for (std::uint64_t p : qftest::primes_below(258))
        if (p >= 5) ASSERT_EQ(eisenstein_mersenne_norm(p), eisenstein_norm_direct(p)) << p;
}

TEST(QuadInt2, RingLaws)
{
    std::mt19937_64 rng(17);
    auto rnd = [&] {
        return QuadInt2{qftest::random_bits(rng, 40) - qftest::random_bits(rng, 40),
                        qftest::random_bits(rng, 40) - qftest::random_bits(rng, 40)};
    };
    for (int i = 0; i < 500; ++i) {
        const QuadInt2 u = rnd(), v = rnd(), w = rnd();
        EXPECT_EQ(u * v, v * u);
        EXPECT_EQ((u * v) * w, u * (v * w));
        EXPECT_EQ(u * (v + w), u * v + u * w);
        EXPECT_EQ((u * v).norm(), u.norm() * v.norm());
    }
    EXPECT_EQ((QuadInt2{1, 2} * QuadInt2{3, 4}), (QuadInt2{1 * 3 + 2 * 2 * 4, 1 * 4 + 2 * 3}));
}

TEST(QuadInt2, ExactDivision)
{
    const QuadInt2 unit{1, 1}; // 1 + sqrt 2, norm -1
    EXPECT_EQ(unit.norm(), -1);
    EXPECT_EQ(divide_exact(QuadInt2{5, 3} * unit, unit), (QuadInt2{5, 3}));
    EXPECT_THROW(divide_exact(QuadInt2{1, 0}, QuadInt2{2, 0}), DomainError);
    EXPECT_THROW(divide_exact(QuadInt2{1, 0}, QuadInt2{0, 0}), DomainError);
}

TEST(Sqrt2Analog, Examples)
{
    EXPECT_EQ(sqrt2_analog(2), (QuadInt2{3, 1}));
    EXPECT_EQ(sqrt2_analog(3), (QuadInt2{9, 5}));
    EXPECT_EQ(sqrt2_analog(5), (QuadInt2{97, 67}));
    EXPECT_EQ(sqrt2_analog_norm(2), 7);
    EXPECT_EQ(sqrt2_analog_norm(3), 31);
    EXPECT_EQ(sqrt2_analog_norm(5), 431);
    EXPECT_THROW(sqrt2_analog_norm(4), DomainError);
}

TEST(Sqrt2Analog, GeometricSumIdentity)
{
    // (alpha^p - 1)/(alpha - 1) = 1 + alpha + ... + alpha^(p-1)
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 31ul}) {
        QuadInt2 sum{0, 0}, power{1, 0};
        for (unsigned long i = 0; i < p; ++i) {
            sum = sum + power;
            power = power * kAnalogBase;
        }
        EXPECT_EQ(sqrt2_analog(p), sum) << p;
    }
}

TEST(SequenceValue, Dispatch)
{
    EXPECT_EQ(sequence_value(NormSequenceKind::Mersenne, 7), 127);
    EXPECT_EQ(sequence_value(NormSequenceKind::GaussianMersenne, 7), 113);
    EXPECT_EQ(sequence_value(NormSequenceKind::EisensteinMersenne, 7), 2269);
    EXPECT_EQ(sequence_value(NormSequenceKind::Sqrt2Analog, 5), 431);
    for (auto k : {NormSequenceKind::Mersenne, NormSequenceKind::GaussianMersenne,
                   NormSequenceKind::EisensteinMersenne, NormSequenceKind::Sqrt2Analog})
        EXPECT_EQ(parse_kind(to_string(k)), k);
    EXPECT_FALSE(parse_kind("fermat").has_value());
}
