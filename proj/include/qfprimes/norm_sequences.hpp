#pragma once

/**
 * @file norm_sequences.hpp
 * @brief The prime families studied here: Mersenne numbers, Gaussian and
 *        Eisenstein Mersenne norms, and the norm of the Mersenne analog in
 *        Z[sqrt 2] built from alpha = 2 + sqrt 2.
 */

#include "arith.hpp"
#include "primality.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace qfprimes {

enum class NormSequenceKind { Mersenne, GaussianMersenne, EisensteinMersenne, Sqrt2Analog };

inline std::string_view to_string(NormSequenceKind k)
{
    switch (k) {
    case NormSequenceKind::Mersenne: return "mersenne";
    case NormSequenceKind::GaussianMersenne: return "gaussian";
    case NormSequenceKind::EisensteinMersenne: return "eisenstein";
    case NormSequenceKind::Sqrt2Analog: return "analog";
    }
    return "mersenne";
}

inline std::optional<NormSequenceKind> parse_kind(std::string_view s)
{
    if (s == "mersenne") return NormSequenceKind::Mersenne;
    if (s == "gaussian") return NormSequenceKind::GaussianMersenne;
    if (s == "eisenstein") return NormSequenceKind::EisensteinMersenne;
    if (s == "analog") return NormSequenceKind::Sqrt2Analog;
    return std::nullopt;
}

/// a + b*sqrt(2) with exact integer coordinates.
struct QuadInt2 {
    Integer a;
    Integer b;

    QuadInt2 conjugate() const { return {a, -b}; }
    Integer norm() const { return a * a - 2 * b * b; }

    friend QuadInt2 operator+(const QuadInt2& u, const QuadInt2& v) { return {u.a + v.a, u.b + v.b}; }
    friend QuadInt2 operator-(const QuadInt2& u, const QuadInt2& v) { return {u.a - v.a, u.b - v.b}; }
    friend QuadInt2 operator*(const QuadInt2& u, const QuadInt2& v)
    {
        return {u.a * v.a + 2 * u.b * v.b, u.a * v.b + u.b * v.a};
    }
    bool operator==(const QuadInt2&) const = default;
};

inline QuadInt2 pow(QuadInt2 base, unsigned long e)
{
    QuadInt2 r{1, 0};
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

/// Exact quotient u / v in Z[sqrt 2]; throws DomainError if v does not divide u.
inline QuadInt2 divide_exact(const QuadInt2& u, const QuadInt2& v)
{
    const Integer n = v.norm();
    if (n == 0) throw DomainError("divide_exact: zero divisor");
    const QuadInt2 t = u * v.conjugate();
    if (!divides(n, t.a) || !divides(n, t.b)) throw DomainError("divide_exact: quotient not integral");
    return {t.a / n, t.b / n};
}

namespace detail {

inline void require_prime_exponent(unsigned long p, const char* what)
{
    if (!is_prime(Integer(p)).is_prime())
        throw DomainError(std::string(what) + ": exponent " + std::to_string(p) + " is not prime");
}

} // namespace detail

inline Integer mersenne(unsigned long p) { return pow_ui(2, p) - 1; }

/// G_p = 2^p - (2/p) 2^((p+1)/2) + 1, the norm of (1+i)^p - 1; p an odd prime.
inline Integer gaussian_mersenne_norm(unsigned long p)
{
    if (p == 2) throw DomainError("gaussian_mersenne_norm: p = 2 is excluded");
    detail::require_prime_exponent(p, "gaussian_mersenne_norm");
    const int sym = jacobi(2, Integer(p));
    return pow_ui(2, p) - sym * pow_ui(2, (p + 1) / 2) + 1;
}

/// E_p = 3^p - (3/p) 3^((p+1)/2) + 1, the norm of (1-w)^p - 1; p prime >= 5.
inline Integer eisenstein_mersenne_norm(unsigned long p)
{
    if (p == 2 || p == 3) throw DomainError("eisenstein_mersenne_norm: p in {2, 3} is excluded");
    detail::require_prime_exponent(p, "eisenstein_mersenne_norm");
    const int sym = jacobi(3, Integer(p));
    return pow_ui(3, p) - sym * pow_ui(3, (p + 1) / 2) + 1;
}

inline const QuadInt2 kAnalogBase{2, 1}; // 2 + sqrt 2

/// (alpha^p - 1) / (alpha - 1) for alpha = 2 + sqrt 2. The divisor 1 + sqrt 2 is a unit.
inline QuadInt2 sqrt2_analog(unsigned long p)
{
    const QuadInt2 one{1, 0};
    return divide_exact(pow(kAnalogBase, p) - one, kAnalogBase - one);
}

/// |norm((alpha^p - 1) / (alpha - 1))|.
inline Integer sqrt2_analog_norm(unsigned long p)
{
    detail::require_prime_exponent(p, "sqrt2_analog_norm");
    return abs(sqrt2_analog(p).norm());
}

/// Smallest exponent each family is defined for.
inline unsigned long first_exponent(NormSequenceKind k)
{
    switch (k) {
    case NormSequenceKind::GaussianMersenne: return 3;
    case NormSequenceKind::EisensteinMersenne: return 5;
    default: return 2;
    }
}

inline Integer sequence_value(NormSequenceKind k, unsigned long p)
{
    switch (k) {
    case NormSequenceKind::Mersenne: return mersenne(p);
    case NormSequenceKind::GaussianMersenne: return gaussian_mersenne_norm(p);
    case NormSequenceKind::EisensteinMersenne: return eisenstein_mersenne_norm(p);
    case NormSequenceKind::Sqrt2Analog: return sqrt2_analog_norm(p);
    }
    throw DomainError("sequence_value: unknown kind");
}

} // namespace qfprimes
