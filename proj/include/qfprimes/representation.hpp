#pragma once

/**
 * @file representation.hpp
 * @brief Solving n = x^2 + d*y^2: Cornacchia's descent for primes and an
 *        exhaustive search used as an independent oracle.
 */

#include "arith.hpp"
#include "primality.hpp"

#include <optional>
#include <stdexcept>

namespace qfprimes {

/// A solution of x^2 + d*y^2 = n with x, y >= 0.
struct Representation {
    Integer d;
    Integer n;
    Integer x;
    Integer y;

    bool holds() const { return x * x + d * y * y == n; }
    bool operator==(const Representation&) const = default;
};

namespace detail {

inline Representation checked(Representation r)
{
    if (sgn(r.x) < 0 || sgn(r.y) < 0 || !r.holds())
        throw std::logic_error("representation fails x^2 + d*y^2 = n for n = " + to_string(r.n));
    return r;
}

} // namespace detail

/**
 * Cornacchia's algorithm for a prime p coprime to d.
 *
 * Takes the root t of -d modulo p in (p/2, p), runs the Euclidean algorithm
 * on (p, t) until the remainder drops to isqrt(p) or below, and accepts when
 * (p - r^2)/d is a perfect square. For d = 1 the two solutions (x, y) and
 * (y, x) are ordered so that y <= x.
 *
 * Throws DomainError when d < 1, when p is composite or when p divides d.
 * A ProbablePrime p is accepted.
 */
inline std::optional<Representation> cornacchia(const Integer& d, const Integer& p)
{
    if (d < 1) throw DomainError("cornacchia: d must be >= 1");
    if (!is_prime(p).is_prime()) throw DomainError("cornacchia: " + to_string(p) + " is not prime");
    if (divides(p, d)) throw DomainError("cornacchia: p divides d");

    if (p == 2) {
        if (d == 1) return detail::checked({d, p, 1, 1});
        return std::nullopt;
    }

    const Integer minus_d = -d;
    if (jacobi(minus_d, p) != 1) return std::nullopt;

    const Integer limit = isqrt(p);
    Integer a = p;
    Integer b = sqrt_mod_prime(minus_d, p);
    while (b > limit) {
        Integer r = a % b;
        a = b;
        b = r;
    }

    const Integer rest = p - b * b;
    if (!divides(d, rest)) return std::nullopt;
    const Integer y2 = rest / d;
    if (!is_perfect_square(y2)) return std::nullopt;

    Representation rep{d, p, b, isqrt(y2)};
    if (d == 1 && rep.y > rep.x) std::swap(rep.x, rep.y);
    return detail::checked(rep);
}

/// Exhaustive search over y = 0 .. isqrt(n/d); returns the solution with the smallest y.
inline std::optional<Representation> represent_bruteforce(const Integer& d, const Integer& n)
{
    if (d < 1) throw DomainError("represent_bruteforce: d must be >= 1");
    if (sgn(n) < 0) throw DomainError("represent_bruteforce: n must be >= 0");

    const Integer y_max = isqrt(n / d);
    for (Integer y = 0; y <= y_max; ++y) {
        const Integer rest = n - d * y * y;
        if (is_perfect_square(rest)) return detail::checked({d, n, isqrt(rest), y});
    }
    return std::nullopt;
}

} // namespace qfprimes
