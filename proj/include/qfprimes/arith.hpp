#pragma once

/**
 * @file arith.hpp
 * @brief Modular arithmetic primitives: powers, quadratic residue symbols,
 *        square roots modulo a prime and integer square roots.
 *
 * All functions are pure and safe to call concurrently.
 */

#include "integer.hpp"

#include <utility>

namespace qfprimes {

/// Thrown by sqrt_mod_prime when the argument is a quadratic non-residue.
class NoSquareRoot : public DomainError {
public:
    using DomainError::DomainError;
};

/// base^exponent reduced into [0, modulus).
inline Integer mod_pow(const Integer& base, const Integer& exponent, const Integer& modulus)
{
    if (modulus < 1) throw DomainError("mod_pow: modulus must be >= 1");
    if (sgn(exponent) < 0) throw DomainError("mod_pow: negative exponent");
    if (modulus == 1) return 0;
    Integer b = mod_floor(base, modulus);
    Integer r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

namespace detail {

// Jacobi symbol for 0 <= a < n, n odd positive. Binary reciprocity descent.
inline int jacobi_reduced(Integer a, Integer n)
{
    int result = 1;
    while (a != 0) {
        mp_bitcnt_t twos = mpz_scan1(a.get_mpz_t(), 0);
        if (twos > 0) {
            mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), twos);
            unsigned long n8 = mod_ui(n, 8);
            if ((twos & 1) && (n8 == 3 || n8 == 5)) result = -result;
        }
        std::swap(a, n);
        if (mod_ui(a, 4) == 3 && mod_ui(n, 4) == 3) result = -result;
        a = mod_floor(a, n);
    }
    return n == 1 ? result : 0;
}

} // namespace detail

/// Jacobi symbol (a/n) for odd n >= 1; the Legendre symbol when n is prime.
inline int jacobi(const Integer& a, const Integer& n)
{
    if (n < 1 || mpz_even_p(n.get_mpz_t()))
        throw DomainError("jacobi: modulus must be odd and >= 1, got " + to_string(n));
    return detail::jacobi_reduced(mod_floor(a, n), n);
}

/// Kronecker symbol (a/n), defined for every pair of integers.
inline int kronecker(const Integer& a, const Integer& n)
{
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;

    int result = 1;
    Integer m = n;
    if (sgn(m) < 0) {
        m = -m;
        if (sgn(a) < 0) result = -result;
    }

    mp_bitcnt_t twos = mpz_scan1(m.get_mpz_t(), 0);
    if (twos > 0) {
        if (mpz_even_p(a.get_mpz_t())) return 0;
        unsigned long a8 = mod_ui(a, 8);
        if ((twos & 1) && (a8 == 3 || a8 == 5)) result = -result;
        mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), twos);
    }
    return result * detail::jacobi_reduced(mod_floor(a, m), m);
}

/// Largest s with s*s <= n.
inline Integer isqrt(const Integer& n)
{
    if (sgn(n) < 0) throw DomainError("isqrt: negative argument");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Integer& n)
{
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/**
 * Square root of a modulo an odd prime p (Tonelli-Shanks).
 *
 * Of the two roots {t, p - t} the larger is returned, so a nonzero result
 * always lies in (p/2, p). Throws NoSquareRoot for a non-residue.
 */
inline Integer sqrt_mod_prime(const Integer& a, const Integer& p)
{
    if (p == 2) return mod_floor(a, p);
    if (p < 3 || mpz_even_p(p.get_mpz_t())) throw DomainError("sqrt_mod_prime: modulus must be an odd prime");
    if (is_perfect_square(p)) throw DomainError("sqrt_mod_prime: modulus is a perfect square, not prime");

    const Integer r0 = mod_floor(a, p);
    if (r0 == 0) return 0;
    if (detail::jacobi_reduced(r0, p) != 1)
        throw NoSquareRoot("sqrt_mod_prime: " + to_string(a) + " is not a square modulo " + to_string(p));

    Integer q = p - 1;
    const mp_bitcnt_t s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);

    Integer root;
    if (s == 1) {
        root = mod_pow(r0, (p + 1) / 4, p);
    } else {
        Integer z = 2;
        while (detail::jacobi_reduced(z, p) != -1) ++z;

        Integer c = mod_pow(z, q, p);
        root = mod_pow(r0, (q + 1) / 2, p);
        Integer t = mod_pow(r0, q, p);
        mp_bitcnt_t m = s;
        while (t != 1) {
            mp_bitcnt_t i = 0;
            Integer t2 = t;
            while (t2 != 1) {
                t2 = t2 * t2 % p;
                if (++i == m) throw DomainError("sqrt_mod_prime: modulus is not prime");
            }
            Integer b = c;
            for (mp_bitcnt_t k = 0; k + i + 1 < m; ++k) b = b * b % p;
            root = root * b % p;
            c = b * b % p;
            t = t * c % p;
            m = i;
        }
    }

    if (root * root % p != r0) throw DomainError("sqrt_mod_prime: modulus is not prime");
    Integer other = p - root;
    return root > other ? root : other;
}

} // namespace qfprimes
