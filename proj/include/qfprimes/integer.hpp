#pragma once

/**
 * @file integer.hpp
 * @brief Exact integer type shared by every qfprimes module.
 *
 * Integers are GMP `mpz_class` values. Nothing in the library rounds; every
 * quantity (norms, representations, discriminants) is carried exactly.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qfprimes {

using Integer = mpz_class;

/// Raised when an input lies outside an operation's mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline Integer parse_integer(std::string_view text)
{
    std::string s(text);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    if (s.empty() || s == "-") throw std::invalid_argument("empty integer literal");
    for (std::size_t i = (s.front() == '-') ? 1 : 0; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("not a decimal integer: " + std::string(text));
    }
    return Integer(s, 10);
}

inline std::string to_string(const Integer& n) { return n.get_str(10); }

inline Integer from_u64(std::uint64_t v)
{
    Integer r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

inline Integer from_i64(std::int64_t v)
{
    if (v >= 0) return from_u64(static_cast<std::uint64_t>(v));
    // two's-complement magnitude; safe for INT64_MIN
    Integer r = from_u64(~static_cast<std::uint64_t>(v) + 1u);
    return -r;
}

/// True when |n| fits in 64 unsigned bits and n >= 0.
inline bool fits_u64(const Integer& n)
{
    return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Integer& n)
{
    if (!fits_u64(n)) throw std::overflow_error("integer does not fit in uint64: " + to_string(n));
    std::uint64_t v = 0;
    std::size_t count = 0;
    mpz_export(&v, &count, 1, sizeof(v), 0, 0, n.get_mpz_t());
    return count == 0 ? 0 : v;
}

inline bool fits_i64(const Integer& n)
{
    static const Integer lo = from_i64(INT64_MIN);
    static const Integer hi = from_i64(INT64_MAX);
    return n >= lo && n <= hi;
}

inline std::int64_t to_i64(const Integer& n)
{
    if (!fits_i64(n)) throw std::overflow_error("integer does not fit in int64: " + to_string(n));
    if (sgn(n) >= 0) return static_cast<std::int64_t>(to_u64(n));
    Integer mag = -n;
    return static_cast<std::int64_t>(~to_u64(mag) + 1u);
}

/// Least non-negative residue of a modulo m (m > 0).
inline Integer mod_floor(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline unsigned long mod_ui(const Integer& a, unsigned long m)
{
    return mpz_fdiv_ui(a.get_mpz_t(), m);
}

inline bool divides(const Integer& d, const Integer& n)
{
    if (d == 0) return n == 0;
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer pow_ui(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

} // namespace qfprimes
