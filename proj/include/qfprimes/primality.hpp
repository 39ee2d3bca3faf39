#pragma once

/**
 * @file primality.hpp
 * @brief Primality verdicts and bounded trial-division factoring.
 *
 * Below 2^64 every verdict is deterministic: trial division for small
 * values, Miller-Rabin with the first twelve prime bases otherwise (that
 * base set has no strong pseudoprime below 3.3e24). Larger values run
 * Baillie-PSW and report ProbablePrime when they pass.
 */

#include "arith.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qfprimes {

enum class Verdict { Prime, Composite, ProbablePrime };
enum class PrimalityMethod { TrialDivision, DeterministicMR, BPSW };

struct PrimalityVerdict {
    Integer value;
    Verdict verdict = Verdict::Composite;
    PrimalityMethod method = PrimalityMethod::TrialDivision;

    /// Prime or probable prime.
    bool is_prime() const { return verdict != Verdict::Composite; }
};

inline std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Prime: return "prime";
    case Verdict::ProbablePrime: return "probable";
    case Verdict::Composite: return "composite";
    }
    return "composite";
}

inline std::string_view to_string(PrimalityMethod m)
{
    switch (m) {
    case PrimalityMethod::TrialDivision: return "trial-division";
    case PrimalityMethod::DeterministicMR: return "deterministic-mr";
    case PrimalityMethod::BPSW: return "bpsw";
    }
    return "trial-division";
}

inline constexpr std::uint32_t kSieveLimit = 1'000'000;
inline constexpr std::uint32_t kDefaultFactorBound = 1'000'000;
inline constexpr std::uint64_t kTrialDivisionLimit = 1u << 24;

/// Primes up to kSieveLimit, built once; concurrent readers are safe.
inline std::span<const std::uint32_t> sieve_primes()
{
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kSieveLimit + 1, false);
        std::vector<std::uint32_t> out;
        out.reserve(78'498);
        for (std::uint32_t i = 2; i <= kSieveLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t{i} * i; j <= kSieveLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

/// Strong probable-prime test to base a; n odd, n > 3.
inline bool strong_probable_prime(const Integer& n, const Integer& a)
{
    Integer d = n - 1;
    const mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    const Integer base = mod_floor(a, n);
    if (base == 0) return true;
    Integer x = mod_pow(base, d, n);
    const Integer minus_one = n - 1;
    if (x == 1 || x == minus_one) return true;
    for (mp_bitcnt_t r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == minus_one) return true;
        if (x == 1) return false;
    }
    return false;
}

/**
 * Strong Lucas probable-prime test with Selfridge parameters
 * (D the first of 5, -7, 9, -11, ... with (D/n) = -1; P = 1; Q = (1-D)/4).
 * n odd, n > 3, not a perfect square.
 */
inline bool strong_lucas_probable_prime(const Integer& n)
{
    Integer D = 5;
    for (;;) {
        int j = jacobi(D, n);
        if (j == -1) break;
        if (j == 0) {
            Integer g = abs(D);
            if (g != n) return false;
        }
        D = sgn(D) > 0 ? Integer(-(D + 2)) : Integer(-D + 2);
    }
    const Integer Q = (1 - D) / 4;

    Integer d = n + 1;
    const mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    auto half = [&n](Integer v) {
        if (mpz_odd_p(v.get_mpz_t())) v += n;
        mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), 1);
        return mod_floor(v, n);
    };

    // Left-to-right binary ladder over the bits of d, starting from index 1.
    Integer U = 1;
    Integer V = 1; // V_1 = P
    Integer Qk = mod_floor(Q, n);
    const std::size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
    for (std::size_t i = bits - 1; i-- > 0;) {
        U = U * V % n;
        V = mod_floor(V * V - 2 * Qk, n);
        Qk = Qk * Qk % n;
        if (mpz_tstbit(d.get_mpz_t(), i)) {
            Integer u2 = half(U + V);                // P = 1
            Integer v2 = half(D * U + V);
            U = u2;
            V = v2;
            Qk = mod_floor(Qk * Q, n);
        }
    }

    if (U == 0 || V == 0) return true;
    for (mp_bitcnt_t r = 1; r < s; ++r) {
        V = mod_floor(V * V - 2 * Qk, n);
        if (V == 0) return true;
        Qk = Qk * Qk % n;
    }
    return false;
}

/// Baillie-PSW: small-prime screen, strong base-2 test, strong Lucas test.
inline bool bpsw_probable_prime(const Integer& n)
{
    if (n < 2) return false;
    for (std::uint32_t p : sieve_primes().first(168)) { // primes below 1000
        if (n == p) return true;
        if (mod_ui(n, p) == 0) return false;
    }
    if (!strong_probable_prime(n, 2)) return false;
    if (is_perfect_square(n)) return false;
    return strong_lucas_probable_prime(n);
}

/// Miller-Rabin with bases 2..37; deterministic for n < 3.3e24.
inline bool deterministic_miller_rabin(const Integer& n)
{
    static constexpr std::array<unsigned, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (unsigned b : bases) {
        if (n == b) return true;
        if (mod_ui(n, b) == 0) return false;
    }
    return std::all_of(bases.begin(), bases.end(),
                       [&n](unsigned b) { return strong_probable_prime(n, b); });
}

inline bool trial_division_is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint32_t p : sieve_primes()) {
        if (std::uint64_t{p} * p > n) return true;
        if (n % p == 0) return n == p;
    }
    // n exceeds kSieveLimit^2; fall back to odd divisors.
    for (std::uint64_t d = kSieveLimit + 1; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline PrimalityVerdict is_prime(const Integer& n)
{
    PrimalityVerdict v{n, Verdict::Composite, PrimalityMethod::TrialDivision};
    if (n < 2) return v;
    if (fits_u64(n)) {
        const std::uint64_t small = to_u64(n);
        if (small < kTrialDivisionLimit) {
            v.verdict = trial_division_is_prime(small) ? Verdict::Prime : Verdict::Composite;
            return v;
        }
        v.method = PrimalityMethod::DeterministicMR;
        v.verdict = deterministic_miller_rabin(n) ? Verdict::Prime : Verdict::Composite;
        return v;
    }
    v.method = PrimalityMethod::BPSW;
    v.verdict = bpsw_probable_prime(n) ? Verdict::ProbablePrime : Verdict::Composite;
    return v;
}

struct PrimePower {
    Integer prime;
    unsigned multiplicity = 0;

    bool operator==(const PrimePower&) const = default;
};

struct Factorization {
    std::vector<PrimePower> factors; // ascending primes
    Integer cofactor = 1;            // no prime factor <= bound
};

/**
 * Trial division of n by every prime <= bound. The cofactor left over has no
 * prime factor <= bound; when the search runs past sqrt(cofactor) the
 * cofactor is itself prime and is moved into the list if it is <= bound.
 */
inline Factorization small_factors(const Integer& n, const Integer& bound = kDefaultFactorBound)
{
    if (n == 0) throw DomainError("small_factors: n = 0");
    if (bound < 2) throw DomainError("small_factors: bound must be >= 2");

    Factorization out;
    Integer rest = abs(n);

    auto try_divisor = [&](const Integer& p) {
        unsigned e = 0;
        while (divides(p, rest)) {
            mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        if (e > 0) out.factors.push_back({p, e});
    };
    auto finish_if_prime = [&](const Integer& p) {
        if (p * p <= rest) return false;
        if (rest > 1 && rest <= bound) {
            out.factors.push_back({rest, 1});
            rest = 1;
        }
        return true;
    };

    bool done = false;
    for (std::uint32_t p : sieve_primes()) {
        const Integer pz = p;
        if (pz > bound || (done = finish_if_prime(pz))) break;
        try_divisor(pz);
    }
    if (!done && bound > kSieveLimit) {
        for (Integer d = kSieveLimit + 1; d <= bound; d += 2) {
            if (finish_if_prime(d)) break;
            try_divisor(d);
        }
    }
    out.cofactor = rest;
    return out;
}

enum class Tristate { Yes, No, Unknown };

inline std::string_view to_string(Tristate t)
{
    switch (t) {
    case Tristate::Yes: return "yes";
    case Tristate::No: return "no";
    case Tristate::Unknown: return "unknown";
    }
    return "unknown";
}

inline Tristate is_squarefree_bounded(const Integer& n, const Integer& bound = kDefaultFactorBound)
{
    if (n < 1) throw DomainError("is_squarefree_bounded: n must be >= 1");
    const Factorization f = small_factors(n, bound);
    for (const auto& pp : f.factors)
        if (pp.multiplicity > 1) return Tristate::No;
    if (f.cofactor == 1) return Tristate::Yes;
    if (is_perfect_square(f.cofactor)) return Tristate::No;
    // No factor <= bound, so a cofactor below (bound+1)^2 is prime.
    if (f.cofactor < (bound + 1) * (bound + 1)) return Tristate::Yes;
    if (is_prime(f.cofactor).verdict == Verdict::Prime) return Tristate::Yes;
    return Tristate::Unknown;
}

} // namespace qfprimes
