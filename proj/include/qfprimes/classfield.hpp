#pragma once

/**
 * @file classfield.hpp
 * @brief Decision procedures behind the existence of unramified cyclic
 *        quartic extensions of imaginary quadratic fields.
 *
 * Nothing here constructs a field. The procedures check the arithmetic
 * conditions: how a prime splits in a quadratic field (Kronecker symbol of
 * the field discriminant), which factorizations k = m*n satisfy the
 * necessary splitting conditions, and whether a^2 - m*b^2 = n*k^2 = 1 (mod 4)
 * has a small solution.
 */

#include "quadratic_forms.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace qfprimes {

enum class SplitBehavior { Splits, Inert, Ramified };

inline std::string_view to_string(SplitBehavior s)
{
    switch (s) {
    case SplitBehavior::Splits: return "splits";
    case SplitBehavior::Inert: return "inert";
    case SplitBehavior::Ramified: return "ramified";
    }
    return "ramified";
}

/// Trial division up to the bound could not decide what was needed.
class IncompleteFactorization : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Behaviour of the rational prime q in Q(sqrt m).
inline SplitBehavior split_behavior(const Integer& q, const Integer& m)
{
    if (!is_prime(q).is_prime()) throw DomainError("split_behavior: " + to_string(q) + " is not prime");
    switch (kronecker(fundamental_discriminant(m), q)) {
    case 1: return SplitBehavior::Splits;
    case -1: return SplitBehavior::Inert;
    default: return SplitBehavior::Ramified;
    }
}

namespace detail {

// Distinct prime divisors of a squarefree |k|, ascending.
inline std::vector<Integer> squarefree_primes(const Integer& k, const Integer& bound)
{
    const Integer mag = abs(k);
    switch (is_squarefree_bounded(mag, bound)) {
    case Tristate::No: throw DomainError(to_string(k) + " is not squarefree");
    case Tristate::Unknown:
        throw IncompleteFactorization("cannot decide squarefreeness of " + to_string(k) + " with factor bound " +
                                      to_string(bound));
    case Tristate::Yes: break;
    }
    const Factorization f = small_factors(mag, bound);
    std::vector<Integer> primes;
    for (const auto& pp : f.factors) primes.push_back(pp.prime);
    if (f.cofactor > 1) primes.push_back(f.cofactor); // proven prime by the check above
    std::sort(primes.begin(), primes.end());
    return primes;
}

inline bool all_split(const std::vector<Integer>& primes, const Integer& field)
{
    const Integer disc = fundamental_discriminant(field);
    return std::all_of(primes.begin(), primes.end(), [&](const Integer& q) { return kronecker(disc, q) == 1; });
}

} // namespace detail

/// k = m * n with m, n != 1.
struct FactorPair {
    Integer m;
    Integer n;
    bool operator==(const FactorPair&) const = default;
};

/**
 * Factorizations k = m*n (signed, m != 1, n != 1) with m = 1 (mod 4), every
 * prime factor of n split in Q(sqrt m) and every prime factor of m split in
 * Q(sqrt n). These are necessary conditions only. Sorted by m.
 */
inline std::vector<FactorPair> vau1_admissible_factorizations(const Integer& k,
                                                               const Integer& bound = kDefaultFactorBound)
{
    if (k == 0) throw DomainError("vau1_admissible_factorizations: k = 0");
    const std::vector<Integer> primes = detail::squarefree_primes(k, bound);
    if (primes.size() > 30) throw DomainError("vau1_admissible_factorizations: too many prime factors");

    std::vector<FactorPair> out;
    const std::uint64_t subsets = std::uint64_t{1} << primes.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        std::vector<Integer> in_m, in_n;
        Integer dv = 1;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (mask >> i & 1) {
                in_m.push_back(primes[i]);
                dv *= primes[i];
            } else {
                in_n.push_back(primes[i]);
            }
        }
        for (const Integer& m : {dv, Integer(-dv)}) {
            const Integer n = k / m;
            if (m == 1 || n == 1 || mod_ui(m, 4) != 1) continue;
            if (detail::all_split(in_n, m) && detail::all_split(in_m, n)) out.push_back({m, n});
        }
    }
    std::sort(out.begin(), out.end(), [](const FactorPair& l, const FactorPair& r) { return l.m < r.m; });
    return out;
}

/// Solution of a^2 - m*b^2 = n*k^2 = 1 (mod 4).
struct Vau2Witness {
    Integer m;
    Integer n;
    Integer a;
    Integer b;
    Integer k;

    bool valid() const
    {
        const Integer lhs = a * a - m * b * b;
        return lhs == n * k * k && mod_ui(lhs, 4) == 1 && mod_ui(m, 4) == 2 && gcd(n, m) == 1 && k >= 1 &&
               is_squarefree_bounded(abs(n)) == Tristate::Yes;
    }
    bool operator==(const Vau2Witness&) const = default;
};

/**
 * Lexicographically smallest (a, b) in [0, bound]^2 with a^2 - m*b^2 = n*k^2,
 * k >= 1, and a^2 - m*b^2 = 1 (mod 4). An empty result only means that no
 * witness exists up to the bound.
 */
inline std::optional<Vau2Witness> vau2_search(const Integer& m, const Integer& n, const Integer& bound)
{
    if (mod_ui(m, 4) != 2) throw DomainError("vau2_search: m must be 2 mod 4");
    if (n == 0 || is_squarefree_bounded(abs(n)) != Tristate::Yes)
        throw DomainError("vau2_search: n must be a nonzero squarefree integer");
    if (gcd(n, m) != 1) throw DomainError("vau2_search: gcd(n, m) must be 1");
    if (bound < 1) throw DomainError("vau2_search: bound must be >= 1");

    for (Integer a = 0; a <= bound; ++a) {
        for (Integer b = 0; b <= bound; ++b) {
            const Integer v = a * a - m * b * b;
            if (v == 0 || mod_ui(v, 4) != 1 || !divides(n, v)) continue;
            const Integer k2 = v / n;
            if (k2 < 1 || !is_perfect_square(k2)) continue;
            Vau2Witness w{m, n, a, b, isqrt(k2)};
            if (!w.valid()) throw std::logic_error("vau2_search produced an invalid witness");
            return w;
        }
    }
    return std::nullopt;
}

/// Product of the primes dividing n to an odd power.
inline Integer squarefree_core(const Integer& n, const Integer& bound = kDefaultFactorBound)
{
    if (n < 1) throw DomainError("squarefree_core: n must be >= 1");
    const Factorization f = small_factors(n, bound);
    Integer core = 1;
    for (const auto& pp : f.factors)
        if (pp.multiplicity % 2 == 1) core *= pp.prime;
    if (f.cofactor > 1) {
        if (is_perfect_square(f.cofactor)) return core;
        if (f.cofactor >= (bound + 1) * (bound + 1) && is_prime(f.cofactor).verdict != Verdict::Prime)
            throw IncompleteFactorization("cannot compute squarefree core of " + to_string(n));
        core *= f.cofactor;
    }
    return core;
}

/**
 * Everything the existence question for a quartic extension of Q(sqrt(-N*d))
 * depends on. The field uses the squarefree core of N; the congruence modulus
 * is N itself (so N = 8 and N = 2 give the same field).
 */
struct H4Report {
    Integer d;
    Integer congruence_modulus;
    Integer field_n;
    Integer k;
    std::int64_t discriminant = 0;
    std::int64_t class_number = 0;
    std::int64_t ambiguous_classes = 0;
    bool cyclic_c4 = false;
    bool four_divides_h = false;
    std::vector<FactorPair> vau1;
    bool vau2_applicable = false;
    Integer vau2_bound;
    std::optional<Vau2Witness> vau2;
};

inline H4Report h4_report(const Integer& d, const Integer& N, const Integer& vau2_bound = 100)
{
    if (d < 1 || N < 1) throw DomainError("h4_report: d and N must be >= 1");

    H4Report r;
    r.d = d;
    r.congruence_modulus = N;
    r.field_n = squarefree_core(N);
    r.k = -r.field_n * d;
    r.discriminant = to_i64(fundamental_discriminant(r.k));

    const Discriminant disc(r.discriminant);
    const auto forms = reduced_forms(disc);
    r.class_number = static_cast<std::int64_t>(forms.size());
    r.ambiguous_classes = std::count_if(forms.begin(), forms.end(), [](const ReducedForm& f) { return f.is_ambiguous(); });
    r.cyclic_c4 = r.class_number == 4 && r.ambiguous_classes == 2;
    r.four_divides_h = r.class_number % 4 == 0;

    r.vau1 = vau1_admissible_factorizations(r.k);

    r.vau2_bound = vau2_bound;
    r.vau2_applicable = mod_ui(r.field_n, 4) == 2;
    if (r.vau2_applicable) r.vau2 = vau2_search(r.field_n, -d, vau2_bound);
    return r;
}

} // namespace qfprimes
