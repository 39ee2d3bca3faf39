#pragma once

/**
 * @file quadratic_forms.hpp
 * @brief Reduced positive definite binary quadratic forms, class numbers and
 *        the 2-torsion count of the form class group.
 */

#include "primality.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace qfprimes {

/// Discriminant of a quadratic field: m when m = 1 (mod 4), otherwise 4m. m squarefree, m not in {0, 1}.
inline Integer fundamental_discriminant(const Integer& m)
{
    if (m == 0 || m == 1) throw DomainError("fundamental_discriminant: m must not be 0 or 1");
    if (is_squarefree_bounded(abs(m)) != Tristate::Yes)
        throw DomainError("fundamental_discriminant: " + to_string(m) + " is not (provably) squarefree");
    return mod_ui(m, 4) == 1 ? m : Integer(4 * m);
}

/// A negative discriminant D = 0 or 1 (mod 4).
class Discriminant {
public:
    static constexpr std::int64_t kMaxMagnitude = std::int64_t{1} << 40;

    explicit Discriminant(std::int64_t d) : value_(d)
    {
        if (d >= 0) throw DomainError("discriminant must be negative, got " + std::to_string(d));
        if (d < -kMaxMagnitude) throw DomainError("discriminant magnitude too large: " + std::to_string(d));
        const std::int64_t r = ((d % 4) + 4) % 4;
        if (r != 0 && r != 1) throw DomainError("discriminant must be 0 or 1 mod 4, got " + std::to_string(d));
    }

    std::int64_t value() const { return value_; }

private:
    std::int64_t value_;
};

struct ReducedForm {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }
    bool is_ambiguous() const { return b == 0 || a == b || a == c; }
    auto operator<=>(const ReducedForm&) const = default;
};

/**
 * Every primitive reduced form of discriminant D, sorted by (a, b).
 * Reduced means -a < b <= a <= c with b >= 0 when a = c.
 */
inline std::vector<ReducedForm> reduced_forms(Discriminant disc)
{
    const std::int64_t D = disc.value();
    const std::int64_t a_max = to_i64(isqrt(from_i64(-D / 3)));
    std::vector<ReducedForm> forms;
    for (std::int64_t a = 1; a <= a_max; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if (((b - D) & 1) != 0) continue; // b = D (mod 2)
            const std::int64_t num = b * b - D;
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && a == c) continue;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            forms.push_back({a, b, c});
        }
    }
    std::sort(forms.begin(), forms.end());
    return forms;
}

inline std::int64_t class_number(Discriminant d)
{
    return static_cast<std::int64_t>(reduced_forms(d).size());
}

/// Ambiguous reduced classes, i.e. elements of order dividing 2 (identity included).
inline std::int64_t ambiguous_class_count(Discriminant d)
{
    const auto forms = reduced_forms(d);
    return std::count_if(forms.begin(), forms.end(), [](const ReducedForm& f) { return f.is_ambiguous(); });
}

/// Class group of order 4 with a single element of order 2, i.e. cyclic of order 4.
inline bool is_cyclic_quartic_classgroup(Discriminant d)
{
    const auto forms = reduced_forms(d);
    const auto amb = std::count_if(forms.begin(), forms.end(), [](const ReducedForm& f) { return f.is_ambiguous(); });
    return forms.size() == 4 && amb == 2;
}

} // namespace qfprimes
