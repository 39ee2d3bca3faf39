#pragma once

/**
 * @file verify.hpp
 * @brief Bounded verification scans over the prime families and
 *        deterministic JSON / CSV reports.
 *
 * A scan walks every prime exponent up to a bound, evaluates the family
 * value, decides primality, solves x^2 + d*y^2 = value, and records the
 * status of each congruence claim. Exponents outside a claim's hypotheses
 * are recorded as "na" rather than dropped. Records are computed in
 * parallel and always emitted in ascending exponent order.
 */

#include "classfield.hpp"
#include "norm_sequences.hpp"
#include "representation.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace qfprimes {

inline constexpr std::string_view kToolName = "qfverify";
inline constexpr std::string_view kToolVersion = "1.0.0";

enum class ClaimStatus { Pass, Fail, NotApplicable };

inline std::string_view to_string(ClaimStatus s)
{
    switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::NotApplicable: return "na";
    }
    return "na";
}

struct Claim {
    std::string id;
    ClaimStatus status = ClaimStatus::NotApplicable;
    bool operator==(const Claim&) const = default;
};

struct VerificationRecord {
    std::string kind;
    std::uint64_t p = 0;
    Integer value;
    PrimalityVerdict primality;
    std::string congruence_class;
    std::optional<Representation> representation;
    std::optional<Representation> representation_2d; // equivalence checks only
    std::optional<unsigned long> modulus;
    std::optional<unsigned long> x_mod;
    std::optional<unsigned long> y_mod;
    std::vector<Claim> claims;
    std::string note;

    const Claim* claim(std::string_view id) const
    {
        auto it = std::find_if(claims.begin(), claims.end(), [&](const Claim& c) { return c.id == id; });
        return it == claims.end() ? nullptr : &*it;
    }
};

struct Summary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t na = 0;
    bool operator==(const Summary&) const = default;
};

struct Report {
    std::string tool{kToolName};
    std::string version{kToolVersion};
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::vector<VerificationRecord> records;
    Summary summary;

    bool passed() const { return summary.fail == 0; }
};

inline Summary summarize(const std::vector<VerificationRecord>& records)
{
    Summary s;
    for (const auto& r : records) {
        for (const auto& c : r.claims) {
            switch (c.status) {
            case ClaimStatus::Pass: ++s.pass; break;
            case ClaimStatus::Fail: ++s.fail; break;
            case ClaimStatus::NotApplicable: ++s.na; break;
            }
        }
    }
    return s;
}

inline Report make_report(nlohmann::ordered_json params, std::vector<VerificationRecord> records)
{
    Report r;
    r.params = std::move(params);
    r.records = std::move(records);
    r.summary = summarize(r.records);
    return r;
}

/// Process exit status for a finished report: 0 all applicable claims pass, 1 otherwise.
inline int exit_code(const Report& r) { return r.passed() ? 0 : 1; }

// --------------------------------------------------------------------------
// Scan plans

struct ClaimCheck {
    std::string id;
    bool needs_representation = true;
    std::function<bool(const Integer& value, const Representation* rep)> holds;
};

struct ScanPlan {
    NormSequenceKind kind = NormSequenceKind::Mersenne;
    Integer d;
    unsigned long modulus = 8;
    std::function<std::string(unsigned long p)> congruence_class;
    std::function<bool(unsigned long p, const Integer& value)> in_gate;
    std::vector<ClaimCheck> claims;
};

inline constexpr std::string_view kExistsClaim = "representation.exists";

namespace detail {

inline std::function<std::string(unsigned long)> residue_of_p(unsigned long m)
{
    return [m](unsigned long p) { return "p mod " + std::to_string(m) + " = " + std::to_string(p % m); };
}

inline ClaimCheck rep_claim(std::string id, std::function<bool(const Representation&)> f)
{
    return {std::move(id), true, [f = std::move(f)](const Integer&, const Representation* rep) { return f(*rep); }};
}

inline bool x_divisible_by_8(const Representation& r) { return mod_ui(r.x, 8) == 0; }

} // namespace detail

/// G_p = x^2 + 7y^2 for p > 7: x = +-1 (mod 8), 4 | y, 8 | y.
inline ScanPlan gaussian_plan()
{
    ScanPlan plan;
    plan.kind = NormSequenceKind::GaussianMersenne;
    plan.d = 7;
    plan.modulus = 8;
    plan.congruence_class = detail::residue_of_p(3);
    plan.in_gate = [](unsigned long p, const Integer&) { return p > 7 && p % 3 != 0; };
    plan.claims = {
        detail::rep_claim("lemma3.3.x", [](const Representation& r) {
            const auto x8 = mod_ui(r.x, 8);
            return x8 == 1 || x8 == 7;
        }),
        detail::rep_claim("lemma3.3.4y", [](const Representation& r) { return mod_ui(r.y, 4) == 0; }),
        detail::rep_claim("thm3.4.8y", [](const Representation& r) { return mod_ui(r.y, 8) == 0; }),
    };
    return plan;
}

/// E_p = x^2 + 3y^2 for p >= 7, p = 1 (mod 6): 7 | y, x^2 = 1 (mod 7), E_p = 1 (mod 14).
inline ScanPlan eisenstein_plan()
{
    ScanPlan plan;
    plan.kind = NormSequenceKind::EisensteinMersenne;
    plan.d = 3;
    plan.modulus = 7;
    plan.congruence_class = detail::residue_of_p(6);
    plan.in_gate = [](unsigned long p, const Integer&) { return p >= 7 && p % 6 == 1; };
    plan.claims = {
        detail::rep_claim("eisenstein.7y", [](const Representation& r) { return mod_ui(r.y, 7) == 0; }),
        detail::rep_claim("eisenstein.x2mod7", [](const Representation& r) { return mod_ui(r.x * r.x, 7) == 1; }),
        {"eisenstein.mod14", false, [](const Integer& value, const Representation*) { return mod_ui(value, 14) == 1; }},
    };
    return plan;
}

/**
 * M_p = x^2 + d*y^2. For d = 7 (exponents p = 1 mod 3): 8 | x and
 * y = +-3 (mod 8). For d = 31 (exponents with (-31 / M_p) = 1): 8 | x.
 */
inline ScanPlan mersenne_plan(const Integer& d)
{
    ScanPlan plan;
    plan.kind = NormSequenceKind::Mersenne;
    plan.d = d;
    plan.modulus = 8;
    plan.congruence_class = detail::residue_of_p(3);
    if (d == 7) {
        plan.in_gate = [](unsigned long p, const Integer&) { return p % 3 == 1; };
        plan.claims = {
            detail::rep_claim("mersenne.8x", detail::x_divisible_by_8),
            detail::rep_claim("mersenne.y3mod8", [](const Representation& r) {
                const auto y8 = mod_ui(r.y, 8);
                return y8 == 3 || y8 == 5;
            }),
        };
    } else if (d == 31) {
        plan.in_gate = [](unsigned long, const Integer& value) {
            return mpz_odd_p(value.get_mpz_t()) && jacobi(-31, value) == 1;
        };
        plan.claims = {detail::rep_claim("mersenne.8x", detail::x_divisible_by_8)};
    } else {
        throw DomainError("mersenne scan supports d = 7 or d = 31, got " + to_string(d));
    }
    return plan;
}

/// Norm of (alpha^p - 1)/(alpha - 1), alpha = 2 + sqrt 2, p = +-1 (mod 6): 8 | x in x^2 + 7y^2.
inline ScanPlan analog_plan()
{
    ScanPlan plan;
    plan.kind = NormSequenceKind::Sqrt2Analog;
    plan.d = 7;
    plan.modulus = 8;
    plan.congruence_class = detail::residue_of_p(6);
    plan.in_gate = [](unsigned long p, const Integer&) { return p % 6 == 1 || p % 6 == 5; };
    plan.claims = {detail::rep_claim("analog.8x", detail::x_divisible_by_8)};
    return plan;
}

/// One exponent's full verdict under a plan.
inline VerificationRecord evaluate_exponent(const ScanPlan& plan, unsigned long p)
{
    VerificationRecord rec;
    rec.kind = std::string(to_string(plan.kind));
    rec.p = p;
    rec.value = sequence_value(plan.kind, p);
    rec.primality = is_prime(rec.value);
    rec.congruence_class = plan.congruence_class(p);
    rec.modulus = plan.modulus;

    auto all_na = [&] {
        rec.claims.push_back({std::string(kExistsClaim), ClaimStatus::NotApplicable});
        for (const auto& c : plan.claims) rec.claims.push_back({c.id, ClaimStatus::NotApplicable});
    };

    if (!rec.primality.is_prime()) {
        rec.note = "value is composite";
        all_na();
        return rec;
    }
    if (divides(rec.value, plan.d)) {
        rec.note = "value divides d";
        all_na();
        return rec;
    }

    rec.representation = cornacchia(plan.d, rec.value);
    if (rec.representation) {
        rec.x_mod = mod_ui(rec.representation->x, plan.modulus);
        rec.y_mod = mod_ui(rec.representation->y, plan.modulus);
    }

    const bool gate = plan.in_gate(p, rec.value);
    if (!gate) {
        rec.note = "exponent outside claim hypotheses";
        all_na();
        return rec;
    }

    const Representation* rep = rec.representation ? &*rec.representation : nullptr;
    ClaimStatus exists = ClaimStatus::Pass;
    if (!rep) {
        // With one class of forms of discriminant -4d, (-d / value) = 1 forces a representation.
        const bool expected = jacobi(-plan.d, rec.value) == 1 &&
                              class_number(Discriminant(to_i64(Integer(-4 * plan.d)))) == 1;
        exists = expected ? ClaimStatus::Fail : ClaimStatus::NotApplicable;
        rec.note = expected ? "no representation although -d is a square modulo the value"
                            : "value is not represented by x^2 + d*y^2";
    }
    rec.claims.push_back({std::string(kExistsClaim), exists});

    for (const auto& c : plan.claims) {
        ClaimStatus s = ClaimStatus::NotApplicable;
        if (!c.needs_representation || rep) s = c.holds(rec.value, rep) ? ClaimStatus::Pass : ClaimStatus::Fail;
        rec.claims.push_back({c.id, s});
    }
    return rec;
}

inline unsigned resolve_threads(unsigned requested)
{
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluate f(i) for i in [0, n) on up to `threads` workers; results keep index order.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, unsigned threads, F f)
{
    std::vector<T> out(n);
    const unsigned workers = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(n, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n && !failed.load();) {
                try {
                    out[i] = f(i);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
    return out;
}

inline std::vector<unsigned long> prime_exponents(unsigned long lo, unsigned long hi)
{
    std::vector<unsigned long> out;
    for (unsigned long p = std::max(lo, 2ul); p <= hi; ++p)
        if (trial_division_is_prime(p)) out.push_back(p);
    return out;
}

inline Report run_scan(const ScanPlan& plan, unsigned long p_max, unsigned threads = 0)
{
    const auto exponents = prime_exponents(first_exponent(plan.kind), p_max);
    auto records = parallel_map<VerificationRecord>(exponents.size(), threads,
                                                    [&](std::size_t i) { return evaluate_exponent(plan, exponents[i]); });

    nlohmann::ordered_json params;
    params["family"] = std::string(to_string(plan.kind));
    params["max_exponent"] = p_max;
    params["d"] = to_string(plan.d);
    params["modulus"] = plan.modulus;
    return make_report(std::move(params), std::move(records));
}

inline constexpr unsigned long kDefaultMaxExponent = 200;
inline constexpr unsigned long kDefaultMersenneMaxExponent = 127;

inline Report scan_gaussian(unsigned long p_max = kDefaultMaxExponent, unsigned threads = 0)
{
    return run_scan(gaussian_plan(), p_max, threads);
}

inline Report scan_eisenstein(unsigned long p_max = kDefaultMaxExponent, unsigned threads = 0)
{
    return run_scan(eisenstein_plan(), p_max, threads);
}

inline Report scan_mersenne(unsigned long p_max = kDefaultMersenneMaxExponent, const Integer& d = 7,
                            unsigned threads = 0)
{
    return run_scan(mersenne_plan(d), p_max, threads);
}

inline Report scan_sqrt2_analog(unsigned long p_max = kDefaultMersenneMaxExponent, unsigned threads = 0)
{
    return run_scan(analog_plan(), p_max, threads);
}

inline constexpr std::string_view kEquivalenceClaim = "equiv.d_2d";

/**
 * Empirical check of "q = x^2 + d*y^2 iff q = x^2 + 2d*y^2" for each listed
 * prime q. Record p is the 1-based position in the list.
 */
inline Report check_equivalence(const Integer& d, const std::vector<Integer>& primes, unsigned threads = 0)
{
    if (d < 1 || is_squarefree_bounded(d) != Tristate::Yes) throw DomainError("check_equivalence: d must be squarefree");
    if (mod_ui(d, 4) == 2) throw DomainError("check_equivalence: d must be 1 or 3 mod 4");
    const Integer d2 = 2 * d;

    auto records = parallel_map<VerificationRecord>(primes.size(), threads, [&](std::size_t i) {
        VerificationRecord rec;
        rec.kind = "equivalence";
        rec.p = i + 1;
        rec.value = primes[i];
        rec.primality = is_prime(primes[i]);
        rec.congruence_class = "empirical";
        ClaimStatus s = ClaimStatus::NotApplicable;
        if (!rec.primality.is_prime()) {
            rec.note = "entry is not prime";
        } else if (divides(rec.value, d2)) {
            rec.note = "entry divides 2d";
        } else {
            rec.representation = cornacchia(d, rec.value);
            rec.representation_2d = cornacchia(d2, rec.value);
            s = rec.representation.has_value() == rec.representation_2d.has_value() ? ClaimStatus::Pass
                                                                                    : ClaimStatus::Fail;
        }
        rec.claims.push_back({std::string(kEquivalenceClaim), s});
        return rec;
    });

    nlohmann::ordered_json params;
    params["check"] = "equivalence";
    params["d"] = to_string(d);
    params["count"] = primes.size();
    return make_report(std::move(params), std::move(records));
}

// --------------------------------------------------------------------------
// Serialization

enum class Format { Json, Csv };

namespace detail {

inline nlohmann::ordered_json representation_json(const std::optional<Representation>& r, const Integer& value)
{
    if (!r) return nullptr;
    if (r->n != value || !r->holds())
        throw std::logic_error("record representation does not reproduce its value " + to_string(value));
    nlohmann::ordered_json j;
    j["d"] = to_i64(r->d);
    j["x"] = to_string(r->x);
    j["y"] = to_string(r->y);
    return j;
}

template <typename T>
nlohmann::ordered_json optional_json(const std::optional<T>& v)
{
    if (!v) return nullptr;
    return *v;
}

inline std::string optional_text(const std::optional<unsigned long>& v) { return v ? std::to_string(*v) : ""; }

} // namespace detail

inline nlohmann::ordered_json to_json(const VerificationRecord& r)
{
    nlohmann::ordered_json j;
    j["kind"] = r.kind;
    j["p"] = r.p;
    j["value"] = to_string(r.value);
    j["primality"] = std::string(to_string(r.primality.verdict));
    j["congruence_class"] = r.congruence_class;
    j["representation"] = detail::representation_json(r.representation, r.value);
    if (r.kind == "equivalence") j["representation_2d"] = detail::representation_json(r.representation_2d, r.value);
    j["modulus"] = detail::optional_json(r.modulus);
    j["x_mod"] = detail::optional_json(r.x_mod);
    j["y_mod"] = detail::optional_json(r.y_mod);
    auto claims = nlohmann::ordered_json::array();
    for (const auto& c : r.claims) claims.push_back({{"id", c.id}, {"status", std::string(to_string(c.status))}});
    j["claims"] = std::move(claims);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline nlohmann::ordered_json to_json(const Report& report)
{
    nlohmann::ordered_json j;
    j["tool"] = report.tool;
    j["version"] = report.version;
    j["params"] = report.params;
    auto records = nlohmann::ordered_json::array();
    for (const auto& r : report.records) records.push_back(to_json(r));
    j["records"] = std::move(records);
    j["summary"] = {{"pass", report.summary.pass}, {"fail", report.summary.fail}, {"na", report.summary.na}};
    j["verdict"] = report.passed() ? "pass" : "fail";
    return j;
}

inline std::string emit_report(const Report& report, Format format)
{
    if (format == Format::Json) return to_json(report).dump(2) + "\n";

    std::ostringstream os;
    os << "kind,p,value,primality,congruence_class,d,x,y,modulus,x_mod,y_mod,claims\n";
    for (const auto& r : report.records) {
        // same end-to-end check as the JSON path
        detail::representation_json(r.representation, r.value);
        os << r.kind << ',' << r.p << ',' << to_string(r.value) << ',' << to_string(r.primality.verdict) << ','
           << r.congruence_class << ',';
        if (r.representation)
            os << to_string(r.representation->d) << ',' << to_string(r.representation->x) << ','
               << to_string(r.representation->y);
        else
            os << ",,";
        os << ',' << detail::optional_text(r.modulus) << ',' << detail::optional_text(r.x_mod) << ','
           << detail::optional_text(r.y_mod) << ',';
        for (std::size_t i = 0; i < r.claims.size(); ++i)
            os << (i ? ";" : "") << r.claims[i].id << '=' << to_string(r.claims[i].status);
        os << '\n';
    }
    return os.str();
}

} // namespace qfprimes
