#pragma once

/**
 * @file qfverify_app.hpp
 * @brief Command-line front end for qfprimes.
 *
 *   scan gaussian|eisenstein|mersenne|analog [--max-exponent P] [--d D]
 *        [--format json|csv] [--out FILE] [--threads K]
 *   represent --d D --n N [--modulus M]
 *   classnumber --disc D
 *   h4 --d D --N N [--vau2-bound B]
 *   equiv --d D --primes p1,p2,... [--format json|csv] [--out FILE]
 *
 * Exit status: 0 every applicable claim passed, 1 some claim failed,
 * 2 usage or internal error.
 */

#include <qfprimes/qfprimes.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace qfverify {

using qfprimes::Integer;
using json = nlohmann::ordered_json;

inline constexpr int kExitUsage = 2;
inline constexpr unsigned long kMaxBruteforceRoot = 10'000'000;

namespace detail {

inline std::vector<Integer> parse_list(const std::string& csv)
{
    std::vector<Integer> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const auto end = std::min(csv.find(',', start), csv.size());
        const auto item = csv.substr(start, end - start);
        if (!item.empty()) out.push_back(qfprimes::parse_integer(item));
        start = end + 1;
    }
    return out;
}

inline int write_output(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err)
{
    if (path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot open " << path << " for writing\n";
        return kExitUsage;
    }
    f << text;
    return f ? 0 : kExitUsage;
}

inline qfprimes::Format parse_format(const std::string& s)
{
    return s == "csv" ? qfprimes::Format::Csv : qfprimes::Format::Json;
}

inline int emit(const qfprimes::Report& report, const std::string& format, const std::string& path,
                std::ostream& out, std::ostream& err)
{
    if (int rc = write_output(qfprimes::emit_report(report, parse_format(format)), path, out, err)) return rc;
    return qfprimes::exit_code(report);
}

inline json represent_json(const Integer& d, const Integer& n, unsigned long modulus)
{
    const auto verdict = qfprimes::is_prime(n);
    json j;
    j["d"] = qfprimes::to_string(d);
    j["n"] = qfprimes::to_string(n);
    j["primality"] = std::string(qfprimes::to_string(verdict.verdict));

    std::optional<qfprimes::Representation> rep;
    if (verdict.is_prime() && !qfprimes::divides(n, d)) {
        j["method"] = "cornacchia";
        rep = qfprimes::cornacchia(d, n);
    } else {
        if (sgn(n) < 0 || qfprimes::isqrt(n / d) > kMaxBruteforceRoot)
            throw qfprimes::DomainError("n is not prime and too large for exhaustive search");
        j["method"] = "bruteforce";
        rep = qfprimes::represent_bruteforce(d, n);
    }
    if (rep) {
        j["representation"] = {{"x", qfprimes::to_string(rep->x)}, {"y", qfprimes::to_string(rep->y)}};
        j["modulus"] = modulus;
        j["x_mod"] = qfprimes::mod_ui(rep->x, modulus);
        j["y_mod"] = qfprimes::mod_ui(rep->y, modulus);
    } else {
        j["representation"] = nullptr;
    }
    return j;
}

inline json classnumber_json(std::int64_t disc)
{
    const qfprimes::Discriminant D(disc);
    const auto forms = qfprimes::reduced_forms(D);
    const auto h = static_cast<std::int64_t>(forms.size());
    const auto amb = std::count_if(forms.begin(), forms.end(), [](const auto& f) { return f.is_ambiguous(); });
    json j;
    j["discriminant"] = disc;
    j["class_number"] = h;
    j["ambiguous_classes"] = amb;
    j["cyclic_c4"] = h == 4 && amb == 2;
    j["four_divides_h"] = h % 4 == 0;
    auto list = json::array();
    for (const auto& f : forms) list.push_back({f.a, f.b, f.c});
    j["forms"] = std::move(list);
    return j;
}

inline json h4_json(const qfprimes::H4Report& r)
{
    using qfprimes::to_string;
    json j;
    j["d"] = to_string(r.d);
    j["N"] = to_string(r.congruence_modulus);
    j["field_N"] = to_string(r.field_n);
    j["k"] = to_string(r.k);
    j["discriminant"] = r.discriminant;
    j["class_number"] = r.class_number;
    j["ambiguous_classes"] = r.ambiguous_classes;
    j["cyclic_c4"] = r.cyclic_c4;
    j["four_divides_h"] = r.four_divides_h;
    auto pairs = json::array();
    for (const auto& fp : r.vau1) pairs.push_back({{"m", to_string(fp.m)}, {"n", to_string(fp.n)}});
    j["necessary_factorizations"] = std::move(pairs);
    json v;
    v["applicable"] = r.vau2_applicable;
    v["bound"] = to_string(r.vau2_bound);
    if (r.vau2) {
        v["status"] = "found";
        v["witness"] = {{"m", to_string(r.vau2->m)}, {"n", to_string(r.vau2->n)}, {"a", to_string(r.vau2->a)},
                        {"b", to_string(r.vau2->b)}, {"k", to_string(r.vau2->k)}};
    } else {
        v["status"] = r.vau2_applicable ? "no witness <= bound" : "not applicable";
        v["witness"] = nullptr;
    }
    j["vau2"] = std::move(v);
    return j;
}

} // namespace detail

/// Runs one command line (without the program name).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"qfverify: primes of the form x^2 + d*y^2 with N | x or N | y"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(qfprimes::kToolVersion));

    std::string family, format = "json", out_path, d_text, n_text, N_text, primes_text;
    unsigned long max_exponent = 0, modulus = 8;
    unsigned threads = 0;
    std::int64_t disc = 0;
    std::string vau2_bound = "100";

    auto* scan = app.add_subcommand("scan", "bounded verification scan over one prime family");
    scan->add_option("family", family, "gaussian | eisenstein | mersenne | analog")
        ->required()
        ->check(CLI::IsMember({"gaussian", "eisenstein", "mersenne", "analog"}));
    scan->add_option("--max-exponent", max_exponent, "largest exponent p to examine");
    scan->add_option("--d", d_text, "mersenne only: 7 (default) or 31");
    scan->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    scan->add_option("--out", out_path, "write the report here instead of stdout");
    scan->add_option("--threads", threads, "worker threads (default: all cores)");

    auto* represent = app.add_subcommand("represent", "solve n = x^2 + d*y^2");
    represent->add_option("--d", d_text)->required();
    represent->add_option("--n", n_text)->required();
    represent->add_option("--modulus", modulus, "report x and y modulo this")->check(CLI::PositiveNumber);

    auto* classnumber = app.add_subcommand("classnumber", "class number and reduced forms of a negative discriminant");
    classnumber->add_option("--disc", disc)->required();

    auto* h4 = app.add_subcommand("h4", "quartic-extension conditions for Q(sqrt(-N*d))");
    h4->add_option("--d", d_text)->required();
    h4->add_option("--N", N_text)->required();
    h4->add_option("--vau2-bound", vau2_bound);

    auto* equiv = app.add_subcommand("equiv", "empirical x^2+dy^2 <-> x^2+2dy^2 check");
    equiv->add_option("--d", d_text)->required();
    equiv->add_option("--primes", primes_text, "comma-separated list")->required();
    equiv->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    equiv->add_option("--out", out_path);
    equiv->add_option("--threads", threads);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*scan) {
            qfprimes::Report report;
            if (family == "gaussian") {
                report = qfprimes::scan_gaussian(max_exponent ? max_exponent : qfprimes::kDefaultMaxExponent, threads);
            } else if (family == "eisenstein") {
                report = qfprimes::scan_eisenstein(max_exponent ? max_exponent : qfprimes::kDefaultMaxExponent, threads);
            } else if (family == "mersenne") {
                const Integer d = d_text.empty() ? Integer(7) : qfprimes::parse_integer(d_text);
                report = qfprimes::scan_mersenne(max_exponent ? max_exponent : qfprimes::kDefaultMersenneMaxExponent, d,
                                                 threads);
            } else {
                report = qfprimes::scan_sqrt2_analog(
                    max_exponent ? max_exponent : qfprimes::kDefaultMersenneMaxExponent, threads);
            }
            return detail::emit(report, format, out_path, out, err);
        }
        if (*represent) {
            const auto j = detail::represent_json(qfprimes::parse_integer(d_text), qfprimes::parse_integer(n_text), modulus);
            out << j.dump(2) << '\n';
            return 0;
        }
        if (*classnumber) {
            out << detail::classnumber_json(disc).dump(2) << '\n';
            return 0;
        }
        if (*h4) {
            const auto r = qfprimes::h4_report(qfprimes::parse_integer(d_text), qfprimes::parse_integer(N_text),
                                               qfprimes::parse_integer(vau2_bound));
            out << detail::h4_json(r).dump(2) << '\n';
            return 0;
        }
        if (*equiv) {
            const auto report = qfprimes::check_equivalence(qfprimes::parse_integer(d_text),
                                                            detail::parse_list(primes_text), threads);
            return detail::emit(report, format, out_path, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace qfverify
