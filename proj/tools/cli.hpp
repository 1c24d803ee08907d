#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "braidsplit/braid_characters.hpp"
#include "braidsplit/error.hpp"
#include "braidsplit/ff_oracle.hpp"
#include "braidsplit/format.hpp"
#include "braidsplit/irreducible.hpp"
#include "braidsplit/partition.hpp"
#include "braidsplit/rat_poly.hpp"
#include "braidsplit/splitting_measure.hpp"
#include "braidsplit/tables.hpp"
#include "braidsplit/verify.hpp"

namespace braidsplit::cli {

enum ExitCode : int { success = 0, verification_failure = 1, usage_error = 2 };

/// Largest n accepted by the per-partition subcommands.
inline constexpr int max_subcommand_n = 20;

namespace detail {

inline void check_n(int n, int lo = 1, int hi = max_subcommand_n) {
    if (n < lo || n > hi) {
        throw UsageError("--n must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
    }
}

/// --lambda wins over --n; with --n every partition of n is selected.
inline std::vector<Partition> select_partitions(const std::string& lambda, std::optional<int> n) {
    if (!lambda.empty()) {
        Partition p = parse_partition(lambda);
        check_n(p.size());
        return {p};
    }
    if (!n) throw UsageError("either --lambda or --n is required");
    check_n(*n);
    return enumerate_partitions(*n);
}

inline int cmd_measure(const std::string& lambda, std::optional<int> n, const std::string& z_text, bool per_element,
                       OutputFormat fmt, std::ostream& out) {
    const auto partitions = select_partitions(lambda, n);
    std::optional<mpq_class> z;
    if (!z_text.empty()) z = parse_rational(z_text);

    std::vector<std::vector<std::string>> rows;
    nlohmann::json jrows = nlohmann::json::array();
    std::vector<std::string> header{"partition", "class_size", "centralizer_order", "alpha"};
    if (z) header.push_back(per_element ? "value_per_element" : "value");
    rows.push_back(header);
    for (const auto& p : partitions) {
        const auto cd = class_data(p);
        const auto m = splitting_coefficients(p);
        std::vector<std::string> alpha;
        for (const auto& a : m.alpha) alpha.push_back(to_string(a));
        std::string joined;
        for (std::size_t i = 0; i < alpha.size(); ++i) joined += (i ? (fmt == OutputFormat::csv ? ";" : " ") : "") + alpha[i];
        std::vector<std::string> row{fmt == OutputFormat::text ? bracketed(p) : to_string(p), cd.class_size.get_str(),
                                     cd.centralizer_order.get_str(), fmt == OutputFormat::text ? "[" + joined + "]" : joined};
        nlohmann::json jr = {{"partition", to_string(p)},
                             {"class_size", json_integer(cd.class_size)},
                             {"centralizer_order", json_integer(cd.centralizer_order)},
                             {"alpha", alpha}};
        if (z) {
            const mpq_class v = measure_value(m, *z, per_element);
            row.push_back(to_string(v));
            jr["value"] = to_string(v);
        }
        rows.push_back(row);
        jrows.push_back(jr);
    }
    switch (fmt) {
        case OutputFormat::text: out << text_table(rows); break;
        case OutputFormat::csv:
            for (const auto& r : rows) out << csv_row(r);
            break;
        case OutputFormat::json: {
            nlohmann::json j = {{"rows", jrows}};
            if (z) {
                j["z"] = to_string(*z);
                j["per_element"] = per_element;
            }
            out << j.dump(2) << "\n";
            break;
        }
    }
    return success;
}

inline int cmd_cycle_poly(const std::string& lambda, std::optional<int> n, OutputFormat fmt, std::ostream& out) {
    const auto partitions = select_partitions(lambda, n);
    nlohmann::json jrows = nlohmann::json::array();
    std::vector<std::vector<std::string>> rows{{"partition", "N_lambda(z)"}};
    if (fmt == OutputFormat::csv) out << csv_row({"partition", "coefficients"});
    for (const auto& p : partitions) {
        const RatPoly N = cycle_polynomial(p);
        const auto coeffs = coefficient_strings(N);
        switch (fmt) {
            case OutputFormat::text: rows.push_back({bracketed(p), format_polynomial(N)}); break;
            case OutputFormat::csv: {
                std::string joined;
                for (std::size_t i = 0; i < coeffs.size(); ++i) joined += (i ? ";" : "") + coeffs[i];
                out << csv_row({to_string(p), joined});
                break;
            }
            case OutputFormat::json: jrows.push_back({{"partition", to_string(p)}, {"coefficients", coeffs}}); break;
        }
    }
    if (fmt == OutputFormat::text) out << text_table(rows);
    if (fmt == OutputFormat::json) out << nlohmann::json{{"rows", jrows}}.dump(2) << "\n";
    return success;
}

inline int cmd_character(bool cohomology, int n, std::optional<int> k, OutputFormat fmt, std::ostream& out) {
    check_n(n);
    const auto& table = braid_table(n);
    const int top = cohomology ? n : n - 1;
    int lo = 0, hi = top;
    if (k) {
        if (*k < 0 || *k > top) throw UsageError("--k must lie in 0.." + std::to_string(top));
        lo = hi = *k;
    }
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"partition"};
    for (int j = lo; j <= hi; ++j) header.push_back((cohomology ? "h^" : "chi^") + std::to_string(j));
    rows.push_back(header);
    nlohmann::json jrows = nlohmann::json::array();
    for (const auto& p : enumerate_partitions(n)) {
        std::vector<std::string> row{fmt == OutputFormat::text ? bracketed(p) : to_string(p)};
        nlohmann::json values = nlohmann::json::array();
        for (int j = lo; j <= hi; ++j) {
            const mpq_class& v = cohomology ? table.h(j)(p) : table.chi(j)(p);
            row.push_back(to_string(v));
            values.push_back(json_integer(v));
        }
        rows.push_back(row);
        jrows.push_back({{"partition", to_string(p)}, {"values", values}});
    }
    switch (fmt) {
        case OutputFormat::text: out << text_table(rows); break;
        case OutputFormat::csv:
            for (const auto& r : rows) out << csv_row(r);
            break;
        case OutputFormat::json: {
            nlohmann::json j = {{"n", n}, {"kind", cohomology ? "h" : "chi"}, {"rows", jrows}};
            if (k) j["k"] = *k;
            out << j.dump(2) << "\n";
            break;
        }
    }
    return success;
}

inline int cmd_decompose(int n, std::optional<int> k, const std::string& which, int m, OutputFormat fmt,
                         std::ostream& out) {
    check_n(n, 1, 12);
    ClassFunction f(n);
    CharacterKind kind = CharacterKind::genuine;
    if (which == "h" || which == "a") {
        if (!k) throw UsageError("--k is required for --which " + which);
        f = which == "h" ? braid_table(n).h(*k) : braid_table(n).chi(*k);
    } else if (which == "b" || which == "b-signed") {
        if (m < 1 || n < 2) throw UsageError("--which " + which + " needs n >= 2 and --m >= 1");
        if (which == "b") {
            f = b_character(n, m);
        } else {
            f = b_character_signed(n, m).difference();
            kind = CharacterKind::virtual_char;
        }
    } else {
        throw UsageError("--which must be one of h, a, b, b-signed");
    }
    const auto d = decompose(f, kind);
    switch (fmt) {
        case OutputFormat::text:
            out << "dimension " << d.dimension().get_str() << "\n";
            for (const auto& [label, mult] : d.terms) out << mult.get_str() << "·" << bracketed(label) << "\n";
            break;
        case OutputFormat::csv:
            out << csv_row({"partition", "multiplicity"});
            for (const auto& [label, mult] : d.terms) out << csv_row({to_string(label), mult.get_str()});
            break;
        case OutputFormat::json: {
            nlohmann::json j = {{"n", n},
                                {"k", k ? nlohmann::json(*k) : nlohmann::json(nullptr)},
                                {"which", which},
                                {"terms", braidsplit::detail::decomposition_json(d)},
                                {"dimension", json_integer(d.dimension())}};
            if (which == "b" || which == "b-signed") j["m"] = m;
            out << j.dump(2) << "\n";
            break;
        }
    }
    return success;
}

inline int cmd_oracle(std::uint64_t p, int n, unsigned workers, OutputFormat fmt, std::ostream& out) {
    const auto report = census_vs_theory(p, n, workers);
    switch (fmt) {
        case OutputFormat::text: {
            out << "# p=" << p << " n=" << n << " square-free total " << report.total << " (expected "
                << report.expected_total << ")\n";
            std::vector<std::vector<std::string>> rows{{"partition", "count", "N_lambda(p)", "ok"}};
            for (const auto& r : report.rows) {
                rows.push_back({bracketed(r.lambda), std::to_string(r.count), to_string(r.theory),
                                (r.ok && r.measure_ok) ? "yes" : "NO"});
            }
            out << text_table(rows);
            out << (report.ok() ? "PASS" : "FAIL") << "\n";
            break;
        }
        case OutputFormat::csv:
            out << csv_row({"partition", "count", "theory", "ok"});
            for (const auto& r : report.rows) {
                out << csv_row({to_string(r.lambda), std::to_string(r.count), to_string(r.theory),
                                (r.ok && r.measure_ok) ? "true" : "false"});
            }
            break;
        case OutputFormat::json: {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& r : report.rows) {
                rows.push_back({{"partition", to_string(r.lambda)},
                                {"count", r.count},
                                {"theory", json_integer(r.theory)},
                                {"ok", r.ok && r.measure_ok}});
            }
            out << nlohmann::json{{"p", p}, {"n", n}, {"total", report.total}, {"rows", rows}}.dump(2) << "\n";
            break;
        }
    }
    return report.ok() ? success : verification_failure;
}

}  // namespace detail

/// Parses argv and dispatches; returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Splitting measures, pure braid group characters and their verification", "braidsplit"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    };

    std::string lambda, z_text, which = "a", table_name, suite_name;
    std::optional<int> n, k, max_n;
    int m = 1;
    std::uint64_t p = 2;
    unsigned workers = 1;
    bool per_element = false, no_timing = false;

    auto* measure = app.add_subcommand("measure", "Splitting measure coefficients per conjugacy class");
    measure->add_option("--n", n, "Emit every partition of n");
    measure->add_option("--lambda", lambda, "Single partition, e.g. 3,1,1");
    measure->add_option("--z", z_text, "Evaluate at the rational z = p/q");
    measure->add_flag("--per-element", per_element, "Divide class totals by the class size");
    add_format(measure);

    auto* cycle = app.add_subcommand("cycle-poly", "Cycle polynomials N_lambda(z)");
    cycle->add_option("--n", n, "Emit every partition of n");
    cycle->add_option("--lambda", lambda, "Single partition");
    add_format(cycle);

    auto* hchar = app.add_subcommand("hchar", "Characters of H^k(P_n, Q)");
    hchar->add_option("--n", n)->required();
    hchar->add_option("--k", k, "Single degree");
    add_format(hchar);

    auto* achar = app.add_subcommand("achar", "Characters of A_n^k");
    achar->add_option("--n", n)->required();
    achar->add_option("--k", k, "Single degree");
    add_format(achar);

    auto* dec = app.add_subcommand("decompose", "Irreducible decomposition of a character");
    dec->add_option("--n", n)->required();
    dec->add_option("--k", k);
    dec->add_option("--which", which, "h, a, b or b-signed")->check(CLI::IsMember({"h", "a", "b", "b-signed"}));
    dec->add_option("--m", m, "Weight base for B_{n,m}");
    add_format(dec);

    auto* oracle = app.add_subcommand("oracle", "Brute-force factorization census over F_p");
    oracle->add_option("--p", p)->required();
    oracle->add_option("--n", n)->required();
    oracle->add_option("--workers", workers);
    add_format(oracle);

    auto* table = app.add_subcommand("table", "Reproduce a reference table");
    table->add_option("name", table_name, "measures, betti, a-dims, h1-decomp or a2-decomp")->required();
    table->add_option("--n", n, "Single n (measures)");
    table->add_option("--max-n", max_n, "Largest n");
    add_format(table);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite_name, "tables, identities, support, regular-rep, stability, oracle or all")
        ->required();
    verify->add_option("--max-n", max_n, "Largest n for measure and character checks");
    verify->add_option("--workers", workers, "Census worker threads");
    verify->add_flag("--no-timing", no_timing, "Omit elapsed times for byte-stable output");
    add_format(verify);

    std::vector<const char*> argv{"braidsplit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage_error;
    }

    try {
        const OutputFormat fmt = parse_format(format);
        if (*measure) return detail::cmd_measure(lambda, n, z_text, per_element, fmt, out);
        if (*cycle) return detail::cmd_cycle_poly(lambda, n, fmt, out);
        if (*hchar) return detail::cmd_character(true, n.value(), k, fmt, out);
        if (*achar) return detail::cmd_character(false, n.value(), k, fmt, out);
        if (*dec) return detail::cmd_decompose(n.value(), k, which, m, fmt, out);
        if (*oracle) return detail::cmd_oracle(p, n.value(), workers, fmt, out);
        if (*table) {
            const TableName t = parse_table_name(table_name);
            NRange range;
            if (n) {
                range = {*n, *n};
            } else if (t == TableName::measures && !max_n) {
                range = {4, 5};
            } else {
                range = {table_min_n(t), max_n.value_or(9)};
            }
            out << emit_table(t, range, fmt);
            return success;
        }
        if (*verify) {
            SuiteLimits limits;
            if (max_n) limits.max_n = *max_n;
            limits.workers = workers;
            const auto reports = run_suite(parse_suite_name(suite_name), limits);
            out << render_reports(reports, fmt, !no_timing);
            for (const auto& r : reports) {
                if (!r.passed()) return verification_failure;
            }
            return success;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return verification_failure;
    }
    return usage_error;
}

}  // namespace braidsplit::cli
