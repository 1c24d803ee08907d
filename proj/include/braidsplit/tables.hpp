#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "braidsplit/braid_characters.hpp"
#include "braidsplit/error.hpp"
#include "braidsplit/format.hpp"
#include "braidsplit/irreducible.hpp"
#include "braidsplit/partition.hpp"
#include "braidsplit/splitting_measure.hpp"

namespace braidsplit {

enum class TableName { measures, betti, a_dims, h1_decomp, a2_decomp };

inline TableName parse_table_name(std::string_view s) {
    if (s == "measures") return TableName::measures;
    if (s == "betti") return TableName::betti;
    if (s == "a-dims") return TableName::a_dims;
    if (s == "h1-decomp") return TableName::h1_decomp;
    if (s == "a2-decomp") return TableName::a2_decomp;
    throw UsageError("unknown table '" + std::string(s) + "'");
}

inline std::string to_string(TableName t) {
    switch (t) {
        case TableName::measures: return "measures";
        case TableName::betti: return "betti";
        case TableName::a_dims: return "a-dims";
        case TableName::h1_decomp: return "h1-decomp";
        case TableName::a2_decomp: return "a2-decomp";
    }
    return "?";
}

/// Largest n accepted by the table emitters.
struct TableLimits {
    int max_character_n = 12;
    int max_decomposition_n = 9;
};

struct NRange {
    int lo = 1;
    int hi = 1;
};

/// Smallest n at which a table has a meaningful row.
inline int table_min_n(TableName t) {
    switch (t) {
        case TableName::h1_decomp: return 2;
        case TableName::a2_decomp: return 3;
        default: return 1;
    }
}

/// "1/24(1 - 5/z + 6/z^2)": 1/z_lambda times the integer Laurent polynomial.
inline std::string format_measure(const SplittingMeasure& m) {
    const mpz_class z = class_data(m.lambda).centralizer_order;
    std::string body;
    int terms = 0;
    for (std::size_t k = 0; k < m.alpha.size(); ++k) {
        const mpq_class scaled = m.alpha[k] * z;
        if (scaled == 0) continue;
        mpz_class c = scaled.get_num();
        const bool negative = c < 0;
        if (negative) c = -c;
        if (terms == 0) {
            if (negative) body += "-";
        } else {
            body += negative ? " - " : " + ";
        }
        body += c.get_str();
        if (k >= 1) body += "/z";
        if (k >= 2) body += "^" + std::to_string(k);
        ++terms;
    }
    if (z == 1) return body.empty() ? "0" : body;
    if (terms == 1 && body == "1") return "1/" + z.get_str();
    return "1/" + z.get_str() + "(" + body + ")";
}

namespace detail {

inline void check_range(TableName t, NRange r, const TableLimits& limits) {
    const int cap = (t == TableName::h1_decomp || t == TableName::a2_decomp) ? limits.max_decomposition_n
                                                                              : limits.max_character_n;
    if (r.lo < 1 || r.hi < r.lo || r.hi > cap) {
        throw UsageError("table " + to_string(t) + " accepts 1 <= n <= " + std::to_string(cap) + ", got " +
                         std::to_string(r.lo) + ".." + std::to_string(r.hi));
    }
}

inline std::string emit_measures(NRange r, OutputFormat fmt) {
    nlohmann::json tables = nlohmann::json::array();
    std::string out;
    for (int n = r.lo; n <= r.hi; ++n) {
        std::vector<std::vector<std::string>> rows;
        nlohmann::json jrows = nlohmann::json::array();
        if (fmt == OutputFormat::text) {
            out += "# nu*_{" + std::to_string(n) + ",z}(C_lambda); rows in reverse lexicographic partition order\n";
            rows.push_back({"lambda", "|C_lambda|", "z_lambda", "nu*_{" + std::to_string(n) + ",z}(C_lambda)"});
        } else if (fmt == OutputFormat::csv) {
            if (n == r.lo) out += csv_row({"n", "partition", "class_size", "centralizer_order", "alpha"});
        }
        for (const auto& lambda : enumerate_partitions(n)) {
            const auto cd = class_data(lambda);
            const auto m = splitting_coefficients(lambda);
            std::vector<std::string> alpha;
            for (const auto& a : m.alpha) alpha.push_back(to_string(a));
            switch (fmt) {
                case OutputFormat::text:
                    rows.push_back({bracketed(lambda), cd.class_size.get_str(), cd.centralizer_order.get_str(),
                                    format_measure(m)});
                    break;
                case OutputFormat::csv: {
                    std::string joined;
                    for (std::size_t i = 0; i < alpha.size(); ++i) joined += (i ? ";" : "") + alpha[i];
                    out += csv_row({std::to_string(n), to_string(lambda), cd.class_size.get_str(),
                                    cd.centralizer_order.get_str(), joined});
                    break;
                }
                case OutputFormat::json:
                    jrows.push_back({{"partition", to_string(lambda)},
                                     {"class_size", json_integer(cd.class_size)},
                                     {"centralizer_order", json_integer(cd.centralizer_order)},
                                     {"alpha", alpha}});
                    break;
            }
        }
        if (fmt == OutputFormat::text) {
            out += text_table(rows);
            if (n < r.hi) out += "\n";
        }
        if (fmt == OutputFormat::json) tables.push_back({{"n", n}, {"rows", jrows}});
    }
    if (fmt == OutputFormat::json) {
        nlohmann::json j = {{"table", "measures"}, {"order", "reverse-lexicographic"}, {"tables", tables}};
        return j.dump(2) + "\n";
    }
    return out;
}

/// Triangle of character values at the identity: h_n^k or chi_n^k.
inline std::string emit_dimension_triangle(TableName t, NRange r, OutputFormat fmt) {
    const bool betti = t == TableName::betti;
    const int columns = betti ? std::max(r.hi, 1) : std::max(r.hi - 1, 1);
    auto value = [&](int n, int k) -> mpz_class {
        const auto& table = braid_table(n);
        const Partition id = single_column(n);
        if (betti) return k <= n ? mpz_class(table.h(k)(id).get_num()) : mpz_class(0);
        return k < n ? mpz_class(table.chi(k)(id).get_num()) : mpz_class(0);
    };

    std::vector<std::vector<std::string>> rows;
    nlohmann::json jrows = nlohmann::json::array();
    std::vector<std::string> header{"n\\k"};
    for (int k = 0; k < columns; ++k) header.push_back(std::to_string(k));
    if (fmt == OutputFormat::csv) {
        header[0] = "n";
        rows.push_back(header);
    } else if (fmt == OutputFormat::text) {
        rows.push_back(header);
    }
    for (int n = r.lo; n <= r.hi; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        nlohmann::json values = nlohmann::json::array();
        for (int k = 0; k < columns; ++k) {
            const auto v = value(n, k);
            row.push_back(v.get_str());
            values.push_back(json_integer(v));
        }
        rows.push_back(row);
        jrows.push_back({{"n", n}, {"values", values}});
    }
    switch (fmt) {
        case OutputFormat::text: {
            std::string title = betti ? "# dim H^k(P_n, Q)\n" : "# dim A_n^k\n";
            return title + text_table(rows);
        }
        case OutputFormat::csv: {
            std::string out;
            for (const auto& row : rows) out += csv_row(row);
            return out;
        }
        case OutputFormat::json:
            return nlohmann::json{{"table", to_string(t)}, {"rows", jrows}}.dump(2) + "\n";
    }
    return {};
}

inline nlohmann::json decomposition_json(const IrrepDecomposition& d) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [label, mult] : d.terms) {
        terms.push_back({{"partition", to_string(label)}, {"multiplicity", json_integer(mult)}});
    }
    return terms;
}

inline std::string emit_decompositions(TableName t, NRange r, OutputFormat fmt) {
    const bool h1 = t == TableName::h1_decomp;
    std::vector<std::vector<std::string>> rows;
    nlohmann::json jrows = nlohmann::json::array();
    if (h1) {
        rows.push_back({"n", "dim H^1", "H^1(P_n,Q)", "dim A_n^1", "A_n^1"});
    } else {
        rows.push_back({"n", "dim A_n^2", "A_n^2"});
    }
    for (int n = std::max(r.lo, table_min_n(t)); n <= r.hi; ++n) {
        const auto& table = braid_table(n);
        if (h1) {
            const auto dh = decompose(table.h(1));
            const auto da = decompose(table.chi(1));
            rows.push_back({std::to_string(n), dh.dimension().get_str(), dh.to_string(), da.dimension().get_str(),
                            da.to_string()});
            jrows.push_back({{"n", n},
                             {"h1", {{"dimension", json_integer(dh.dimension())}, {"terms", decomposition_json(dh)}}},
                             {"a1", {{"dimension", json_integer(da.dimension())}, {"terms", decomposition_json(da)}}}});
        } else {
            const auto da = decompose(table.chi(2));
            rows.push_back({std::to_string(n), da.dimension().get_str(), da.to_string()});
            jrows.push_back({{"n", n}, {"dimension", json_integer(da.dimension())}, {"terms", decomposition_json(da)}});
        }
    }
    switch (fmt) {
        case OutputFormat::text:
            return text_table(rows);
        case OutputFormat::csv: {
            std::string out;
            for (const auto& row : rows) out += csv_row(row);
            return out;
        }
        case OutputFormat::json:
            return nlohmann::json{{"table", to_string(t)}, {"rows", jrows}}.dump(2) + "\n";
    }
    return {};
}

}  // namespace detail

/// Renders one of the reference tables for n in r.
inline std::string emit_table(TableName t, NRange r, OutputFormat fmt, const TableLimits& limits = {}) {
    detail::check_range(t, r, limits);
    switch (t) {
        case TableName::measures: return detail::emit_measures(r, fmt);
        case TableName::betti:
        case TableName::a_dims: return detail::emit_dimension_triangle(t, r, fmt);
        case TableName::h1_decomp:
        case TableName::a2_decomp: return detail::emit_decompositions(t, r, fmt);
    }
    return {};
}

}  // namespace braidsplit
