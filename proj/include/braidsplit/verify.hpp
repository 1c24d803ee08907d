#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "braidsplit/braid_characters.hpp"
#include "braidsplit/class_function.hpp"
#include "braidsplit/error.hpp"
#include "braidsplit/ff_oracle.hpp"
#include "braidsplit/format.hpp"
#include "braidsplit/irreducible.hpp"
#include "braidsplit/partition.hpp"
#include "braidsplit/rat_poly.hpp"
#include "braidsplit/reference_tables.hpp"
#include "braidsplit/splitting_measure.hpp"
#include "braidsplit/tables.hpp"

namespace braidsplit {

struct Check {
    std::string description;
    bool passed = false;
    std::string details;  // empty on success
};

struct SuiteReport {
    std::string name;
    std::vector<Check> checks;
    double elapsed_seconds = 0;

    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
    }
    bool passed() const { return failures() == 0; }
};

enum class SuiteName { tables, identities, support, regular_rep, stability, oracle, all };

inline SuiteName parse_suite_name(std::string_view s) {
    if (s == "tables") return SuiteName::tables;
    if (s == "identities") return SuiteName::identities;
    if (s == "support") return SuiteName::support;
    if (s == "regular-rep") return SuiteName::regular_rep;
    if (s == "stability") return SuiteName::stability;
    if (s == "oracle") return SuiteName::oracle;
    if (s == "all") return SuiteName::all;
    throw UsageError("unknown suite '" + std::string(s) + "'");
}

inline std::string to_string(SuiteName s) {
    switch (s) {
        case SuiteName::tables: return "tables";
        case SuiteName::identities: return "identities";
        case SuiteName::support: return "support";
        case SuiteName::regular_rep: return "regular-rep";
        case SuiteName::stability: return "stability";
        case SuiteName::oracle: return "oracle";
        case SuiteName::all: return "all";
    }
    return "?";
}

/// Ranges covered by the suites. Defaults keep `all` well under two minutes.
struct SuiteLimits {
    int max_n = 12;                // measures and characters
    int max_decomposition_n = 9;   // Murnaghan-Nakayama based checks
    std::uint64_t oracle_max_candidates = 1'000'000;
    std::vector<std::uint64_t> oracle_primes{2, 3, 5, 7};
    unsigned workers = 1;
};

namespace detail {

/// Collects checks in registration order.
class CheckList {
public:
    void expect(bool ok, std::string description, std::string details = {}) {
        checks_.push_back({std::move(description), ok, ok ? std::string{} : std::move(details)});
    }

    /// Runs body; an exception becomes a failed check.
    void guarded(const std::string& description, const std::function<void(CheckList&)>& body) {
        try {
            body(*this);
        } catch (const std::exception& e) {
            expect(false, description, std::string("exception: ") + e.what());
        }
    }

    std::vector<Check> take() { return std::move(checks_); }

private:
    std::vector<Check> checks_;
};

inline std::string nk(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

inline std::string mismatch(const std::string& where, const std::string& got, const std::string& want) {
    return where + ": computed " + got + ", expected " + want;
}

/// Unsigned Stirling numbers of the first kind from c(n+1,k) = n c(n,k) + c(n,k-1).
inline std::vector<std::vector<mpz_class>> stirling_first(int max_n) {
    std::vector<std::vector<mpz_class>> c(static_cast<std::size_t>(max_n) + 1,
                                          std::vector<mpz_class>(static_cast<std::size_t>(max_n) + 1));
    c[0][0] = 1;
    for (int n = 0; n < max_n; ++n) {
        for (int k = 1; k <= n + 1; ++k) {
            c[n + 1][k] = mpz_class(n) * c[n][k] + c[n][k - 1];
        }
    }
    return c;
}

inline void suite_tables(CheckList& out, const SuiteLimits& limits) {
    auto measure_rows = [&](int n, const std::vector<reference::MeasureRow>& rows) {
        out.guarded("measures n=" + std::to_string(n), [&](CheckList& c) {
            for (const auto& row : rows) {
                const Partition lambda = parse_partition(row.partition);
                const auto cd = class_data(lambda);
                const auto m = splitting_coefficients(lambda);
                const std::string where = "n=" + std::to_string(n) + " lambda=" + bracketed(lambda);
                c.expect(cd.class_size == row.class_size && cd.centralizer_order == row.centralizer,
                         "class data " + where,
                         mismatch(where, cd.class_size.get_str() + "/" + cd.centralizer_order.get_str(),
                                  std::to_string(row.class_size) + "/" + std::to_string(row.centralizer)));
                c.expect(format_measure(m) == row.measure, "measure " + where,
                         mismatch(where, format_measure(m), std::string(row.measure)));
            }
        });
    };
    measure_rows(4, reference::measures_n4);
    measure_rows(5, reference::measures_n5);

    const int tri = std::min(9, limits.max_n);
    out.guarded("betti triangle", [&](CheckList& c) {
        for (int n = 1; n <= tri; ++n) {
            const auto& t = braid_table(n);
            for (int k = 0; k < 9; ++k) {
                const mpq_class got = k <= n ? t.h(k)(single_column(n)) : mpq_class(0);
                const long want = reference::betti[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
                c.expect(got == want, "dim H^k " + nk(n, k), mismatch(nk(n, k), to_string(got), std::to_string(want)));
            }
        }
    });
    out.guarded("a-dims triangle", [&](CheckList& c) {
        for (int n = 1; n <= tri; ++n) {
            const auto& t = braid_table(n);
            for (int k = 0; k < 8; ++k) {
                const mpq_class got = k < n ? t.chi(k)(single_column(n)) : mpq_class(0);
                const long want = reference::a_dims[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
                c.expect(got == want, "dim A^k " + nk(n, k), mismatch(nk(n, k), to_string(got), std::to_string(want)));
            }
        }
    });

    auto decomposition_rows = [&](const char* label, int k, bool cohomology,
                                  const std::vector<reference::DecompositionRow>& rows) {
        out.guarded(label, [&](CheckList& c) {
            for (const auto& row : rows) {
                if (row.n > limits.max_decomposition_n) continue;
                const auto& t = braid_table(row.n);
                const auto d = decompose(cohomology ? t.h(k) : t.chi(k));
                const std::string where = std::string(label) + " n=" + std::to_string(row.n);
                c.expect(d.to_string() == row.decomposition && d.genuine, where,
                         mismatch(where, d.to_string(), std::string(row.decomposition)));
            }
        });
    };
    decomposition_rows("H^1 decomposition", 1, true, reference::h1_decompositions);
    decomposition_rows("A^1 decomposition", 1, false, reference::a1_decompositions);
    decomposition_rows("A^2 decomposition", 2, false, reference::a2_decompositions);
}

inline void suite_identities(CheckList& out, const SuiteLimits& limits) {
    const int max_n = limits.max_n;
    out.guarded("necklace inversion", [&](CheckList& c) {
        for (int n = 1; n <= max_n; ++n) {
            RatPoly sum;
            for (int d = 1; d <= n; ++d) {
                if (n % d == 0) sum += necklace_polynomial(d) * mpq_class(d);
            }
            c.expect(sum == RatPoly::monomial(1, n), "sum_{d|n} d M_d = z^n, n=" + std::to_string(n),
                     mismatch("n=" + std::to_string(n), format_polynomial(sum), "z^" + std::to_string(n)));
        }
    });
    out.guarded("cycle polynomials", [&](CheckList& c) {
        for (int n = 2; n <= max_n; ++n) {
            RatPoly total;
            bool vanish = true, shape = true;
            std::string bad;
            for (const auto& lambda : enumerate_partitions(n)) {
                const RatPoly N = cycle_polynomial(lambda);
                total += N;
                if (evaluate(N, 0) != 0 || evaluate(N, 1) != 0) {
                    vanish = false;
                    bad = bracketed(lambda);
                }
                if (N.degree() != n || N.leading() != ratio(1, class_data(lambda).centralizer_order)) {
                    shape = false;
                    bad = bracketed(lambda);
                }
            }
            const std::string sn = "n=" + std::to_string(n);
            const RatPoly expected = RatPoly::monomial(1, n) - RatPoly::monomial(1, n - 1);
            c.expect(total == expected, "sum_lambda N_lambda = z^n - z^{n-1}, " + sn,
                     mismatch(sn, format_polynomial(total), format_polynomial(expected)));
            c.expect(vanish, "N_lambda(0) = N_lambda(1) = 0, " + sn, "fails at " + bad);
            c.expect(shape, "deg N_lambda = n, leading 1/z_lambda, " + sn, "fails at " + bad);
        }
    });
    out.guarded("splitting measure totals and characters", [&](CheckList& c) {
        for (int n = 2; n <= max_n; ++n) {
            const auto& t = braid_table(n);
            std::vector<mpq_class> sums(static_cast<std::size_t>(n));
            bool coefficient_identity = true;
            std::string bad;
            for (const auto& lambda : enumerate_partitions(n)) {
                const auto m = splitting_coefficients(lambda);
                const mpz_class z = class_data(lambda).centralizer_order;
                for (int k = 0; k < n; ++k) {
                    sums[static_cast<std::size_t>(k)] += m.alpha[static_cast<std::size_t>(k)];
                    mpq_class expected = t.chi(k)(lambda) / mpq_class(z);
                    if (k % 2) expected = -expected;
                    if (m.alpha[static_cast<std::size_t>(k)] != expected) {
                        coefficient_identity = false;
                        bad = nk(n, k) + " lambda=" + bracketed(lambda) + " alpha=" +
                              to_string(m.alpha[static_cast<std::size_t>(k)]) + " (-1)^k chi/z=" + to_string(expected);
                    }
                }
                if (m.alpha.back() != 0) {
                    coefficient_identity = false;
                    bad = "alpha^{n-1} nonzero at " + bracketed(lambda);
                }
            }
            bool totals = sums[0] == 1;
            for (int k = 1; k < n; ++k) totals = totals && sums[static_cast<std::size_t>(k)] == 0;
            const std::string sn = "n=" + std::to_string(n);
            c.expect(totals, "total splitting measure is 1, " + sn, sn + ": coefficient sums not (1, 0, ..., 0)");
            c.expect(coefficient_identity, "alpha^k = (-1)^k chi^k / z_lambda, " + sn, bad);
        }
    });
    out.guarded("betti numbers are Stirling numbers", [&](CheckList& c) {
        const int top = std::min(9, max_n);
        const auto st = stirling_first(top);
        for (int n = 1; n <= top; ++n) {
            const auto& t = braid_table(n);
            for (int k = 0; k <= n; ++k) {
                const mpq_class got = t.h(k)(single_column(n));
                const mpz_class want = st[n][n - k];
                c.expect(got == mpq_class(want), "h^k(1^n) = c(n, n-k), " + nk(n, k),
                         mismatch(nk(n, k), to_string(got), want.get_str()));
            }
        }
    });
    out.guarded("h/chi relations", [&](CheckList& c) {
        for (int n = 1; n <= max_n; ++n) {
            const auto& t = braid_table(n);
            const std::string sn = "n=" + std::to_string(n);
            c.expect(t.h(0) == ClassFunction::constant(n, 1) && t.h(n) == ClassFunction(n),
                     "h^0 = 1 and h^n = 0, " + sn, sn + ": boundary characters wrong");
            // P_1 is trivial, so H^1 = 0 while A_1^0 is the trivial character.
            if (n < 2) continue;
            bool telescopes = true;
            for (int k = 0; k <= n; ++k) {
                ClassFunction sum(n);
                if (k >= 1) sum += t.chi(k - 1);
                if (k < n) sum += t.chi(k);
                telescopes = telescopes && sum == t.h(k);
            }
            c.expect(telescopes, "h^k = chi^{k-1} + chi^k, " + sn, sn + ": telescoping identity fails");
            if (n >= 2) {
                c.expect(t.chi(n - 1) == ClassFunction(n), "chi^{n-1} = 0, " + sn, sn + ": top A-character nonzero");
            }
        }
    });
    out.guarded("closed forms", [&](CheckList& c) {
        for (ClosedForm f : all_closed_forms) {
            std::size_t covered = 0;
            std::string bad;
            for (int n = 1; n <= max_n; ++n) {
                const auto& t = braid_table(n);
                for (int k = 0; k <= n; ++k) {
                    for (const auto& lambda : enumerate_partitions(n)) {
                        const auto v = closed_form_value(f, n, k, lambda);
                        if (!v) continue;
                        ++covered;
                        if (*v != t.h(k)(lambda) && bad.empty()) {
                            bad = mismatch(nk(n, k) + " lambda=" + bracketed(lambda), to_string(*v),
                                           to_string(t.h(k)(lambda)));
                        }
                    }
                }
            }
            c.expect(bad.empty() && covered > 0,
                     std::string(name(f)) + " matches coefficient extraction on " + std::to_string(covered) + " values",
                     bad);
        }
    });
    out.guarded("irreducible characters", [&](CheckList& c) {
        for (int n = 1; n <= limits.max_decomposition_n; ++n) {
            const auto shapes = enumerate_partitions(n);
            std::vector<ClassFunction> chars;
            for (const auto& mu : shapes) chars.push_back(irreducible_character(mu));
            bool orthonormal = true, hooks = true;
            mpz_class dim_squares = 0;
            for (std::size_t a = 0; a < shapes.size(); ++a) {
                const mpz_class dim = irrep_dimension(shapes[a]);
                dim_squares += dim * dim;
                hooks = hooks && mpq_class(dim) == chars[a](single_column(n));
                for (std::size_t b = a; b < shapes.size(); ++b) {
                    orthonormal = orthonormal && inner_product(chars[a], chars[b]) == (a == b ? 1 : 0);
                }
            }
            const std::string sn = "n=" + std::to_string(n);
            c.expect(orthonormal, "irreducible characters orthonormal, " + sn, sn + ": orthogonality fails");
            c.expect(dim_squares == factorial(n), "sum dim^2 = n!, " + sn,
                     mismatch(sn, dim_squares.get_str(), factorial(n).get_str()));
            c.expect(hooks, "hook length formula = chi^mu(1^n), " + sn, sn + ": dimension mismatch");
        }
    });
    out.guarded("B_{n,m} dimensions", [&](CheckList& c) {
        for (int n = 2; n <= std::min(9, max_n); ++n) {
            for (int m = 1; m <= 3; ++m) {
                mpz_class plus_prod = 1, minus_prod = 1;
                for (int j = 2; j <= n - 1; ++j) {
                    plus_prod *= 1 + j * m;
                    minus_prod *= 1 - j * m;
                }
                const Partition id = single_column(n);
                const auto split = b_character_signed(n, m);
                const mpq_class dim = b_character(n, m)(id);
                const std::string where = "n=" + std::to_string(n) + " m=" + std::to_string(m);
                c.expect(dim == mpq_class(plus_prod), "dim B_{n,m} product formula, " + where,
                         mismatch(where, to_string(dim), plus_prod.get_str()));
                c.expect(2 * split.plus(id) == mpq_class(plus_prod + minus_prod) &&
                             2 * split.minus(id) == mpq_class(plus_prod - minus_prod),
                         "dim B^+/B^- split, " + where,
                         mismatch(where, to_string(split.plus(id)) + "/" + to_string(split.minus(id)),
                                  mpz_class((plus_prod + minus_prod) / 2).get_str() + "/" +
                                      mpz_class((plus_prod - minus_prod) / 2).get_str()));
            }
        }
    });
}

inline void suite_support(CheckList& out, const SuiteLimits& limits) {
    out.guarded("support restrictions", [&](CheckList& c) {
        for (int n = 1; n <= limits.max_n; ++n) {
            const auto& t = braid_table(n);
            std::string bad_small, bad_rect;
            for (int k = 0; k <= n; ++k) {
                for (const auto& lambda : enumerate_partitions(n)) {
                    const mpq_class& v = t.h(k)(lambda);
                    if (v == 0) continue;
                    // Restriction (1) is vacuous at k = 0, where h^0 is the trivial character.
                    if (k >= 1 && lambda.parts().back() > 2 * k && bad_small.empty()) {
                        bad_small = nk(n, k) + " lambda=" + bracketed(lambda) + " value=" + to_string(v);
                    }
                    if (lambda.distinct_parts() > n - k && bad_rect.empty()) {
                        bad_rect = nk(n, k) + " lambda=" + bracketed(lambda) + " value=" + to_string(v);
                    }
                }
            }
            const std::string sn = "n=" + std::to_string(n);
            c.expect(bad_small.empty(), "h^k vanishes when all parts exceed 2k, " + sn, bad_small);
            c.expect(bad_rect.empty(), "h^{n-k} vanishes beyond k distinct part sizes, " + sn, bad_rect);
        }
    });
}

inline void suite_regular_rep(CheckList& out, const SuiteLimits& limits) {
    out.guarded("regular representation", [&](CheckList& c) {
        const int top = std::min(9, limits.max_n);
        for (int n = 2; n <= top; ++n) {
            const std::string sn = "n=" + std::to_string(n);
            const auto twisted = sign_twisted_sum(n);
            c.expect(twisted == ClassFunction::regular(n), "sum_k h^k sgn^k is the regular character, " + sn,
                     sn + ": sign-twisted total cohomology differs from the regular character");

            const Partition id = single_column(n);
            std::vector<int> transposition_parts(static_cast<std::size_t>(n - 2), 1);
            transposition_parts.insert(transposition_parts.begin(), 2);
            const Partition transposition(transposition_parts);
            bool measure_ok = true, theta_ok = true;
            std::string bad;
            const auto theta = total_cohomology_character(n);
            for (const auto& lambda : enumerate_partitions(n)) {
                const bool special = lambda == id || lambda == transposition;
                const mpq_class v = measure_value(lambda, -1);
                if (v != (special ? ratio(1, 2) : mpq_class(0))) {
                    measure_ok = false;
                    bad = bracketed(lambda) + " nu*_{n,-1}=" + to_string(v);
                }
                const mpq_class expected_theta =
                    special ? mpq_class(class_data(lambda).centralizer_order) : mpq_class(0);
                if (theta(lambda) != expected_theta) {
                    theta_ok = false;
                    bad = bracketed(lambda) + " theta=" + to_string(theta(lambda));
                }
            }
            c.expect(measure_ok, "nu*_{n,-1} is 1/2 on identity and transpositions, " + sn, bad);
            c.expect(theta_ok, "total cohomology character supported on identity and transpositions, " + sn, bad);
        }
        for (int n = 1; n <= std::min(8, limits.max_decomposition_n); ++n) {
            const auto d = decompose(ClassFunction::regular(n));
            bool ok = d.terms.size() == enumerate_partitions(n).size();
            for (const auto& [mu, mult] : d.terms) ok = ok && mult == irrep_dimension(mu);
            c.expect(ok, "regular character has mult(mu) = dim(mu), n=" + std::to_string(n), d.to_string());
        }
    });
}

inline std::map<Partition, mpz_class> pattern_map(const std::vector<reference::StableTerm>& terms) {
    std::map<Partition, mpz_class> out;
    for (const auto& t : terms) out[Partition(t.tail)] = t.multiplicity;
    return out;
}

inline void suite_stability(CheckList& out, const SuiteLimits& limits) {
    auto family = [&](int k, const std::vector<reference::StableTerm>& pattern_terms) {
        const auto pattern = pattern_map(pattern_terms);
        const int sharp = 3 * k + 1;
        out.guarded("A^" + std::to_string(k) + " stability", [&](CheckList& c) {
            for (int n = 3 * k; n <= limits.max_decomposition_n; ++n) {
                const auto d = decompose(braid_table(n).chi(k));
                const auto expected = instantiate(pattern, n);
                const bool matches = expected && *expected == d;
                const std::string where = "k=" + std::to_string(k) + " n=" + std::to_string(n);
                if (n >= sharp) {
                    c.expect(matches, "A_n^k equals the stable pattern, " + where,
                             mismatch(where, d.to_string(), expected ? expected->to_string() : "(invalid labels)"));
                } else {
                    c.expect(!matches, "A_n^k deviates from the stable pattern below 3k+1, " + where,
                             where + ": already stable at " + d.to_string());
                }
            }
        });
    };
    family(1, reference::a1_stable_pattern);
    family(2, reference::a2_stable_pattern);
}

inline void suite_oracle(CheckList& out, const SuiteLimits& limits) {
    for (std::uint64_t p : limits.oracle_primes) {
        for (int n = 2; saturating_power(p, n) <= limits.oracle_max_candidates; ++n) {
            const std::string where = "p=" + std::to_string(p) + " n=" + std::to_string(n);
            out.guarded("census " + where, [&](CheckList& c) {
                OracleBudget budget{limits.oracle_max_candidates};
                const auto report = census_vs_theory(p, n, limits.workers, budget);
                std::string bad;
                for (const auto& row : report.rows) {
                    if (!row.ok || !row.measure_ok) {
                        bad = "lambda=" + bracketed(row.lambda) + " census " + std::to_string(row.count) +
                              " vs N_lambda(p) " + to_string(row.theory);
                        break;
                    }
                }
                if (report.total != report.expected_total) {
                    bad = "square-free total " + std::to_string(report.total) + " vs " +
                          std::to_string(report.expected_total);
                }
                if (report.squarefree_disagreements) {
                    bad = std::to_string(report.squarefree_disagreements) +
                          " gcd/factorization square-free disagreements";
                }
                c.expect(report.ok(), "census matches N_lambda(p), " + where, where + ": " + bad);
            });
        }
    }
}

}  // namespace detail

/// Runs one suite (or every suite for `all`) and reports each check.
inline std::vector<SuiteReport> run_suite(SuiteName which, const SuiteLimits& limits = {}) {
    if (limits.max_n < 2 || limits.max_n > 16 || limits.max_decomposition_n < 1 || limits.max_decomposition_n > 12) {
        throw UsageError("suite limits out of range (2 <= max_n <= 16, 1 <= decomposition n <= 12)");
    }
    if (limits.oracle_max_candidates > OracleBudget{}.max_candidates) {
        throw BudgetExceeded(limits.oracle_max_candidates, OracleBudget{}.max_candidates);
    }
    if (which == SuiteName::all) {
        std::vector<SuiteReport> all;
        for (SuiteName s : {SuiteName::tables, SuiteName::identities, SuiteName::support, SuiteName::regular_rep,
                            SuiteName::stability, SuiteName::oracle}) {
            auto r = run_suite(s, limits);
            all.insert(all.end(), r.begin(), r.end());
        }
        return all;
    }

    const auto start = std::chrono::steady_clock::now();
    detail::CheckList checks;
    switch (which) {
        case SuiteName::tables: detail::suite_tables(checks, limits); break;
        case SuiteName::identities: detail::suite_identities(checks, limits); break;
        case SuiteName::support: detail::suite_support(checks, limits); break;
        case SuiteName::regular_rep: detail::suite_regular_rep(checks, limits); break;
        case SuiteName::stability: detail::suite_stability(checks, limits); break;
        case SuiteName::oracle: detail::suite_oracle(checks, limits); break;
        case SuiteName::all: break;
    }
    SuiteReport report{to_string(which), checks.take(), 0};
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {report};
}

inline std::string render_reports(const std::vector<SuiteReport>& reports, OutputFormat fmt, bool timing = true) {
    std::ostringstream out;
    switch (fmt) {
        case OutputFormat::json: {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& r : reports) {
                nlohmann::json checks = nlohmann::json::array();
                for (const auto& c : r.checks) {
                    checks.push_back({{"description", c.description}, {"passed", c.passed}, {"details", c.details}});
                }
                nlohmann::json jr = {{"suite", r.name}, {"passed", r.passed()}, {"checks", checks}};
                if (timing) jr["elapsed_seconds"] = r.elapsed_seconds;
                j.push_back(jr);
            }
            out << j.dump(2) << "\n";
            break;
        }
        case OutputFormat::csv:
            out << csv_row({"suite", "status", "description", "details"});
            for (const auto& r : reports) {
                for (const auto& c : r.checks) {
                    out << csv_row({r.name, c.passed ? "pass" : "FAIL", c.description, c.details});
                }
            }
            break;
        case OutputFormat::text:
            for (const auto& r : reports) {
                out << "== " << r.name << ": " << (r.checks.size() - r.failures()) << "/" << r.checks.size()
                    << " checks passed";
                if (timing) {
                    char buf[32];
                    std::snprintf(buf, sizeof buf, " (%.2fs)", r.elapsed_seconds);
                    out << buf;
                }
                out << "\n";
                for (const auto& c : r.checks) {
                    out << (c.passed ? "  pass  " : "  FAIL  ") << c.description << "\n";
                    if (!c.passed) out << "        " << c.details << "\n";
                }
            }
            break;
    }
    return out.str();
}

}  // namespace braidsplit
