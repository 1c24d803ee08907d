#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "braidsplit/error.hpp"
#include "braidsplit/partition.hpp"
#include "braidsplit/rat_poly.hpp"
#include "braidsplit/splitting_measure.hpp"

namespace braidsplit {

/// Maximum number of candidate polynomials a single enumeration may visit.
struct OracleBudget {
    std::uint64_t max_candidates = 10'000'000;
};

/// Monic polynomial over F_p. coeffs holds the non-leading coefficients,
/// constant term first; the leading 1 is implicit.
struct PrimeFieldPoly {
    std::uint64_t p = 2;
    std::vector<std::uint64_t> coeffs;

    int degree() const noexcept { return static_cast<int>(coeffs.size()); }

    /// Full coefficient vector including the leading 1.
    std::vector<std::uint64_t> dense() const {
        auto d = coeffs;
        d.push_back(1);
        return d;
    }

    friend bool operator==(const PrimeFieldPoly&, const PrimeFieldPoly&) = default;
};

inline std::string to_string(const PrimeFieldPoly& f) {
    std::string s;
    const auto d = f.dense();
    for (int i = f.degree(); i >= 0; --i) {
        const auto c = d[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        if (c != 1 || i == 0) s += std::to_string(c);
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

/// p^n, saturating at UINT64_MAX.
inline std::uint64_t saturating_power(std::uint64_t p, int n) {
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > UINT64_MAX / p) return UINT64_MAX;
        r *= p;
    }
    return r;
}

namespace detail {

/// Dense arithmetic over F_p on coefficient vectors, constant term first.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(p), small_(p < (std::uint64_t{1} << 32)) {
        if (p_ <= table_limit) {
            table_.resize(static_cast<std::size_t>(p_ * p_));
            for (std::uint64_t a = 0; a < p_; ++a) {
                for (std::uint64_t b = 0; b < p_; ++b) table_[a * p_ + b] = static_cast<std::uint8_t>((a * b) % p_);
            }
        }
    }

    std::uint64_t p() const noexcept { return p_; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (!table_.empty()) return table_[a * p_ + b];
        if (small_) return (a * b) % p_;
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (p_ - b); }

    std::uint64_t inverse(std::uint64_t a) const {
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a % p_);
        while (new_r != 0) {
            const std::int64_t q = r / new_r;
            std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
            std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
        }
        if (r != 1) throw InvariantViolation("zero has no inverse mod p");
        return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p_) : t);
    }

    static void trim(std::vector<std::uint64_t>& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    /// Formal derivative; i * a_i is reduced mod p, so x^p has derivative 0.
    std::vector<std::uint64_t> derivative(const std::vector<std::uint64_t>& a) const {
        std::vector<std::uint64_t> d;
        for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mul(i % p_, a[i]));
        trim(d);
        return d;
    }

    /// a mod b for b nonzero.
    std::vector<std::uint64_t> remainder(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b) const {
        trim(a);
        const std::size_t db = b.size() - 1;
        const std::uint64_t lead_inv = inverse(b.back());
        while (a.size() >= b.size()) {
            const std::uint64_t c = mul(a.back(), lead_inv);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j <= db; ++j) {
                a[shift + j] = sub(a[shift + j], mul(c, b[j]));
            }
            trim(a);
        }
        return a;
    }

    /// Monic gcd; gcd(0, 0) is 0.
    std::vector<std::uint64_t> gcd(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            auto r = remainder(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.empty()) {
            const std::uint64_t inv = inverse(a.back());
            for (auto& c : a) c = mul(c, inv);
        }
        return a;
    }

    /// If monic g divides f (both given with their leading coefficient), writes
    /// f / g into quotient and returns true. work is scratch space.
    bool divides(const std::vector<std::uint64_t>& f, const std::vector<std::uint64_t>& g,
                 std::vector<std::uint64_t>& quotient, std::vector<std::uint64_t>& work) const {
        const std::size_t df = f.size() - 1;
        const std::size_t dg = g.size() - 1;
        if (dg > df) return false;
        work.assign(f.begin(), f.end());
        quotient.assign(df - dg + 1, 0);
        for (std::size_t i = df + 1; i-- > dg;) {
            const std::uint64_t c = work[i];
            quotient[i - dg] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < dg; ++j) {
                work[i - dg + j] = sub(work[i - dg + j], mul(c, g[j]));
            }
            work[i] = 0;
        }
        for (std::size_t j = 0; j < dg; ++j) {
            if (work[j] != 0) return false;
        }
        return true;
    }

private:
    static constexpr std::uint64_t table_limit = 64;

    std::uint64_t p_;
    bool small_;  // products of residues fit in 64 bits
    std::vector<std::uint8_t> table_;  // multiplication table for p <= table_limit
};

inline void check_prime(std::uint64_t p) {
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
}

/// Odometer over monic degree-n polynomials in lexicographic order of
/// (a_{n-1}, ..., a_0); the index's most significant digit is a_{n-1}.
inline void decode_index(std::uint64_t index, std::uint64_t p, std::vector<std::uint64_t>& dense) {
    for (std::size_t i = 0; i + 1 < dense.size(); ++i) {
        dense[i] = index % p;
        index /= p;
    }
    dense.back() = 1;
}

inline void advance(std::vector<std::uint64_t>& dense, std::uint64_t p) {
    for (std::size_t i = 0; i + 1 < dense.size(); ++i) {
        if (++dense[i] < p) return;
        dense[i] = 0;
    }
}

}  // namespace detail

/// Per-degree lists of monic irreducibles over F_p for degrees 1..d_max
/// (index 0 is empty). A degree-d candidate is kept iff no irreducible of
/// degree <= d/2 divides it.
inline std::vector<std::vector<PrimeFieldPoly>> enumerate_irreducibles(std::uint64_t p, int d_max,
                                                                       OracleBudget budget = {}) {
    detail::check_prime(p);
    if (d_max < 1) throw UsageError("enumerate_irreducibles: d_max must be positive");
    const std::uint64_t needed = saturating_power(p, d_max);
    if (needed > budget.max_candidates) throw BudgetExceeded(needed, budget.max_candidates);

    const detail::PrimeField field(p);
    std::vector<std::vector<PrimeFieldPoly>> out(static_cast<std::size_t>(d_max) + 1);
    std::vector<std::vector<std::vector<std::uint64_t>>> dense_irr(out.size());
    std::vector<std::uint64_t> f, quotient, work;

    for (int d = 1; d <= d_max; ++d) {
        const std::uint64_t count = saturating_power(p, d);
        f.assign(static_cast<std::size_t>(d) + 1, 0);
        f.back() = 1;
        for (std::uint64_t idx = 0; idx < count; ++idx, detail::advance(f, p)) {
            bool reducible = false;
            for (int e = 1; 2 * e <= d && !reducible; ++e) {
                for (const auto& g : dense_irr[static_cast<std::size_t>(e)]) {
                    if (field.divides(f, g, quotient, work)) {
                        reducible = true;
                        break;
                    }
                }
            }
            if (reducible) continue;
            dense_irr[static_cast<std::size_t>(d)].push_back(f);
            out[static_cast<std::size_t>(d)].push_back(PrimeFieldPoly{p, std::vector<std::uint64_t>(f.begin(), f.end() - 1)});
        }
    }
    return out;
}

/// Factorization-type census of every monic degree-n polynomial over F_p.
struct FactorTypeTally {
    std::uint64_t p = 0;
    int n = 0;
    std::map<Partition, std::uint64_t, CanonicalOrder> counts;  // square-free only
    std::uint64_t total_squarefree = 0;
    std::uint64_t candidates = 0;
    /// Polynomials where gcd(f, f') = 1 disagrees with "no repeated factor".
    std::uint64_t squarefree_disagreements = 0;
};

namespace detail {

struct CensusBlock {
    std::map<std::vector<int>, std::uint64_t> counts;
    std::uint64_t squarefree = 0;
    std::uint64_t disagreements = 0;
};

inline CensusBlock census_block(std::uint64_t p, int n, std::uint64_t begin, std::uint64_t end,
                                const std::vector<std::vector<std::vector<std::uint64_t>>>& irreducibles) {
    const PrimeField field(p);
    CensusBlock block;
    std::vector<std::uint64_t> f(static_cast<std::size_t>(n) + 1);
    decode_index(begin, p, f);
    std::vector<std::uint64_t> cur, quotient, work;
    std::vector<int> degrees;

    for (std::uint64_t idx = begin; idx < end; ++idx, advance(f, p)) {
        const auto g = field.gcd(f, field.derivative(f));
        const bool squarefree_by_gcd = g.size() == 1;

        // Trial division; what survives once d > deg/2 is irreducible.
        cur = f;
        degrees.clear();
        bool repeated = false;
        for (int d = 1; 2 * d <= static_cast<int>(cur.size()) - 1; ++d) {
            for (const auto& q : irreducibles[static_cast<std::size_t>(d)]) {
                if (2 * d > static_cast<int>(cur.size()) - 1) break;
                int hits = 0;
                while (field.divides(cur, q, quotient, work)) {
                    cur.swap(quotient);
                    degrees.push_back(d);
                    ++hits;
                }
                if (hits > 1) repeated = true;
            }
        }
        if (cur.size() > 1) degrees.push_back(static_cast<int>(cur.size()) - 1);

        if (squarefree_by_gcd == repeated) ++block.disagreements;
        if (!squarefree_by_gcd) continue;
        std::sort(degrees.begin(), degrees.end(), std::greater<>());
        ++block.counts[degrees];
        ++block.squarefree;
    }
    return block;
}

}  // namespace detail

/// Visits all p^n monic degree-n polynomials, tests square-freeness with
/// gcd(f, f'), factors by trial division, and tallies factorization types.
/// The index space is split into contiguous blocks, one per worker; the
/// merged result does not depend on the worker count.
inline FactorTypeTally factor_type_census(std::uint64_t p, int n, unsigned workers = 1, OracleBudget budget = {}) {
    detail::check_prime(p);
    if (n < 1) throw UsageError("factor_type_census: n must be positive");
    const std::uint64_t total = saturating_power(p, n);
    if (total > budget.max_candidates) throw BudgetExceeded(total, budget.max_candidates);
    workers = std::max(1u, workers);

    std::vector<std::vector<std::vector<std::uint64_t>>> irreducibles(static_cast<std::size_t>(n / 2) + 1);
    if (n / 2 >= 1) {
        const auto irr = enumerate_irreducibles(p, n / 2, budget);
        for (std::size_t d = 1; d < irr.size(); ++d) {
            for (const auto& q : irr[d]) irreducibles[d].push_back(q.dense());
        }
    }

    std::vector<detail::CensusBlock> blocks(workers);
    auto bound = [&](unsigned w) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(total) * w) / workers);
    };
    if (workers == 1) {
        blocks[0] = detail::census_block(p, n, 0, total, irreducibles);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] { blocks[w] = detail::census_block(p, n, bound(w), bound(w + 1), irreducibles); });
        }
        for (auto& t : threads) t.join();
    }

    FactorTypeTally tally;
    tally.p = p;
    tally.n = n;
    tally.candidates = total;
    for (const auto& lambda : enumerate_partitions(n)) tally.counts[lambda] = 0;
    for (const auto& b : blocks) {
        for (const auto& [degrees, count] : b.counts) tally.counts[Partition(degrees)] += count;
        tally.total_squarefree += b.squarefree;
        tally.squarefree_disagreements += b.disagreements;
    }
    return tally;
}

struct CensusRow {
    Partition lambda;
    std::uint64_t count = 0;
    mpq_class theory;       // N_lambda(p)
    bool ok = false;        // count == N_lambda(p)
    bool measure_ok = true; // count == nu*_{n,p}(C_lambda) (p^n - p^{n-1}); checked for n >= 2
};

struct CensusReport {
    std::uint64_t p = 0;
    int n = 0;
    std::uint64_t total = 0;
    std::uint64_t expected_total = 0;
    std::uint64_t squarefree_disagreements = 0;
    std::vector<CensusRow> rows;

    bool ok() const {
        if (total != expected_total || squarefree_disagreements != 0) return false;
        return std::all_of(rows.begin(), rows.end(), [](const CensusRow& r) { return r.ok && r.measure_ok; });
    }
};

/// Compares the census against N_lambda(p) and the splitting measure at z = p.
inline CensusReport census_vs_theory(std::uint64_t p, int n, unsigned workers = 1, OracleBudget budget = {}) {
    const auto tally = factor_type_census(p, n, workers, budget);
    CensusReport report;
    report.p = p;
    report.n = n;
    report.total = tally.total_squarefree;
    report.expected_total = n >= 2 ? saturating_power(p, n) - saturating_power(p, n - 1) : p;
    report.squarefree_disagreements = tally.squarefree_disagreements;

    const mpq_class z(mpz_class(std::to_string(p)));
    const mpq_class conf_size(mpz_class(std::to_string(report.expected_total)));
    for (const auto& [lambda, count] : tally.counts) {
        CensusRow row;
        row.lambda = lambda;
        row.count = count;
        row.theory = evaluate(cycle_polynomial(lambda), z);
        const mpq_class observed(mpz_class(std::to_string(count)));
        row.ok = observed == row.theory;
        if (n >= 2) row.measure_ok = measure_value(lambda, z) * conf_size == observed;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace braidsplit
