#include <gtest/gtest.h>

#include "braidsplit/error.hpp"
#include "braidsplit/ff_oracle.hpp"

using namespace braidsplit;

namespace {

std::vector<std::size_t> irreducible_counts(std::uint64_t p, int d_max) {
    const auto irr = enumerate_irreducibles(p, d_max);
    std::vector<std::size_t> out;
    for (std::size_t d = 1; d < irr.size(); ++d) out.push_back(irr[d].size());
    return out;
}

// Evaluates a polynomial over F_p, independently of the library's arithmetic.
std::uint64_t eval_mod(const std::vector<std::uint64_t>& dense, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (std::size_t i = dense.size(); i-- > 0;) acc = (acc * x + dense[i]) % p;
    return acc;
}

}  // namespace

TEST(FFOracle, PrimalityAndPowers) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(97));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(91));
    EXPECT_EQ(saturating_power(3, 4), 81u);
    EXPECT_EQ(saturating_power(10, 30), UINT64_MAX);
}

TEST(FFOracle, IrreducibleCounts) {
    EXPECT_EQ(irreducible_counts(2, 3), (std::vector<std::size_t>{2, 1, 2}));
    EXPECT_EQ(irreducible_counts(2, 6).back(), 9u);
    EXPECT_EQ(irreducible_counts(3, 4), (std::vector<std::size_t>{3, 3, 8, 18}));
    EXPECT_EQ(irreducible_counts(5, 3), (std::vector<std::size_t>{5, 10, 40}));
}

TEST(FFOracle, IrreducibleCountsAreNecklaceValues) {
    for (std::uint64_t p : {2u, 3u, 5u}) {
        const int d_max = 6;
        const auto counts = irreducible_counts(p, d_max);
        for (int d = 1; d <= d_max; ++d) {
            const mpq_class want = evaluate(necklace_polynomial(d), mpq_class(static_cast<unsigned long>(p)));
            EXPECT_EQ(mpq_class(static_cast<unsigned long>(counts[static_cast<std::size_t>(d - 1)])), want)
                << "p=" << p << " d=" << d;
        }
    }
    EXPECT_EQ(irreducible_counts(3, 1), (std::vector<std::size_t>{3}));
}

TEST(FFOracle, IrreduciblesOfSmallDegreeHaveNoRoots) {
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
        const auto irr = enumerate_irreducibles(p, 3);
        for (int d = 2; d <= 3; ++d) {
            for (const auto& f : irr[static_cast<std::size_t>(d)]) {
                for (std::uint64_t x = 0; x < p; ++x) EXPECT_NE(eval_mod(f.dense(), x, p), 0u) << to_string(f);
            }
        }
    }
}

TEST(FFOracle, Rendering) {
    EXPECT_EQ(to_string(PrimeFieldPoly{2, {1, 1}}), "x^2 + x + 1");
    EXPECT_EQ(to_string(PrimeFieldPoly{3, {2}}), "x + 2");
}

TEST(FFOracle, SmallCensus) {
    const auto t = factor_type_census(2, 2);
    EXPECT_EQ(t.total_squarefree, 2u);
    EXPECT_EQ(t.counts.at({2}), 1u);
    EXPECT_EQ(t.counts.at({1, 1}), 1u);

    const auto t3 = factor_type_census(3, 2);
    EXPECT_EQ(t3.total_squarefree, 6u);
    EXPECT_EQ(t3.counts.at({2}), 3u);
    EXPECT_EQ(t3.counts.at({1, 1}), 3u);

    const auto t4 = factor_type_census(2, 4);
    EXPECT_EQ(t4.counts.at({2, 1, 1}), 1u);
    EXPECT_EQ(t4.squarefree_disagreements, 0u);
}

TEST(FFOracle, CensusMatchesTheory) {
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, int>>{{2, 5}, {3, 4}, {5, 4}, {7, 3}, {2, 1}, {3, 1}}) {
        const auto report = census_vs_theory(p, n);
        EXPECT_TRUE(report.ok()) << "p=" << p << " n=" << n;
        EXPECT_EQ(report.total, report.expected_total);
        for (const auto& row : report.rows) {
            EXPECT_TRUE(row.ok) << "p=" << p << " n=" << n << " " << bracketed(row.lambda);
            EXPECT_TRUE(row.measure_ok) << "p=" << p << " n=" << n << " " << bracketed(row.lambda);
        }
    }
}

TEST(FFOracle, WorkerCountDoesNotChangeResult) {
    const auto one = factor_type_census(3, 7, 1);
    for (unsigned w : {2u, 3u, 8u}) {
        const auto many = factor_type_census(3, 7, w);
        EXPECT_EQ(many.counts, one.counts) << "workers=" << w;
        EXPECT_EQ(many.total_squarefree, one.total_squarefree);
    }
}

TEST(FFOracle, Errors) {
    EXPECT_THROW(factor_type_census(4, 3), UsageError);
    EXPECT_THROW(factor_type_census(2, 0), UsageError);
    EXPECT_THROW(enumerate_irreducibles(6, 2), UsageError);
    EXPECT_THROW(factor_type_census(2, 24), BudgetExceeded);
    EXPECT_THROW(factor_type_census(3, 5, 1, OracleBudget{100}), BudgetExceeded);
    try {
        factor_type_census(2, 10, 1, OracleBudget{1000});
        FAIL() << "expected BudgetExceeded";
    } catch (const BudgetExceeded& e) {
        EXPECT_EQ(e.required(), 1024u);
        EXPECT_EQ(e.budget(), 1000u);
    }
}
