#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "braidsplit/error.hpp"
#include "braidsplit/partition.hpp"

using namespace braidsplit;

namespace {

// Euler's pentagonal recurrence, independent of the enumerator.
std::vector<long> partition_counts(int n_max) {
    std::vector<long> p(static_cast<std::size_t>(n_max) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        long total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const long sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) total += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = total;
    }
    return p;
}

}  // namespace

TEST(Partition, RejectsInvalidParts) {
    EXPECT_THROW(Partition({1, 2}), UsageError);
    EXPECT_THROW(Partition({2, 0}), UsageError);
    EXPECT_THROW(Partition({-1}), UsageError);
    EXPECT_NO_THROW(Partition({3, 3, 1}));
}

TEST(Partition, BasicAccessors) {
    const Partition p{3, 2, 2, 1};
    EXPECT_EQ(p.size(), 8);
    EXPECT_EQ(p.length(), 4);
    EXPECT_EQ(p.largest(), 3);
    EXPECT_EQ(p.multiplicity(2), 2);
    EXPECT_EQ(p.multiplicity(5), 0);
    EXPECT_EQ(p.distinct_parts(), 3);
    EXPECT_EQ(p.conjugate(), (Partition{4, 3, 1}));
}

TEST(Partition, EnumerationOrderForFour) {
    const auto ps = enumerate_partitions(4);
    const std::vector<Partition> want{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    EXPECT_EQ(ps, want);
}

TEST(Partition, EnumerationEdgeCases) {
    EXPECT_EQ(enumerate_partitions(0).size(), 1u);
    EXPECT_TRUE(enumerate_partitions(0).front().empty());
    EXPECT_THROW(enumerate_partitions(-1), UsageError);
}

TEST(Partition, CountsMatchPentagonalRecurrence) {
    const auto want = partition_counts(20);
    EXPECT_EQ(want[9], 30);
    for (int n = 0; n <= 20; ++n) {
        const auto ps = enumerate_partitions(n);
        EXPECT_EQ(static_cast<long>(ps.size()), want[static_cast<std::size_t>(n)]) << "n=" << n;
        EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end(), CanonicalOrder{})) << "n=" << n;
        EXPECT_EQ(std::set<Partition>(ps.begin(), ps.end()).size(), ps.size());
        for (const auto& p : ps) EXPECT_EQ(p.size(), n);
    }
}

TEST(Partition, ClassDataExamples) {
    auto cd = class_data({2, 2});
    EXPECT_EQ(cd.centralizer_order, 8);
    EXPECT_EQ(cd.class_size, 3);
    cd = class_data({3, 1, 1});
    EXPECT_EQ(cd.centralizer_order, 6);
    EXPECT_EQ(cd.class_size, 20);
    cd = class_data({1, 1, 1, 1, 1});
    EXPECT_EQ(cd.centralizer_order, 120);
    EXPECT_EQ(cd.class_size, 1);
}

TEST(Partition, ClassEquation) {
    for (int n = 1; n <= 12; ++n) {
        mpz_class total = 0;
        for (const auto& p : enumerate_partitions(n)) {
            const auto cd = class_data(p);
            EXPECT_EQ(cd.class_size * cd.centralizer_order, factorial(n));
            total += cd.class_size;
        }
        EXPECT_EQ(total, factorial(n)) << "n=" << n;
    }
}

TEST(Partition, MoebiusValues) {
    const int want[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    for (int d = 1; d <= 12; ++d) EXPECT_EQ(moebius(d), want[d - 1]) << "d=" << d;
    EXPECT_THROW(moebius(0), UsageError);
}

TEST(Partition, MoebiusDivisorSumIsDelta) {
    for (int n = 1; n <= 200; ++n) {
        int sum = 0;
        for (int d = 1; d <= n; ++d) {
            if (n % d == 0) sum += moebius(d);
        }
        EXPECT_EQ(sum, n == 1 ? 1 : 0) << "n=" << n;
    }
}

TEST(Partition, SignCharacter) {
    EXPECT_EQ(sign_character({1, 1, 1}), 1);
    EXPECT_EQ(sign_character({2, 1}), -1);
    EXPECT_EQ(sign_character({3}), 1);
    EXPECT_EQ(sign_character({2, 2}), 1);
    EXPECT_EQ(sign_character({4}), -1);
}

TEST(Partition, ParseAndRender) {
    EXPECT_EQ(parse_partition("3,1,1"), (Partition{3, 1, 1}));
    EXPECT_EQ(to_string(Partition{3, 1, 1}), "3,1,1");
    EXPECT_EQ(bracketed(Partition{2, 2}), "[2,2]");
    EXPECT_TRUE(parse_partition("").empty());
    EXPECT_THROW(parse_partition("1,3"), UsageError);
    EXPECT_THROW(parse_partition("3,,1"), UsageError);
    EXPECT_THROW(parse_partition("a"), UsageError);
    EXPECT_THROW(parse_partition("3,0"), UsageError);
}

TEST(Partition, ConjugateIsInvolution) {
    for (int n = 1; n <= 10; ++n) {
        for (const auto& p : enumerate_partitions(n)) EXPECT_EQ(p.conjugate().conjugate(), p);
    }
}
