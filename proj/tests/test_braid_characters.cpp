#include <gtest/gtest.h>

#include "braidsplit/braid_characters.hpp"
#include "braidsplit/error.hpp"
#include "braidsplit/irreducible.hpp"
#include "braidsplit/splitting_measure.hpp"

using namespace braidsplit;

namespace {

// Unsigned Stirling numbers of the first kind from the falling-factorial recurrence.
std::vector<std::vector<mpz_class>> stirling(int n_max) {
    std::vector<std::vector<mpz_class>> c(static_cast<std::size_t>(n_max) + 1,
                                          std::vector<mpz_class>(static_cast<std::size_t>(n_max) + 1, 0));
    c[0][0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k <= n; ++k) {
            c[n][k] = (n - 1) * c[n - 1][k] + c[n - 1][k - 1];
        }
    }
    return c;
}

mpz_class product_one_plus(int n, long m) {
    mpz_class p = 1;
    for (int j = 2; j <= n - 1; ++j) p *= 1 + j * m;
    return p;
}

// The (j^m) formula for h_n^{n-2} exactly as printed, without the 1/j on
// the harmonic term.
mpq_class printed_subtop_rectangle(int n, int j, int m) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(m - 1));
    const int mu = moebius(j);
    const int mu_half = j % 2 == 0 ? moebius(j / 2) : 0;
    mpq_class bracket = mu * mu * harmonic_number(m - 1) - mu_half;
    const mpq_class sign = (m - n) % 2 == 0 ? 1 : -1;
    return sign * bracket * mpq_class(power * factorial(m - 1));
}

}  // namespace

TEST(BraidCharacters, Examples) {
    EXPECT_EQ(braid_character(4, 2)({1, 1, 1, 1}), 11);
    EXPECT_EQ(braid_character(4, 2)({2, 2}), -1);
    EXPECT_EQ(a_character(4, 1)({1, 1, 1, 1}), 5);
    EXPECT_EQ(a_character(5, 2)({1, 1, 1, 1, 1}), 26);
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(braid_character(n, 0), ClassFunction::constant(n, 1));
        EXPECT_EQ(a_character(n, 0), ClassFunction::constant(n, 1));
    }
}

TEST(BraidCharacters, RangeErrors) {
    EXPECT_THROW(braid_character(4, 5), UsageError);
    EXPECT_THROW(braid_character(4, -1), UsageError);
    EXPECT_THROW(a_character(4, 4), UsageError);
}

TEST(BraidCharacters, IntegerValued) {
    for (int n = 1; n <= 12; ++n) {
        const auto& t = braid_table(n);
        for (int k = 0; k <= n; ++k) EXPECT_TRUE(t.h(k).is_integral()) << "n=" << n << " k=" << k;
        for (int k = 0; k < n; ++k) EXPECT_TRUE(t.chi(k).is_integral()) << "n=" << n << " k=" << k;
    }
}

TEST(BraidCharacters, IdentityValuesAreStirlingNumbers) {
    const auto c = stirling(12);
    for (int n = 1; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            EXPECT_EQ(braid_character(n, k)(single_column(n)), mpq_class(c[n][n - k])) << "n=" << n << " k=" << k;
        }
    }
}

TEST(BraidCharacters, Telescoping) {
    for (int n = 2; n <= 12; ++n) {
        const auto& t = braid_table(n);
        for (int k = 0; k <= n; ++k) {
            ClassFunction sum(n);
            if (k >= 1) sum += t.chi(k - 1);
            if (k < n) sum += t.chi(k);
            EXPECT_EQ(sum, t.h(k)) << "n=" << n << " k=" << k;
        }
        EXPECT_EQ(t.chi(n - 1), ClassFunction(n)) << "n=" << n;
    }
}

TEST(BraidCharacters, CoefficientCharacterIdentity) {
    for (int n = 1; n <= 10; ++n) {
        const auto& t = braid_table(n);
        for (const auto& lambda : enumerate_partitions(n)) {
            const auto m = splitting_coefficients(lambda);
            const mpz_class z = class_data(lambda).centralizer_order;
            for (int k = 0; k < n; ++k) {
                const mpq_class sign = k % 2 == 0 ? 1 : -1;
                EXPECT_EQ(m.alpha[static_cast<std::size_t>(k)], sign * t.chi(k)(lambda) / z);
            }
        }
    }
}

TEST(InnerProduct, Examples) {
    EXPECT_EQ(inner_product(ClassFunction::constant(5, 1), ClassFunction::constant(5, 1)), 1);
    const auto h = braid_character(5, 2);
    for (const auto& lambda : enumerate_partitions(5)) {
        EXPECT_EQ(inner_product(ClassFunction::indicator(lambda), h), h(lambda) / class_data(lambda).centralizer_order);
    }
    EXPECT_EQ(inner_product(braid_character(4, 1), irreducible_character({3, 1})), 1);
    EXPECT_THROW(inner_product(ClassFunction(3), ClassFunction(4)), UsageError);
}

TEST(ClosedForms, Examples) {
    EXPECT_EQ(closed_form_check(4, 1, {2, 1, 1}), 2);
    EXPECT_EQ(closed_form_check(4, 3, {2, 2}), -2);
    EXPECT_EQ(closed_form_check(4, 3, {4}), 0);
    EXPECT_THROW(closed_form_check(8, 4, {3, 3, 2}), DomainError);
}

TEST(ClosedForms, AgreeWithCoefficientExtraction) {
    for (int n = 1; n <= 12; ++n) {
        const auto& t = braid_table(n);
        for (int k = 0; k <= n; ++k) {
            for (const auto& lambda : enumerate_partitions(n)) {
                for (ClosedForm f : all_closed_forms) {
                    const auto v = closed_form_value(f, n, k, lambda);
                    if (!v) continue;
                    EXPECT_EQ(*v, t.h(k)(lambda)) << name(f) << " n=" << n << " k=" << k << " " << bracketed(lambda);
                }
            }
        }
    }
}

TEST(ClosedForms, EveryFamilyIsExercised) {
    for (ClosedForm f : all_closed_forms) {
        int hits = 0;
        for (int n = 1; n <= 12; ++n) {
            for (int k = 0; k <= n; ++k) {
                for (const auto& lambda : enumerate_partitions(n)) hits += covers(f, n, k, lambda) ? 1 : 0;
            }
        }
        EXPECT_GT(hits, 10) << name(f);
    }
}

TEST(ClosedForms, PrintedRectangleFormulaNeedsOneOverJ) {
    // The harmonic-number term must carry 1/j. Without it the formula
    // already disagrees at (2,2), where h_4^2 = -1.
    EXPECT_EQ(braid_character(4, 2)({2, 2}), -1);
    EXPECT_EQ(printed_subtop_rectangle(4, 2, 2), 0);
    EXPECT_EQ(closed_form_value(ClosedForm::subtop_degree, 4, 2, {2, 2}), mpq_class(-1));
    // At j = 1 the two versions coincide.
    for (int n = 2; n <= 9; ++n) {
        EXPECT_EQ(printed_subtop_rectangle(n, 1, n), braid_character(n, n - 2)(single_column(n)));
    }
}

TEST(ClosedForms, HarmonicNumbers) {
    EXPECT_EQ(harmonic_number(0), 0);
    EXPECT_EQ(harmonic_number(1), 1);
    EXPECT_EQ(harmonic_number(3), ratio(11, 6));
}

TEST(ClosedForms, LongCycleMoebius) {
    for (int n = 1; n <= 12; ++n) {
        for (int d = 1; d <= n; ++d) {
            const mpq_class want = n % d ? mpq_class(0) : mpq_class(((n - d) % 2 ? -1 : 1) * moebius(n / d));
            EXPECT_EQ(braid_character(n, n - d)(single_row(n)), want) << "n=" << n << " d=" << d;
        }
    }
}

TEST(SignTwistedSum, Examples) {
    const auto s = sign_twisted_sum(4);
    EXPECT_EQ(s({1, 1, 1, 1}), 24);
    EXPECT_EQ(s({2, 1, 1}), 0);
    EXPECT_EQ(s({2, 2}), 0);
}

TEST(SignTwistedSum, IsRegularCharacter) {
    for (int n = 1; n <= 9; ++n) EXPECT_EQ(sign_twisted_sum(n), ClassFunction::regular(n)) << "n=" << n;
}

TEST(TotalCohomology, SupportedOnIdentityAndTranspositions) {
    for (int n = 2; n <= 9; ++n) {
        const auto theta = total_cohomology_character(n);
        for (const auto& lambda : enumerate_partitions(n)) {
            const bool small = lambda.largest() <= 2 && lambda.multiplicity(2) <= 1;
            const mpq_class want = small ? mpq_class(class_data(lambda).centralizer_order) : mpq_class(0);
            EXPECT_EQ(theta(lambda), want) << bracketed(lambda);
            EXPECT_EQ(measure_value(lambda, -1), small ? ratio(1, 2) : mpq_class(0)) << bracketed(lambda);
        }
    }
}

TEST(BCharacter, Dimensions) {
    EXPECT_EQ(b_character(4, 1)({1, 1, 1, 1}), 12);
    for (int n = 2; n <= 9; ++n) {
        for (long m = 1; m <= 3; ++m) {
            EXPECT_EQ(b_character(n, static_cast<int>(m))(single_column(n)), mpq_class(product_one_plus(n, m)));
        }
    }
    EXPECT_THROW(b_character(1, 1), UsageError);
    EXPECT_THROW(b_character(4, 0), UsageError);
}

TEST(BCharacter, SignedSplit) {
    const auto s = b_character_signed(4, 1);
    EXPECT_EQ(s.plus({1, 1, 1, 1}), 7);
    EXPECT_EQ(s.minus({1, 1, 1, 1}), 5);
    for (int n = 2; n <= 9; ++n) {
        for (long m = 1; m <= 3; ++m) {
            const auto b = b_character_signed(n, static_cast<int>(m));
            mpz_class minus_prod = 1;
            for (int j = 2; j <= n - 1; ++j) minus_prod *= 1 - j * m;
            const mpz_class plus_prod = product_one_plus(n, m);
            EXPECT_EQ(b.plus(single_column(n)), mpq_class((plus_prod + minus_prod) / 2));
            EXPECT_EQ(b.minus(single_column(n)), mpq_class((plus_prod - minus_prod) / 2));
        }
    }
}

TEST(BCharacter, MatchesMeasureAtMinusOneOverM) {
    for (int n = 2; n <= 8; ++n) {
        for (int m = 1; m <= 3; ++m) {
            const auto b = b_character(n, m);
            const auto signed_b = b_character_signed(n, m).difference();
            for (const auto& lambda : enumerate_partitions(n)) {
                const mpz_class z = class_data(lambda).centralizer_order;
                EXPECT_EQ(b(lambda), z * measure_value(lambda, ratio(-1, m)));
                EXPECT_EQ(signed_b(lambda), z * measure_value(lambda, ratio(1, m)));
            }
        }
    }
}
