#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "slmoment/kloosterman.hpp"

using namespace slmoment;

using Histogram = std::map<std::int64_t, std::uint64_t>;

// Expected histograms were frozen from tests/oracles/frozen_values.py (pure
// enumeration, default reduction polynomials).

TEST(Kloosterman, TrivialCases) {
    EXPECT_EQ(kloosterman(FieldSpec(1), 1, 1), 1);  // lambda(1 + 1)
    EXPECT_EQ(kloosterman(FieldSpec(3), 0, 1), -1);
    EXPECT_EQ(kloosterman(FieldSpec(1), 2, 1), -1);
    EXPECT_EQ(kloosterman(FieldSpec(1), 3, 1), 1);
}

TEST(Kloosterman, Errors) {
    EXPECT_THROW(kloosterman(FieldSpec(3), 1, 0), domain_error);
    EXPECT_THROW(kloosterman(FieldSpec(3), -1, 1), usage_error);
    EXPECT_THROW(kloosterman_direct(FieldSpec(3), 1, 0), domain_error);
    EXPECT_THROW(k2_via_square(FieldSpec(3), 0), domain_error);
    EXPECT_THROW(kloosterman_direct(FieldSpec(8), 4, 1), usage_error);  // 255^4 > 2^24
}

TEST(Kloosterman, Histograms) {
    EXPECT_EQ(kloosterman_table(FieldSpec(2), 1).histogram(), (Histogram{{-1, 2}, {3, 1}}));
    EXPECT_EQ(kloosterman_table(FieldSpec(3), 1).histogram(), (Histogram{{-5, 1}, {-1, 3}, {3, 3}}));
    EXPECT_EQ(kloosterman_table(FieldSpec(4), 1).histogram(), (Histogram{{-5, 4}, {-1, 5}, {3, 4}, {7, 2}}));
}

TEST(Kloosterman, FrozenPointValues) {
    EXPECT_EQ(kloosterman(FieldSpec(2), 1, 1), 3);
    EXPECT_EQ(kloosterman(FieldSpec(3), 1, 1), -5);
    EXPECT_EQ(kloosterman(FieldSpec(4), 1, 1), -1);
    EXPECT_EQ(kloosterman(FieldSpec(3), 2, 1), 17);
    const FieldSpec f4(2);
    EXPECT_EQ(kloosterman(f4, 3, 1), 11);
    EXPECT_EQ(kloosterman(f4, 3, 2), -5);
    EXPECT_EQ(kloosterman(f4, 3, 3), -5);
}

TEST(Kloosterman, RecursionMatchesDirectEnumeration) {
    for (unsigned r : {1u, 2u, 3u}) {
        const FieldSpec f(r);
        for (int m = 0; m <= 3; ++m) {
            const auto table = kloosterman_table(f, m);
            for (FieldElement a = 1; a < f.q(); ++a)
                ASSERT_EQ(table.at(a), kloosterman_direct(f, m, a)) << "r=" << r << " m=" << m << " a=" << a;
        }
    }
    const FieldSpec f16(4);
    const auto t2 = kloosterman_table(f16, 2);
    for (FieldElement a = 1; a < 16; ++a) ASSERT_EQ(t2.at(a), kloosterman_direct(f16, 2, a));
}

TEST(Kloosterman, SquareIdentity) {
    for (unsigned r : {2u, 3u, 4u, 5u}) {
        const FieldSpec f(r);
        const auto k1 = kloosterman_table(f, 1);
        const auto k2 = kloosterman_table(f, 2);
        for (FieldElement a = 1; a < f.q(); ++a) {
            ASSERT_EQ(k2_via_square(f, a), k2.at(a));
            if (r <= 3) {
                ASSERT_EQ(k2_via_square(f, a), kloosterman_direct(f, 2, a));
            }
        }
        // examples: K = 3 -> 1, K = -1 -> -7 over GF(8)
        if (r == 3) {
            for (FieldElement a = 1; a < f.q(); ++a) {
                if (k1.at(a) == 3) {
                    EXPECT_EQ(k2_via_square(f, a), 1);
                }
                if (k1.at(a) == -1) {
                    EXPECT_EQ(k2_via_square(f, a), -7);
                }
            }
        }
    }
    EXPECT_EQ(k2_via_square(FieldSpec(2), 1), 3 * 3 - 4);
}

TEST(Kloosterman, BruteMoments) {
    EXPECT_EQ(brute_moment(FieldSpec(3), 1, 0), 7);
    EXPECT_EQ(brute_moment(FieldSpec(3), 1, 2), 55);
    EXPECT_EQ(brute_moment(FieldSpec(4), 1, 3), 289);
    for (unsigned r = 1; r <= 4; ++r) {
        const FieldSpec f(r);
        EXPECT_EQ(brute_moment(f, 1, 0), f.q() - 1);
        EXPECT_EQ(brute_moment(f, 1, 1), 1);
    }
}

TEST(Kloosterman, RangeReport) {
    EXPECT_FALSE(range_report(FieldSpec(1)).applicable);
    const auto r8 = range_report(FieldSpec(3));
    EXPECT_TRUE(r8.ok());
    EXPECT_EQ(r8.histogram, (Histogram{{-5, 1}, {-1, 3}, {3, 3}}));
    for (unsigned r = 2; r <= 10; ++r) {
        const auto rep = range_report(FieldSpec(r));
        EXPECT_TRUE(rep.ok()) << r;
        EXPECT_EQ(rep.total, (1u << r) - 1);
        const auto admissible = admissible_kloosterman_values(FieldSpec(r));
        for (const auto& [t, c] : rep.histogram)
            EXPECT_NE(std::find(admissible.begin(), admissible.end(), t), admissible.end());
    }
    EXPECT_EQ(admissible_kloosterman_values(FieldSpec(4)), (std::vector<std::int64_t>{-5, -1, 3, 7}));
    EXPECT_EQ(admissible_kloosterman_values(FieldSpec(2)), (std::vector<std::int64_t>{-1, 3}));
}

TEST(Kloosterman, ValueMultisetIndependentOfPolynomial) {
    const FieldSpec a(4, 0b10011), b(4, 0b11001);
    for (int m = 1; m <= 3; ++m) EXPECT_EQ(kloosterman_table(a, m).histogram(), kloosterman_table(b, m).histogram());
    const FieldSpec c(5, 0b100101), d(5, 0b111101);
    EXPECT_EQ(kloosterman_table(c, 1).histogram(), kloosterman_table(d, 1).histogram());
}
