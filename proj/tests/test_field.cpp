#include <gtest/gtest.h>

#include <random>

#include "slmoment/field.hpp"

using namespace slmoment;

TEST(Field, DefaultPolynomialsAreIrreducible) {
    for (unsigned r = 1; r <= 12; ++r) {
        const FieldSpec f(r);
        EXPECT_EQ(f.q(), 1u << r);
        EXPECT_TRUE(is_irreducible(f.reduction_poly())) << r;
    }
    EXPECT_EQ(FieldSpec(3).reduction_poly(), 0b1011u);
    EXPECT_EQ(FieldSpec(4).reduction_poly(), 0b10011u);
    EXPECT_EQ(FieldSpec(5).reduction_poly(), 0b100101u);
    EXPECT_EQ(FieldSpec(8).reduction_poly(), 0b100011101u);
}

TEST(Field, RejectsBadPolynomials) {
    EXPECT_THROW(FieldSpec(4, 0b10001), usage_error);  // x^4 + 1 = (x+1)^4
    EXPECT_THROW(FieldSpec(4, 0b1011), usage_error);   // wrong degree
    EXPECT_THROW(FieldSpec(0), usage_error);
    EXPECT_THROW(FieldSpec(21), usage_error);
    EXPECT_NO_THROW(FieldSpec(4, 0b11001));  // x^4 + x^3 + 1
}

TEST(Field, AddIsXor) {
    EXPECT_EQ(add(0b011, 0b101), 0b110u);
    EXPECT_EQ(add(5, 0), 5u);
    EXPECT_EQ(add(5, 5), 0u);
}

TEST(Field, MulInGf8) {
    const FieldSpec f(3);
    EXPECT_EQ(mul(f, 0b010, 0b100), 0b011u);  // x * x^2 = x + 1
    EXPECT_EQ(mul(f, 0b110, 1), 0b110u);
    EXPECT_EQ(mul(f, 0b110, 0), 0u);
}

TEST(Field, InverseInGf8) {
    const FieldSpec f(3);
    EXPECT_EQ(inv(f, 1), 1u);
    EXPECT_EQ(inv(f, 0b010), 0b101u);
    EXPECT_THROW(inv(f, 0), domain_error);
}

TEST(Field, InverseExhaustive) {
    for (unsigned r = 1; r <= 8; ++r) {
        const FieldSpec f(r);
        for (FieldElement a = 1; a < f.q(); ++a) ASSERT_EQ(mul(f, a, inv(f, a)), 1u) << r << " " << a;
    }
}

TEST(Field, RingAxiomsExhaustiveSmall) {
    for (unsigned r = 1; r <= 4; ++r) {
        const FieldSpec f(r);
        for (FieldElement a = 0; a < f.q(); ++a)
            for (FieldElement b = 0; b < f.q(); ++b) {
                ASSERT_EQ(mul(f, a, b), mul(f, b, a));
                for (FieldElement c = 0; c < f.q(); ++c) {
                    ASSERT_EQ(mul(f, a, add(b, c)), add(mul(f, a, b), mul(f, a, c)));
                    ASSERT_EQ(mul(f, mul(f, a, b), c), mul(f, a, mul(f, b, c)));
                }
            }
    }
}

TEST(Field, RingAxiomsRandomized) {
    std::mt19937 rng(20261016);
    for (unsigned r = 5; r <= 16; ++r) {
        const FieldSpec f(r);
        std::uniform_int_distribution<FieldElement> pick(0, f.q() - 1);
        for (int trial = 0; trial < 2000; ++trial) {
            const FieldElement a = pick(rng), b = pick(rng), c = pick(rng);
            ASSERT_TRUE(f.contains(mul(f, a, b)));
            ASSERT_EQ(mul(f, a, b), mul(f, b, a));
            ASSERT_EQ(mul(f, a, add(b, c)), add(mul(f, a, b), mul(f, a, c)));
            ASSERT_EQ(mul(f, mul(f, a, b), c), mul(f, a, mul(f, b, c)));
        }
    }
}

TEST(Field, TraceValues) {
    EXPECT_EQ(trace(FieldSpec(3), 0), 0);
    EXPECT_EQ(trace(FieldSpec(3), 1), 1);
    EXPECT_EQ(trace(FieldSpec(4), 1), 0);
}

TEST(Field, TraceIsBalancedLinearAndFrobeniusInvariant) {
    for (unsigned r = 1; r <= 10; ++r) {
        const FieldSpec f(r);
        unsigned zeros = 0;
        for (FieldElement a = 0; a < f.q(); ++a) {
            zeros += trace(f, a) == 0;
            ASSERT_EQ(trace(f, square(f, a)), trace(f, a));
        }
        EXPECT_EQ(zeros, f.q() / 2) << r;
    }
    const FieldSpec f(5);
    for (FieldElement a = 0; a < f.q(); ++a)
        for (FieldElement b = 0; b < f.q(); ++b) ASSERT_EQ(trace(f, a ^ b), trace(f, a) ^ trace(f, b));
}

TEST(Field, LambdaIsACharacter) {
    EXPECT_EQ(lambda(FieldSpec(3), 0), 1);
    EXPECT_EQ(lambda(FieldSpec(3), 1), -1);
    for (unsigned r = 1; r <= 8; ++r) {
        const FieldSpec f(r);
        int sum = 0;
        for (FieldElement a = 0; a < f.q(); ++a) {
            sum += lambda(f, a);
            for (FieldElement b = 0; b < f.q(); b += 3) ASSERT_EQ(lambda(f, a ^ b), lambda(f, a) * lambda(f, b));
        }
        EXPECT_EQ(sum, 0) << r;
    }
}

TEST(Field, MismatchedSpecsAreRejected) {
    EXPECT_NO_THROW(require_same_field(FieldSpec(4), FieldSpec(4)));
    EXPECT_THROW(require_same_field(FieldSpec(4), FieldSpec(4, 0b11001)), usage_error);
}
