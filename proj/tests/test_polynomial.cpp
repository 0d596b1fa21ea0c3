#include <gtest/gtest.h>

#include <random>

#include "slmoment/polynomial.hpp"

using namespace slmoment;

namespace {

Poly random_poly(std::mt19937_64& rng, std::size_t len, unsigned bits, bool allow_negative) {
    Poly p(len);
    for (auto& c : p) {
        c = 0;
        for (unsigned b = 0; b < bits; b += 64) {
            c <<= 64;
            c += big_u(rng());
        }
        if (allow_negative && (rng() & 1)) c = -c;
    }
    return p;
}

}  // namespace

TEST(Polynomial, BinomialRow) {
    EXPECT_EQ(binomial_row(4, 10), (Poly{1, 4, 6, 4, 1}));
    EXPECT_EQ(binomial_row(4, 2), (Poly{1, 4, 6}));
    EXPECT_EQ(binomial_row(0, 3), (Poly{1}));
}

TEST(Polynomial, KroneckerAgreesWithSchoolbook) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_poly(rng, 30 + trial * 7, 64 + trial * 40, false);
        const auto b = random_poly(rng, 25 + trial * 3, 5 + trial * 20, false);
        const std::size_t W = (trial % 2 == 0) ? 1000 : 40;
        auto expected = detail::multiply_schoolbook(a, b, W);
        trim(expected);
        auto got = multiply(a, b, W);
        trim(got);
        ASSERT_EQ(got, expected) << trial;
    }
}

TEST(Polynomial, SignedProductsAndTruncation) {
    std::mt19937_64 rng(11);
    const auto a = random_poly(rng, 40, 100, true);
    const auto b = random_poly(rng, 40, 100, true);
    const auto full = multiply(a, b, 1000);
    const auto cut = multiply(a, b, 10);
    ASSERT_EQ(cut.size(), 11u);
    for (std::size_t i = 0; i <= 10; ++i) EXPECT_EQ(cut[i], full[i]);
    // (1+x)^5 (1-x)^5 = (1-x^2)^5
    Poly minus = binomial_row(5, 5);
    for (std::size_t k = 1; k < minus.size(); k += 2) minus[k] = -minus[k];
    EXPECT_EQ(multiply(binomial_row(5, 5), minus, 20), (Poly{1, 0, -5, 0, 10, 0, -10, 0, 5, 0, -1}));
}

TEST(Polynomial, BinomialRowsMultiplyLikeExponents) {
    // (1+x)^300 (1+x)^200 = (1+x)^500, large enough to take the Kronecker path
    EXPECT_EQ(multiply(binomial_row(300, 600), binomial_row(200, 600), 600), binomial_row(500, 600));
    EXPECT_EQ(multiply(binomial_row(300, 64), binomial_row(200, 64), 64), binomial_row(500, 64));
}
