#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "slmoment/tables.hpp"
#include "slmoment/weight_dist.hpp"

using namespace slmoment;

namespace {

BigInt dec(std::string_view s) { return BigInt(std::string(s)); }

}  // namespace

TEST(DualWeights, Sl2Gf8) {
    const FieldSpec f(3);
    const auto dw = dual_weights(2, f);
    EXPECT_EQ(dw[0], 0);
    std::map<BigInt, std::uint64_t> expected{{0, 1}, {240, 3}, {256, 3}, {272, 1}};
    EXPECT_EQ(dw.histogram(), expected);
    const auto k = kloosterman_table(f, 1);
    for (FieldElement a = 1; a < 8; ++a) EXPECT_EQ(dw[a], 252 - 4 * k.at(a));
}

TEST(DualWeights, EquationMatchesCoordinateCount) {
    for (auto [n, r] : {std::pair{2u, 1u}, {2u, 2u}, {2u, 3u}, {2u, 4u}, {2u, 6u}, {4u, 1u}, {4u, 2u}, {4u, 3u}, {8u, 1u}}) {
        const FieldSpec f(r);
        const auto eq = dual_weights(n, f);
        const auto counted = dual_weights_from_distribution(trace_distribution_closed(n, f));
        EXPECT_EQ(eq.weights, counted.weights) << n << " " << r;
        const auto k = kloosterman_table(f, static_cast<int>(n) - 1);
        for (FieldElement a = 1; a < f.q(); ++a) {
            EXPECT_GT(eq[a], 0);
            EXPECT_LT(eq[a], eq.params.order());
            EXPECT_EQ(2 * eq[a] + eq.params.gauss_factor() * k.at(a), eq.params.order());
        }
        // a -> c(a) injective: only a = 0 has weight zero, and the q words are distinct
        auto sorted = eq.weights;
        EXPECT_EQ(std::count(sorted.begin(), sorted.end(), BigInt(0)), 1);
    }
    EXPECT_EQ(dual_weights(4, FieldSpec(1))[1], (20160 - 64 * 1) / 2);
}

TEST(DualWeights, CodewordsAreDistinctForTinyGroups) {
    for (unsigned r : {1u, 2u}) {
        const FieldSpec f(r);
        const auto traces = coordinate_traces(2, f);
        std::vector<std::vector<int>> words;
        for (FieldElement a = 0; a < f.q(); ++a) {
            std::vector<int> word;
            for (auto t : traces) word.push_back(trace(f, mul(f, a, t)));
            words.push_back(word);
        }
        std::sort(words.begin(), words.end());
        EXPECT_EQ(std::unique(words.begin(), words.end()), words.end());
    }
}

TEST(WeightDistribution, TableIPrefix) {
    const auto wd = weight_distribution_direct(trace_distribution_closed(2, FieldSpec(3)), 21);
    ASSERT_EQ(wd.counts.size(), 22u);
    for (std::size_t i = 0; i < 22; ++i) EXPECT_EQ(wd[i], dec(kTableI[i])) << i;
    EXPECT_FALSE(wd.full);
}

TEST(WeightDistribution, TableIIIPrefix) {
    const auto wd = weight_distribution_direct(trace_distribution_closed(2, FieldSpec(4)), 11);
    for (std::size_t i = 0; i < 12; ++i) EXPECT_EQ(wd[i], dec(kTableIII[i])) << i;
}

TEST(WeightDistribution, WeightOneEqualsZeroTraceClass) {
    for (unsigned r : {2u, 3u, 4u}) {
        const auto dist = trace_distribution_closed(2, FieldSpec(r));
        EXPECT_EQ(weight_distribution_direct(dist, 1)[1], dist[0]);
    }
}

TEST(WeightDistribution, MacWilliamsAndSl2FormAgreeWithDirect) {
    for (unsigned r : {2u, 3u, 4u, 5u}) {
        const FieldSpec f(r);
        const auto dist = trace_distribution_closed(2, f);
        const auto direct = weight_distribution_direct(dist, 24);
        EXPECT_EQ(weight_distribution_macwilliams(dual_weights(2, f), 24).counts, direct.counts) << r;
        EXPECT_EQ(weight_distribution_sl2_form(f, 24).counts, direct.counts) << r;
    }
    const auto dist4 = trace_distribution_closed(4, FieldSpec(1));
    EXPECT_EQ(weight_distribution_macwilliams(dual_weights(4, FieldSpec(1)), 12).counts,
              weight_distribution_direct(dist4, 12).counts);
}

TEST(WeightDistribution, CompositionMicroOracle) {
    for (unsigned r : {1u, 2u}) {
        const auto dist = trace_distribution_closed(2, FieldSpec(r));
        const std::size_t W = std::min<std::size_t>(6, to_u64(dist.params.order()));
        EXPECT_EQ(weight_distribution_compositions(dist, W).counts, weight_distribution_direct(dist, W).counts);
    }
    const auto dist8 = trace_distribution_closed(2, FieldSpec(3));
    EXPECT_THROW(weight_distribution_compositions(dist8, 4), usage_error);
}

TEST(WeightDistribution, CodewordEnumerationAndCoordinateOrder) {
    const FieldSpec f(1);
    auto traces = coordinate_traces(2, f);
    ASSERT_EQ(traces.size(), 6u);
    const auto full = weight_distribution_direct(trace_distribution_closed(2, f), 6);
    std::vector<BigInt> expected(full.counts.begin(), full.counts.end());
    std::mt19937 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        const auto brute = weight_distribution_codewords(f, traces);
        std::vector<BigInt> got;
        for (auto c : brute) got.push_back(big_u(c));
        EXPECT_EQ(got, expected);
        std::shuffle(traces.begin(), traces.end(), rng);
    }
}

TEST(WeightDistribution, FullStructuralChecksSmallFields) {
    for (unsigned r : {1u, 2u, 3u}) {
        const FieldSpec f(r);
        const auto dist = trace_distribution_closed(2, f);
        const std::size_t N = to_u64(dist.params.order());
        const auto direct = weight_distribution_direct(dist, N);
        EXPECT_TRUE(direct.full);
        EXPECT_TRUE(check_full_distribution(direct, dist[0]).ok()) << r;
        EXPECT_EQ(weight_distribution_macwilliams(dual_weights(2, f), N), direct);
        EXPECT_EQ(weight_distribution_sl2_form(f, N), direct);
    }
}

TEST(WeightDistribution, BoundsAndEdges) {
    const FieldSpec f(2);
    const auto dist = trace_distribution_closed(2, f);
    EXPECT_THROW(weight_distribution_direct(dist, 61), usage_error);
    EXPECT_THROW(weight_distribution_macwilliams(dual_weights(2, f), 61), usage_error);
    EXPECT_THROW(weight_distribution_sl2_form(f, 61), usage_error);
    EXPECT_EQ(weight_distribution_macwilliams(dual_weights(2, f), 0).counts, (std::vector<BigInt>{1}));
    EXPECT_EQ(weight_distribution_direct(dist, 0).counts, (std::vector<BigInt>{1}));
    EXPECT_THROW(check_full_distribution(weight_distribution_direct(dist, 5), dist[0]), usage_error);
}

TEST(WeightDistribution, KrawtchoukRowMatchesConvolution) {
    const BigInt N = 504;
    for (long w : {0L, 1L, 240L, 256L, 272L, 504L}) {
        Poly minus = binomial_row(static_cast<std::uint64_t>(w), 504);
        for (std::size_t k = 1; k < minus.size(); k += 2) minus[k] = -minus[k];
        auto expected = multiply(binomial_row(504 - w, 504), minus, 504);
        expected.resize(505);
        EXPECT_EQ(krawtchouk_row(N, w, 504), expected) << w;
    }
}
