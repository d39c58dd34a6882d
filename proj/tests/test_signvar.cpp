#include "oracle_util.hpp"
#include "signreg/oracles.hpp"
#include "signreg/signvar.hpp"

#include <gtest/gtest.h>

using namespace signreg;

TEST(SMinus, Examples) {
    EXPECT_EQ(s_minus(RatVector{1, -2, 3}), 2U);
    EXPECT_EQ(s_minus(RatVector{1, 0, -1}), 1U);
    EXPECT_EQ(s_minus(RatVector{0, 0, 0}), 0U);
}

TEST(SPlus, Examples) {
    EXPECT_EQ(s_plus(RatVector{1, 0, 1}), 2U);
    EXPECT_EQ(s_plus(RatVector{0, 0, 0}), 3U);
    EXPECT_EQ(s_plus(RatVector{1, 0, 0, 1}), 2U);
    EXPECT_EQ(s_plus(RatVector{1, 0, -1}), 1U);
    EXPECT_EQ(s_plus(RatVector{0, 5, 0}), 2U);
}

TEST(VariationProfile, Examples) {
    const auto a = variation_profile(RatVector{0, 1});
    EXPECT_EQ(a.s_plus, 1U);
    EXPECT_EQ(a.s_plus_first_signs, (SignSet{true, false}));
    EXPECT_EQ(a.s_plus_last_signs, (SignSet{false, true}));

    const auto b = variation_profile(RatVector{1, -1});
    EXPECT_EQ(b.s_plus_first_signs, (SignSet{false, true}));
    EXPECT_EQ(b.s_plus_last_signs, (SignSet{true, false}));
    EXPECT_EQ(b.first_nonzero_sign, 1);
    EXPECT_EQ(b.last_nonzero_sign, -1);

    const auto z = variation_profile(RatVector{0, 0});
    EXPECT_TRUE(z.zero_vector);
    EXPECT_EQ(z.s_plus, 2U);
    EXPECT_EQ(z.s_minus, 0U);
    EXPECT_TRUE(z.s_plus_first_signs.empty());
    EXPECT_TRUE(z.s_plus_last_signs.empty());
}

TEST(VariationProfile, AmbiguousFirstSignOnlyWhenFreeEnds) {
    // (0,0,1): maximizing fillings are (+,-,+) only, so first sign is unique.
    const auto p = variation_profile(RatVector{0, 0, 1});
    EXPECT_EQ(p.s_plus, 2U);
    EXPECT_TRUE(p.s_plus_first_signs.unique());
    EXPECT_EQ(p.s_plus_first_signs.only(), 1);
}

TEST(SPlus, MatchesExhaustiveFillingUpToLengthEight) {
    for (std::size_t len = 1; len <= 8; ++len) {
        std::size_t total = 1;
        for (std::size_t t = 0; t < len; ++t) total *= 3;
        std::vector<int> v(len);
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t c = code;
            for (std::size_t t = 0; t < len; ++t, c /= 3) v[t] = static_cast<int>(c % 3) - 1;
            const auto dp = variation_profile(v);
            EXPECT_EQ(dp.s_minus, testutil::s_minus_naive(v));
            if (std::all_of(v.begin(), v.end(), [](int s) { return s == 0; })) {
                EXPECT_EQ(dp.s_plus, len);
                continue;
            }
            const auto brute = oracle::s_plus_by_filling(v);
            ASSERT_EQ(dp.s_plus, brute.s_plus);
            EXPECT_EQ(dp.s_plus_first_signs, brute.first);
            EXPECT_EQ(dp.s_plus_last_signs, brute.last);
        }
    }
}

TEST(Variation, InvariantUnderPositiveScalingAndReversal) {
    Rng rng(3);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 9));
        RatVector x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = rng.bernoulli(0.3) ? Rational(0) : rng.rational(-4, 4, 3);
        RatVector scaled(n), reversed(n), negated = x.negated();
        const Rational c = rng.positive_rational(7);
        for (std::size_t i = 0; i < n; ++i) {
            scaled[i] = x[i] * c;
            reversed[i] = x[n - 1 - i];
        }
        EXPECT_EQ(s_minus(scaled), s_minus(x));
        EXPECT_EQ(s_plus(scaled), s_plus(x));
        EXPECT_EQ(s_minus(reversed), s_minus(x));
        EXPECT_EQ(s_plus(reversed), s_plus(x));
        EXPECT_EQ(s_plus(negated), s_plus(x));
        EXPECT_LE(s_minus(x), s_plus(x));
        if (!x.is_zero()) EXPECT_LE(s_plus(x), n - 1);
    }
}

TEST(Partition, Examples) {
    const auto a = partition_by_sign(RatVector{2, -3});
    EXPECT_EQ(a.boundaries, (std::vector<std::size_t>{1}));
    EXPECT_FALSE(a.flipped);
    EXPECT_EQ(a.block_begin(2), 2U);

    const auto b = partition_by_sign(RatVector{1, 0, -1, -2});
    EXPECT_EQ(b.boundaries, (std::vector<std::size_t>{2}));
    EXPECT_EQ(b.block_begin(1), 1U);
    EXPECT_EQ(b.block_end(1), 2U);
    EXPECT_EQ(b.block_begin(2), 3U);
    EXPECT_EQ(b.block_end(2), 4U);

    const auto c = partition_by_sign(RatVector{-1, 1});
    EXPECT_TRUE(c.flipped);
    EXPECT_EQ(c.block_count(), 2U);

    EXPECT_THROW(partition_by_sign(RatVector{0, 0}), DomainError);
}

TEST(Partition, BlocksAreSignConstantAndCoverVector) {
    Rng rng(8);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 10));
        RatVector x(n);
        do {
            for (std::size_t i = 0; i < n; ++i) x[i] = rng.bernoulli(0.3) ? Rational(0) : rng.rational(-3, 3, 2);
        } while (x.is_zero());
        const auto p = partition_by_sign(x);
        EXPECT_EQ(p.block_count(), s_minus(x) + 1);
        EXPECT_EQ(p.block_begin(1), 1U);
        EXPECT_EQ(p.block_end(p.block_count()), n);
        const int flip = p.flipped ? -1 : 1;
        for (std::size_t k = 1; k <= p.block_count(); ++k) {
            const int want = k % 2 ? 1 : -1;
            bool nonzero = false;
            for (std::size_t i = p.block_begin(k); i <= p.block_end(k); ++i) {
                const int s = flip * x[i - 1].sign();
                if (s != 0) {
                    EXPECT_EQ(s, want);
                    nonzero = true;
                }
            }
            EXPECT_TRUE(nonzero);
            if (k > 1) EXPECT_EQ(p.block_begin(k), p.block_end(k - 1) + 1);
        }
    }
}
