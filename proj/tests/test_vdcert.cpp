#include "oracle_util.hpp"
#include "signreg/genlab.hpp"
#include "signreg/ratlin.hpp"
#include "signreg/vdcert.hpp"

#include <gtest/gtest.h>

using namespace signreg;

namespace {

const RatMatrix kTp2{{1, 1}, {1, 2}};
const RatMatrix kOnes2{{1, 1}, {1, 1}};
const RatMatrix kSwap{{0, 1}, {1, 0}};
const RatMatrix kMixed{{1, -1}, {1, 1}};

}  // namespace

TEST(VdHolds, StrictExamples) {
    EXPECT_TRUE(vd_holds_strict(kTp2, RatVector{1, 1}));
    EXPECT_TRUE(vd_holds_strict(kTp2, RatVector{-1, 1}));
    EXPECT_FALSE(vd_holds_strict(kOnes2, RatVector{1, -1}));
    EXPECT_THROW(vd_holds_strict(kTp2, RatVector{0, 0}), DomainError);
}

TEST(VdHolds, NonstrictExamples) {
    EXPECT_TRUE(vd_holds_nonstrict(kOnes2, RatVector{1, -1}));
    EXPECT_TRUE(vd_holds_nonstrict(RatMatrix::identity(2), RatVector{1, -1}));
    EXPECT_TRUE(vd_holds_nonstrict(kMixed, RatVector{1, 1}));
}

TEST(SignAgreement, Examples) {
    EXPECT_EQ(sign_agreement(kTp2, RatVector{3, -2}, SignPattern{1, 1}, VdMode::Strict), Agreement::Pass);
    EXPECT_EQ(sign_agreement(kSwap, RatVector{1, -1}, SignPattern{1, -1}, VdMode::Nonstrict), Agreement::Pass);
    EXPECT_EQ(sign_agreement(kTp2, RatVector{1, 1}, SignPattern{1, 1}, VdMode::Strict), Agreement::Pass);
    EXPECT_EQ(sign_agreement(kTp2, RatVector{3, -2}, SignPattern{1, -1}, VdMode::Strict), Agreement::Fail);
    // r = 1 = min(m,n) - 1 needs eps_2; with eps of length 1 the check does not apply.
    EXPECT_EQ(sign_agreement(kTp2, RatVector{3, -2}, SignPattern{1}, VdMode::Strict), Agreement::NotApplicable);
    // A x = 0: not applicable.
    EXPECT_EQ(sign_agreement(kOnes2, RatVector{1, -1}, SignPattern{1, 1}, VdMode::Nonstrict),
              Agreement::NotApplicable);
}

TEST(MakeTestVector, Examples) {
    const auto a = make_test_vector(kTp2, {1, 2}, {1, 2}, RatVector{1, -1}, VdMode::Strict);
    EXPECT_EQ(a.vector, (RatVector{3, -2}));
    const auto b = make_test_vector(kTp2, {2}, {1}, RatVector{1}, VdMode::Strict);
    EXPECT_EQ(b.vector, RatVector{1});
    const auto c = make_test_vector(kOnes2, {1, 2}, {1, 2}, RatVector{1, -1}, VdMode::Strict);
    EXPECT_EQ(c.vector, (RatVector{2, -2}));
}

TEST(MakeTestVector, ValidatesSeed) {
    EXPECT_THROW(make_test_vector(kTp2, {1, 2}, {1, 2}, RatVector{1, 1}, VdMode::Strict), DomainError);
    EXPECT_THROW(make_test_vector(kTp2, {1, 2}, {1, 2}, RatVector{0, 0}, VdMode::Strict), DomainError);
    EXPECT_NO_THROW(make_test_vector(kTp2, {1, 2}, {1, 2}, RatVector{0, -1}, VdMode::Strict));
    EXPECT_THROW(make_test_vector(kTp2, {1, 2}, {1, 2}, RatVector{0, -1}, VdMode::Nonstrict), DomainError);
    EXPECT_THROW(make_test_vector(kTp2, {1, 2}, {1, 2}, RatVector{1}, VdMode::Strict), ShapeError);
}

TEST(CertifySsr, Examples) {
    const auto a = certify_ssr_via_vd(kTp2, SignPattern{1, 1});
    EXPECT_TRUE(a.certified);
    EXPECT_EQ(a.records.size(), 5U);

    const auto b = certify_ssr_via_vd(kOnes2, SignPattern{1, 1});
    EXPECT_FALSE(b.certified);
    ASSERT_TRUE(b.failure);
    EXPECT_EQ(b.failure->rows, IndexSet({1, 2}));
    EXPECT_EQ(b.failure->reason, VdFailureReason::VariationExcess);
    EXPECT_EQ(b.records.back().x, (RatVector{2, -2}));
    EXPECT_EQ(b.records.back().s_product, 2U);

    const auto c = certify_ssr_via_vd(kTp2, SignPattern{1, -1});
    EXPECT_FALSE(c.certified);
    EXPECT_EQ(c.failure->reason, VdFailureReason::SignDisagreement);
    EXPECT_EQ(c.failure->cols, IndexSet({1, 2}));
}

TEST(CertifySsr, RejectsBadPatterns) {
    EXPECT_THROW(certify_ssr_via_vd(kTp2, SignPattern{1}), DomainError);
    EXPECT_THROW(certify_ssr_via_vd(kTp2, SignPattern{1, 0}), DomainError);
}

TEST(CertifySr, Examples) {
    const auto a = certify_sr_via_vd(RatMatrix::identity(2), SignPattern{1, 1});
    EXPECT_TRUE(a.certified);
    EXPECT_EQ(a.records.size(), 5U);
    EXPECT_EQ(a.records.back().x, (RatVector{1, -1}));

    const auto b = certify_sr_via_vd(kOnes2, SignPattern{1, 1});
    EXPECT_TRUE(b.certified);
    EXPECT_EQ(b.records.back().agreement, Agreement::NotApplicable);

    const auto c = certify_sr_via_vd(kSwap, SignPattern{1, 1});
    EXPECT_FALSE(c.certified);
    EXPECT_EQ(c.failure->reason, VdFailureReason::SignDisagreement);
    EXPECT_EQ(c.failure->rows.size(), 2U);
}

TEST(Certify, StrictAgreesWithClassifierOnGeneratedMatrices) {
    Rng rng(12);
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& eps : SignPattern::all_strict(n)) {
            const RatMatrix a = random_ssr(n, n, eps, {.seed = rng.next()}).matrix;
            for (const auto& other : SignPattern::all_strict(n))
                EXPECT_EQ(certify_ssr_via_vd(a, other).certified, other == eps) << a.str() << " " << other.str();
            // A singular perturbation of the same signature is caught.
            if (n >= 2) {
                const RatMatrix s = singular_ssr(n, random_ssr(n - 1, n - 1, eps.prefix(n - 1)).matrix,
                                                 KernelParam(Rational(1, 3)));
                for (const auto& other : SignPattern::all_strict(n)) EXPECT_FALSE(certify_ssr_via_vd(s, other).certified);
            }
        }
}

TEST(Certify, RandomSeedsGiveSameVerdicts) {
    Rng rng(19);
    for (int t = 0; t < 150; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 3));
        const RatMatrix a = t % 3 == 0 ? random_ssr(n, n, SignPattern::all_plus(n), {.seed = rng.next()}).matrix
                                       : testutil::random_matrix(n, n, rng, 0, 3, 2);
        for (const auto& eps : SignPattern::all_strict(n)) {
            const bool s0 = certify_ssr_via_vd(a, eps).certified;
            const bool n0 = certify_sr_via_vd(a, eps).certified;
            for (std::uint64_t seed = 1; seed <= 4; ++seed) {
                EXPECT_EQ(certify_ssr_via_vd(a, eps, SeedRule::random(seed)).certified, s0) << a.str();
                EXPECT_EQ(certify_sr_via_vd(a, eps, SeedRule::random(seed)).certified, n0) << a.str();
            }
        }
    }
}

TEST(SeedRuleTest, DeterministicPerSubmatrix) {
    const auto r = SeedRule::random(5);
    const auto a = r.make(3, VdMode::Nonstrict, {1, 2, 3}, {1, 2, 3});
    EXPECT_EQ(a, r.make(3, VdMode::Nonstrict, {1, 2, 3}, {1, 2, 3}));
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(a[i].sign(), i % 2 ? -1 : 1);
    EXPECT_EQ(SeedRule::alternating().make(3, VdMode::Strict, {1, 2, 3}, {1, 2, 3}), (RatVector{1, -1, 1}));
}

TEST(CollectProbes, OrderAndCoverage) {
    const RatMatrix a{{1, 1, 1}, {1, 2, 3}};
    const auto strict = collect_probes(a, VdMode::Strict);
    // contiguous: 6 of order 1, 2 of order 2
    ASSERT_EQ(strict.size(), 8U);
    EXPECT_EQ(strict[6].test.cols, IndexSet({1, 2}));
    EXPECT_EQ(strict[7].test.cols, IndexSet({2, 3}));
    const auto all = collect_probes(a, VdMode::Nonstrict);
    EXPECT_EQ(all.size(), 6U + 3U);
}

TEST(FindViolation, Examples) {
    const auto a = find_vd_violation(kOnes2);
    ASSERT_TRUE(a);
    EXPECT_EQ(a->x, (RatVector{1, -1}));
    EXPECT_EQ(a->s_minus_x, 1U);
    EXPECT_TRUE(a->ax.is_zero());
    EXPECT_EQ(a->s_plus_ax, 2U);
    EXPECT_EQ(a->construction, WitnessConstruction::KernelEmbedding);

    const auto b = find_vd_violation(RatMatrix::identity(2));
    ASSERT_TRUE(b);
    EXPECT_EQ(b->x, (RatVector{0, 1}));
    EXPECT_EQ(b->ax, (RatVector{0, 1}));
    EXPECT_EQ(b->s_plus_ax, 1U);
    EXPECT_EQ(b->s_minus_x, 0U);

    const auto c = find_vd_violation(kMixed);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->x, (RatVector{1, 1}));
    EXPECT_EQ(c->ax, (RatVector{0, 2}));
    EXPECT_EQ(c->construction, WitnessConstruction::ColumnPair);

    EXPECT_FALSE(find_vd_violation(kTp2));
}

TEST(FindViolation, WitnessesVerifyWithoutFallback) {
    Rng rng(23);
    int found = 0;
    for (int t = 0; t < 600; ++t) {
        const RatMatrix a = testutil::random_matrix(static_cast<std::size_t>(rng.uniform_int(1, 4)),
                                                    static_cast<std::size_t>(rng.uniform_int(1, 4)), rng,
                                                    t % 2 ? -3 : 0, 3, 2);
        const auto w = find_vd_violation(a);
        if (!w) {
            EXPECT_EQ(classify_ssr(a, a.min_dim()).verdict, Verdict::SSR);
            continue;
        }
        ++found;
        EXPECT_NE(w->construction, WitnessConstruction::SearchFallback) << a.str();
        EXPECT_EQ(mat_vec(a, w->x), w->ax);
        EXPECT_GT(s_plus(mat_vec(a, w->x)), s_minus(w->x)) << a.str();
    }
    EXPECT_GT(found, 400);
}

TEST(FindViolation, HigherOrderSignConflicts) {
    // All entries positive, all 2x2 minors nonzero but of both signs.
    const RatMatrix a{{1, 2, 1}, {1, 1, 2}, {2, 1, 1}};
    const auto w = find_vd_violation(a);
    ASSERT_TRUE(w);
    EXPECT_NE(w->construction, WitnessConstruction::SearchFallback);
    EXPECT_GT(s_plus(mat_vec(a, w->x)), s_minus(w->x));
}

TEST(GroupColumns, Examples) {
    const auto g = group_columns(kTp2, RatVector{2, -3});
    EXPECT_EQ(g.y, (RatMatrix{{2, 3}, {2, 6}}));
    EXPECT_EQ(g.r, 1U);
    EXPECT_EQ(mat_vec(g.y, RatVector{1, -1}), (RatVector{-1, -4}));
    EXPECT_EQ(mat_vec(kTp2, RatVector{2, -3}), (RatVector{-1, -4}));

    const auto h = group_columns(kTp2, RatVector{1, 2});
    EXPECT_EQ(h.y, (RatMatrix{{3}, {5}}));
    EXPECT_EQ(h.r, 0U);

    const auto f = group_columns(RatMatrix::identity(2), RatVector{-1, 1});
    EXPECT_TRUE(f.flipped);
    EXPECT_EQ(f.y, (RatMatrix{{1, 0}, {0, 1}}));
}

TEST(GroupColumns, ReproducesProductAndInheritsSsr) {
    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        const std::size_t m = static_cast<std::size_t>(rng.uniform_int(2, 4));
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 4));
        std::vector<int> signs(std::min(m, n));
        for (auto& s : signs) s = rng.bernoulli(0.5) ? 1 : -1;
        const SignPattern eps(signs);
        const RatMatrix a = random_ssr(m, n, eps, {.seed = rng.next()}).matrix;
        RatVector x(n);
        do {
            for (std::size_t i = 0; i < n; ++i) x[i] = rng.bernoulli(0.3) ? Rational(0) : rng.rational(-3, 3, 2);
        } while (x.is_zero());
        const auto g = group_columns(a, x);
        const RatVector d = alternating_vector(g.r + 1);
        EXPECT_EQ(mat_vec(g.y, d), mat_vec(a, g.flipped ? x.negated() : x));
        if (g.r + 1 <= std::min(m, n)) {
            const auto c = classify_ssr(g.y, g.r + 1);
            EXPECT_EQ(c.verdict, Verdict::SSR);
            EXPECT_EQ(c.pattern, eps.prefix(g.r + 1));
        }
    }
}
