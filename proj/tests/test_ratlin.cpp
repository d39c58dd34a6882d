#include "oracle_util.hpp"
#include "signreg/combinatorics.hpp"
#include "signreg/ratlin.hpp"

#include <gtest/gtest.h>

using namespace signreg;
using testutil::leibniz_det;

namespace {

const RatMatrix kPascal3{{1, 1, 1}, {1, 2, 3}, {1, 3, 6}};

}  // namespace

TEST(Rational, ParsesSignedFractions) {
    EXPECT_EQ(Rational::parse("3"), Rational(3));
    EXPECT_EQ(Rational::parse("-1/2"), Rational(-1, 2));
    EXPECT_EQ(Rational::parse("+4/6"), Rational(2, 3));
    EXPECT_EQ(Rational::parse("-2/4").str(), "-1/2");
    EXPECT_THROW(Rational::parse("2/-4"), std::invalid_argument);
}

TEST(Rational, RejectsDecimalsAndZeroDenominator) {
    EXPECT_THROW(Rational::parse("0.5"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1e3"), std::invalid_argument);
    try {
        Rational::parse("1/0");
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("1/0"), std::string::npos);
    }
}

TEST(Rational, Arithmetic) {
    Rational a(1, 3);
    a += Rational(1, 6);
    EXPECT_EQ(a, Rational(1, 2));
    EXPECT_EQ(pow(Rational(1, 2), 3), Rational(1, 8));
    EXPECT_EQ(pow(Rational(5), 0), Rational(1));
    EXPECT_LT(Rational(-1, 2), Rational(1, 3));
    EXPECT_THROW(a /= Rational(0), std::domain_error);
}

TEST(Det, Examples) {
    EXPECT_EQ(det(RatMatrix{{1, 1}, {1, 2}}), Rational(1));
    EXPECT_EQ(det(RatMatrix::identity(3)), Rational(1));
    EXPECT_EQ(det(RatMatrix{{1, 2}, {2, 4}}), Rational(0));
    EXPECT_THROW(det(RatMatrix(2, 3)), ShapeError);
}

TEST(Det, NeedsRowSwap) {
    const RatMatrix a{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}};
    EXPECT_EQ(det(a), leibniz_det(a));
}

TEST(Det, MatchesLeibnizOnRandomRationalMatrices) {
    Rng rng(101);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int t = 0; t < 60; ++t) {
            RatMatrix a = testutil::random_matrix(n, n, rng, -4, 4, 5);
            // Force some singular cases.
            if (t % 7 == 0 && n > 1)
                for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = a(0, j) * Rational(2, 3);
            const Rational ref = leibniz_det(a);
            EXPECT_EQ(det(a), ref) << a.str();
            EXPECT_EQ(det_cofactor(a), ref) << a.str();
        }
}

TEST(Det, MultiplicativeAndTransposeInvariant) {
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        const RatMatrix a = testutil::random_matrix(4, 4, rng);
        const RatMatrix b = testutil::random_matrix(4, 4, rng);
        EXPECT_EQ(det(a * b), det(a) * det(b));
        EXPECT_EQ(det(a.transposed()), det(a));
    }
}

TEST(Minor, Examples) {
    EXPECT_EQ(minor(kPascal3, {1, 3}, {2, 3}), Rational(3));
    EXPECT_EQ(minor(kPascal3, {2}, {3}), Rational(3));
    EXPECT_EQ(minor(RatMatrix{{1, 1}, {1, 1}}, {1, 2}, {1, 2}), Rational(0));
    EXPECT_THROW(minor(kPascal3, {1, 2}, {1}), ShapeError);
    EXPECT_THROW(minor(kPascal3, {1, 4}, {1, 2}), ShapeError);
}

TEST(Minor, OneByOneIsEntry) {
    Rng rng(2);
    const RatMatrix a = testutil::random_matrix(3, 4, rng);
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= 4; ++j) EXPECT_EQ(minor(a, {i}, {j}), a.at(i, j));
}

TEST(IndexSetTest, ValidatesAndFormats) {
    EXPECT_THROW(IndexSet({2, 1}), ShapeError);
    EXPECT_THROW(IndexSet({0, 1}), ShapeError);
    EXPECT_EQ(IndexSet::contiguous(2, 3).str(), "{2,3,4}");
    EXPECT_TRUE(IndexSet({2, 3}).is_contiguous());
    EXPECT_FALSE(IndexSet({1, 3}).is_contiguous());
    EXPECT_EQ(IndexSet({1, 3, 5}).without(1), IndexSet({1, 5}));
}

TEST(Subsets, LexicographicAndCounted) {
    const auto s = subsets(4, 2);
    ASSERT_EQ(s.size(), 6U);
    EXPECT_EQ(s.front(), IndexSet({1, 2}));
    EXPECT_EQ(s[1], IndexSet({1, 3}));
    EXPECT_EQ(s.back(), IndexSet({3, 4}));
    for (std::size_t n = 1; n <= 7; ++n)
        for (std::size_t r = 1; r <= n; ++r) EXPECT_EQ(subsets(n, r).size(), binomial(n, r));
}

TEST(Adjugate, Examples) {
    EXPECT_EQ(adjugate(RatMatrix{{5}}), RatMatrix{{1}});
    EXPECT_EQ(adjugate(RatMatrix{{1, 1}, {1, 2}}), (RatMatrix{{2, -1}, {-1, 1}}));
    EXPECT_EQ(adjugate(RatMatrix::identity(3)), RatMatrix::identity(3));
}

TEST(Adjugate, TimesMatrixIsDetIdentity) {
    Rng rng(9);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int t = 0; t < 20; ++t) {
            RatMatrix a = testutil::random_matrix(n, n, rng);
            if (t % 5 == 0 && n > 1)
                for (std::size_t i = 0; i < n; ++i) a(i, 1) = a(i, 0);
            const Rational d = leibniz_det(a);
            RatMatrix di(n, n);
            for (std::size_t i = 0; i < n; ++i) di(i, i) = d;
            EXPECT_EQ(adjugate(a) * a, di);
            EXPECT_EQ(a * adjugate(a), di);
        }
}

TEST(KernelVector, Examples) {
    EXPECT_EQ(kernel_vector(RatMatrix{{1, 1}, {1, 1}}), (RatVector{1, -1}));
    EXPECT_EQ(kernel_vector(RatMatrix{{0}}), RatVector{1});
    EXPECT_EQ(kernel_vector(RatMatrix{{1, 2}, {2, 4}}), (RatVector{1, Rational(-1, 2)}));
    EXPECT_THROW(kernel_vector(RatMatrix{{1, 1}, {1, 2}}), DomainError);
}

TEST(KernelVector, AnnihilatesSingularMatrices) {
    Rng rng(17);
    for (std::size_t n = 2; n <= 5; ++n)
        for (int t = 0; t < 30; ++t) {
            RatMatrix a = testutil::random_matrix(n, n, rng);
            // Last column a combination of the first two.
            for (std::size_t i = 0; i < n; ++i) a(i, n - 1) = a(i, 0) * Rational(1, 2) - a(i, 1 % (n - 1));
            const RatVector z = kernel_vector(a);
            EXPECT_FALSE(z.is_zero());
            EXPECT_TRUE(mat_vec(a, z).is_zero());
            std::size_t first = 0;
            while (z[first].is_zero()) ++first;
            EXPECT_EQ(z[first], Rational(1));
        }
}

TEST(MatVec, Examples) {
    EXPECT_EQ(mat_vec(RatMatrix{{1, 1}, {1, 2}}, RatVector{1, -1}), (RatVector{0, -1}));
    const RatVector x{Rational(1, 2), -3, 7};
    EXPECT_EQ(mat_vec(RatMatrix::identity(3), x), x);
    EXPECT_THROW(mat_vec(RatMatrix::identity(2), x), ShapeError);
    EXPECT_EQ(submatrix(kPascal3, {1, 2}, {1, 2}), (RatMatrix{{1, 1}, {1, 2}}));
}

TEST(DirectSum, BlockDiagonal) {
    const RatMatrix s = direct_sum(RatMatrix{{1, 2}, {3, 4}}, RatMatrix{{0}});
    EXPECT_EQ(s, (RatMatrix{{1, 2, 0}, {3, 4, 0}, {0, 0, 0}}));
}
