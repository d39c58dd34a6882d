#include "signreg/genlab.hpp"
#include "signreg/io.hpp"

#include <gtest/gtest.h>

using namespace signreg;

TEST(ParseMatrix, CommentsAndRationals) {
    const RatMatrix a = parse_matrix("# pascal-like\n2 3\n1 -1/2 3\n\n# mid\n0 +4/8 -7\n");
    EXPECT_EQ(a, (RatMatrix{{1, Rational(-1, 2), 3}, {0, Rational(1, 2), -7}}));
}

TEST(ParseMatrix, ErrorsCarryPosition) {
    try {
        parse_matrix("2 2\n1 1\n1 1/0\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3U);
        EXPECT_EQ(e.column(), 3U);
        EXPECT_NE(std::string(e.what()).find("'1/0'"), std::string::npos);
    }
    try {
        parse_matrix("2 2\n1 1 1\n1 1\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2U);
        EXPECT_EQ(e.column(), 5U);
    }
    EXPECT_THROW(parse_matrix("2 2\n1 1\n"), ParseError);
    EXPECT_THROW(parse_matrix("2 2\n1 1\n1 1\n1 1\n"), ParseError);
    EXPECT_THROW(parse_matrix("2\n1 1\n"), ParseError);
    EXPECT_THROW(parse_matrix("0 2\n"), ParseError);
    EXPECT_THROW(parse_matrix("1 1\n0.5\n"), ParseError);
    EXPECT_THROW(parse_matrix(""), ParseError);
}

TEST(EmitMatrix, Format) {
    EXPECT_EQ(emit_matrix(RatMatrix{{1, Rational(-1, 2)}, {0, 3}}), "2 2\n1 -1/2\n0 3\n");
}

TEST(EmitMatrix, RoundTripsGeneratedMatrices) {
    std::vector<RatMatrix> gen{pascal_tp(4), gauss_kernel(KernelParam(Rational(2, 5)), 3, 5),
                               singular_ssr(4, pascal_tp(3), KernelParam(Rational(1, 3)))};
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& eps : SignPattern::all_strict(n)) gen.push_back(random_ssr(n, n + 1, eps).matrix);
    for (const auto& a : gen) EXPECT_EQ(parse_matrix(emit_matrix(a)), a);
}

TEST(ParseVector, Tokens) {
    EXPECT_EQ(parse_vector({"1", "0", "-1/3"}), (RatVector{1, 0, Rational(-1, 3)}));
    try {
        parse_vector({"1", "x"});
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column(), 2U);
    }
    EXPECT_THROW(parse_vector({}), ParseError);
}
