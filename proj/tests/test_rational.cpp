#include <gtest/gtest.h>

#include <stdexcept>

#include "netsparsity/rational.hpp"

using namespace netsparsity;

TEST(Rational, ParsesIntegersDecimalsAndFractions) {
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(parse_rational("-3"), Rational(-3));
    EXPECT_EQ(parse_rational("2.75"), Rational(11, 4));
    EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
    EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
    EXPECT_EQ(parse_rational("+460"), Rational(460));
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "abc", "1e3", "1/0", "2..5", "1/", "/2", "3 ", ".", "--1"})
        EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Rational, FixedRounding) {
    EXPECT_EQ(to_fixed(Rational(7, 30), 4), "0.2333");
    EXPECT_EQ(to_fixed(Rational(5, 7), 2), "0.71");
    EXPECT_EQ(to_fixed(Rational(1, 8), 2), "0.13");
    EXPECT_EQ(to_fixed(Rational(-1, 8), 2), "-0.13");
    EXPECT_EQ(to_fixed(Rational(12), 0), "12");
    EXPECT_EQ(to_fixed(Rational(1, 3), 3), "0.333");
    EXPECT_EQ(to_fixed(Rational(1, 300), 2), "0.00");
}

TEST(Rational, Int128Conversion) {
    Int128 big = static_cast<Int128>(1) << 100;
    EXPECT_EQ(from_int128(big), Rational(mpz_class(1) << 100));
    EXPECT_EQ(from_int128(-big + 5), Rational(-(mpz_class(1) << 100) + 5));
    EXPECT_EQ(from_int128(0), Rational(0));
}
