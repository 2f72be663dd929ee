#include <gtest/gtest.h>

#include <random>

#include "bnint/rational.hpp"

using bnint::Rational;

TEST(Rational, StoredInLowestTerms) {
    Rational q(6, -4);
    EXPECT_EQ(q.num(), -3);
    EXPECT_EQ(q.den(), 2);
    EXPECT_EQ(Rational(0, 7).den(), 1);
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_THROW(Rational(1, 0), bnint::DomainError); }

TEST(Rational, FloorAndCeilRoundOutward) {
    EXPECT_EQ(Rational(7, 3).floor(), 2);
    EXPECT_EQ(Rational(7, 3).ceil(), 3);
    EXPECT_EQ(Rational(-7, 3).floor(), -3);
    EXPECT_EQ(Rational(-7, 3).ceil(), -2);
    EXPECT_EQ(Rational(6, 3).floor(), 2);
    EXPECT_EQ(Rational(6, 3).ceil(), 2);
}

TEST(Rational, ArithmeticAndOrder) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
    EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
    EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    EXPECT_EQ(Rational(-5, 2).abs(), Rational(5, 2));
    EXPECT_THROW(Rational(1) / Rational(0), bnint::DomainError);
}

TEST(Rational, ComparisonMatchesCrossMultiplication) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-1000000, 1000000), den(1, 1000000);
    for (int i = 0; i < 20000; ++i) {
        long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        bool less = (long double)a * d < (long double)c * b;
        ASSERT_EQ(Rational(a, b) < Rational(c, d), less) << a << "/" << b << " vs " << c << "/" << d;
    }
}

TEST(Rational, LargeMagnitudesCompareExactly) {
    const long long big = 4000000000000000000LL;
    EXPECT_LT(Rational(big - 1, big), Rational(big, big + 1));
    EXPECT_GT(Rational(big, 3), Rational(big - 1, 3));
    // the exact sum needs a denominator past 64 bits
    EXPECT_THROW(Rational(big, big + 1) + Rational(1, big), std::overflow_error);
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(Rational::parse("14/3"), Rational(14, 3));
    EXPECT_EQ(Rational::parse("-4"), Rational(-4));
    EXPECT_EQ(Rational(14, 3).to_string(), "14/3");
    EXPECT_EQ(Rational(8, 2).to_string(), "4");
    EXPECT_THROW(Rational::parse("1/"), bnint::DomainError);
    EXPECT_THROW(Rational::parse("x"), bnint::DomainError);
}

TEST(FloorDiv, AgreesWithDefinition) {
    for (long long a = -50; a <= 50; ++a)
        for (long long b : {-7LL, -3LL, -1LL, 1LL, 2LL, 5LL}) {
            long long f = bnint::floor_div(a, b), c = bnint::ceil_div(a, b);
            EXPECT_TRUE(b > 0 ? (f * b <= a && a < (f + 1) * b) : (f * b >= a && a > (f + 1) * b));
            EXPECT_TRUE(b > 0 ? (c * b >= a && a > (c - 1) * b) : (c * b <= a && a < (c - 1) * b));
        }
}
