#include <gtest/gtest.h>

#include <random>

#include "ssm/errors.hpp"
#include "ssm/rational.hpp"

using ssm::BigInt;
using ssm::Rational;

TEST(Rational, StoresLowestTermsWithPositiveDenominator) {
  Rational r{BigInt(6), BigInt(-8)};
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(Rational(BigInt(0), BigInt(-5)).den(), 1);
  EXPECT_EQ(Rational(BigInt(0), BigInt(7)), Rational(0));
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_THROW(Rational(BigInt(1), BigInt(0)), ssm::InvalidInput); }

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("3/12").str(), "1/4");
  EXPECT_EQ(Rational::parse(" -10/4 ").str(), "-5/2");
  EXPECT_EQ(Rational::parse("7").str(), "7");
  EXPECT_EQ(Rational::parse("+2/1").str(), "2");
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/10").str(), "12345678901234567890123456789");
}

TEST(Rational, ParseRejectsMalformedText) {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "a", "1.5", "1//2", "--1", "1/x"})
    EXPECT_THROW(Rational::parse(bad), ssm::InvalidInput) << bad;
}

TEST(Rational, Arithmetic) {
  Rational a = Rational::parse("1/6"), b = Rational::parse("1/3");
  EXPECT_EQ(a + b, Rational::parse("1/2"));
  EXPECT_EQ(a - b, Rational::parse("-1/6"));
  EXPECT_EQ(a * b, Rational::parse("1/18"));
  EXPECT_EQ(a / b, Rational::parse("1/2"));
  EXPECT_EQ(-a, Rational::parse("-1/6"));
  EXPECT_EQ(Rational::parse("-2/3").abs(), Rational::parse("2/3"));
  EXPECT_EQ(Rational::parse("-2/3").reciprocal(), Rational::parse("-3/2"));
  EXPECT_THROW(Rational(0).reciprocal(), ssm::InvalidInput);
  EXPECT_THROW(a / Rational(0), ssm::InvalidInput);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational::parse("1/3"), Rational::parse("1/2"));
  EXPECT_LT(Rational::parse("-1/2"), Rational::parse("-1/3"));
  EXPECT_GT(Rational(1), Rational::parse("99/100"));
  EXPECT_EQ(Rational::parse("2/4") <=> Rational::parse("1/2"), std::strong_ordering::equal);
}

TEST(Rational, NarrowingAccessors) {
  EXPECT_EQ(Rational(5).to_int64(), 5);
  EXPECT_FALSE(Rational::parse("5/2").to_int64());
  EXPECT_FALSE(Rational::parse("100000000000000000000000").to_int64());
  EXPECT_EQ(Rational::parse("5/2").num_int64(), 5);
  EXPECT_DOUBLE_EQ(Rational::parse("1/4").to_double(), 0.25);
}

// Field axioms on random small fractions, fixed seed.
TEST(Rational, FieldIdentitiesOnRandomValues) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 40);
  for (int i = 0; i < 500; ++i) {
    Rational a(BigInt(num(rng)), BigInt(den(rng)));
    Rational b(BigInt(num(rng)), BigInt(den(rng)));
    Rational c(BigInt(num(rng)), BigInt(den(rng)));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
    }
    EXPECT_EQ(Rational::parse(a.str()), a);
  }
}
