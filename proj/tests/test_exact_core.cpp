#include <gtest/gtest.h>

#include <random>

#include "ssm/errors.hpp"
#include "ssm/exact_core.hpp"

using namespace ssm;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

DigitSet rational_digits(std::initializer_list<const char*> xs) {
  std::vector<Rational> v;
  for (auto x : xs) v.push_back(R(x));
  return DigitSet::make_rational(v);
}

const NormalizedDigits& as_normalized(const NormalizeResult& r) { return std::get<NormalizedDigits>(r); }

}  // namespace

TEST(TauLinear, ParsesTheAcceptedShapes) {
  EXPECT_EQ(TauLinear::parse("3/2"), (TauLinear{R("3/2"), R("0")}));
  EXPECT_EQ(TauLinear::parse("t"), (TauLinear{R("0"), R("1")}));
  EXPECT_EQ(TauLinear::parse("-2t"), (TauLinear{R("0"), R("-2")}));
  EXPECT_EQ(TauLinear::parse("1/2 + 3/4*t"), (TauLinear{R("1/2"), R("3/4")}));
  EXPECT_EQ(TauLinear::parse("1/2+3/4 t"), (TauLinear{R("1/2"), R("3/4")}));
  EXPECT_EQ(TauLinear::parse("t+1"), (TauLinear{R("1"), R("1")}));
  EXPECT_EQ(TauLinear::parse("1 - t").str(), "1 - t");
  EXPECT_THROW(TauLinear::parse("x"), InvalidInput);
  EXPECT_THROW(TauLinear::parse(""), InvalidInput);
}

TEST(ContractionRatio, RationalMustLieInUnitInterval) {
  EXPECT_EQ(ContractionRatio::rational(R("1/4")).str(), "1/4");
  EXPECT_THROW(ContractionRatio::rational(R("1")), InvalidInput);
  EXPECT_THROW(ContractionRatio::rational(R("0")), InvalidInput);
  EXPECT_THROW(ContractionRatio::rational(R("3/2")), InvalidInput);
}

TEST(ContractionRatio, RootForm) {
  auto r = ContractionRatio::root(1, 2, 2);
  EXPECT_FALSE(r.is_rational());
  EXPECT_EQ(r.str(), "(1/2)^(1/2)");
  EXPECT_NEAR(r.to_double(), std::sqrt(0.5), 1e-15);
  // r = 1 and perfect powers collapse to rationals
  EXPECT_TRUE(ContractionRatio::root(1, 3, 1).is_rational());
  auto q = ContractionRatio::root(1, 4, 2);
  ASSERT_TRUE(q.is_rational());
  EXPECT_EQ(q.value(), R("1/2"));
  // reduced before checking
  auto g = ContractionRatio::root(2, 4, 2);
  EXPECT_EQ(g.root_form().n, 1);
  EXPECT_EQ(g.root_form().m, 2);
  EXPECT_THROW(ContractionRatio::root(3, 2, 2), InvalidInput);
  EXPECT_THROW(ContractionRatio::root(0, 2, 2), InvalidInput);
}

TEST(DigitSet, Validation) {
  EXPECT_THROW(DigitSet::make_rational({}), InvalidInput);
  EXPECT_THROW(rational_digits({"0", "1", "1"}), InvalidInput);
  EXPECT_THROW(rational_digits({"1", "2"}), InvalidInput);
  EXPECT_THROW(rational_digits({"0", "-1"}), InvalidInput);
  EXPECT_EQ(rational_digits({"9", "0", "1", "8"}).str(), "{0, 1, 8, 9}");
  EXPECT_TRUE(DigitSet::parse("0,1,t,t+1").has_tau());
}

TEST(NormalizeDigits, RationalExamples) {
  auto a = as_normalized(normalize_digits(rational_digits({"0", "1/4", "2", "9/4"})));
  EXPECT_EQ(a.scale.p, R("1/4"));
  EXPECT_EQ(a.integers.values(), (std::vector<std::int64_t>{0, 1, 8, 9}));

  auto b = as_normalized(normalize_digits(rational_digits({"0", "5"})));
  EXPECT_EQ(b.scale.p, R("5"));
  EXPECT_EQ(b.integers.values(), (std::vector<std::int64_t>{0, 1}));

  auto c = as_normalized(normalize_digits(rational_digits({"0"})));
  EXPECT_EQ(c.integers.values(), (std::vector<std::int64_t>{0}));
}

TEST(NormalizeDigits, TauWithIrrationalRatioGivesWitness) {
  auto r = normalize_digits(DigitSet::parse("0,1,t,t+1"));
  ASSERT_TRUE(std::holds_alternative<IrreducibleWitness>(r));
  EXPECT_EQ(std::get<IrreducibleWitness>(r).ratio(), "t/1");
}

TEST(NormalizeDigits, TauWithRationalRatios) {
  auto r = normalize_digits(DigitSet::parse("0,t,2t,3t"));
  ASSERT_TRUE(std::holds_alternative<NormalizedDigits>(r));
  const auto& n = std::get<NormalizedDigits>(r);
  EXPECT_EQ(n.scale, (TauLinear{R("0"), R("1")}));
  EXPECT_EQ(n.integers.values(), (std::vector<std::int64_t>{0, 1, 2, 3}));

  auto s = as_normalized(normalize_digits(DigitSet::parse("0,1+t,1/2+1/2t")));
  EXPECT_EQ(s.scale, (TauLinear{R("1/2"), R("1/2")}));
  EXPECT_EQ(s.integers.values(), (std::vector<std::int64_t>{0, 1, 2}));

  EXPECT_THROW(normalize_digits(DigitSet::parse("0,t,-t")), InvalidInput);
}

TEST(NormalizeDigits, FiveDigitsUnsupported) {
  EXPECT_THROW(normalize_digits(DigitSet::parse("0,1,3,5,6")), Unsupported);
}

// Idempotence and scale invariance on random rational digit sets.
TEST(NormalizeDigits, IdempotentAndScaleInvariant) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> card(1, 4), num(1, 60), den(1, 12);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Rational> v{Rational(0)};
    int n = card(rng);
    while (static_cast<int>(v.size()) < n) {
      Rational x(BigInt(num(rng)), BigInt(den(rng)));
      if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    }
    auto d = DigitSet::make_rational(v);
    auto base = as_normalized(normalize_digits(d));
    EXPECT_EQ(base.integers.gcd(), n == 1 ? 0 : 1);

    std::vector<Rational> ints(base.integers.values().begin(), base.integers.values().end());
    auto again = as_normalized(normalize_digits(DigitSet::make_rational(ints)));
    EXPECT_EQ(again.scale.p, Rational(1));
    EXPECT_EQ(again.integers, base.integers);

    Rational c(BigInt(num(rng)), BigInt(den(rng)));
    auto scaled = as_normalized(normalize_digits(d.scaled(c)));
    EXPECT_EQ(scaled.integers, base.integers);
    if (n > 1) {
      EXPECT_EQ(scaled.scale.p, c * base.scale.p);
    }
  }
}

TEST(WeightVector, Validation) {
  EXPECT_TRUE(WeightVector::uniform(4).is_equal());
  EXPECT_FALSE(WeightVector::parse("1/10,2/10,3/10,4/10").is_equal());
  EXPECT_THROW(WeightVector::parse("1/2,1/3"), InvalidInput);
  EXPECT_THROW(WeightVector::parse("1,0"), InvalidInput);
  EXPECT_THROW(WeightVector::parse("3/2,-1/2"), InvalidInput);
  EXPECT_THROW(WeightVector::uniform(0), InvalidInput);
}

TEST(Val2, Examples) {
  EXPECT_EQ(val2(8).t, 3);
  EXPECT_EQ(val2(8).odd, 1);
  EXPECT_EQ(val2(12).t, 2);
  EXPECT_EQ(val2(12).odd, 3);
  EXPECT_EQ(val2(7).t, 0);
  EXPECT_EQ(val2(7).odd, 7);
  EXPECT_THROW(val2(0), InvalidInput);
  EXPECT_THROW(val2(-4), InvalidInput);
}

TEST(Val2, ReconstructsEveryValue) {
  for (std::int64_t n = 1; n <= 5000; ++n) {
    auto [t, odd] = val2(n);
    EXPECT_EQ(odd % 2, 1);
    EXPECT_EQ(odd << t, n);
    EXPECT_EQ(n % (std::int64_t{1} << t), 0);
    EXPECT_NE(n % (std::int64_t{1} << (t + 1)), 0);
  }
}

TEST(DecomposeEven, Examples) {
  EXPECT_EQ(decompose_even(4).beta, 2);
  EXPECT_EQ(decompose_even(4).m, 1);
  EXPECT_EQ(decompose_even(12).beta, 2);
  EXPECT_EQ(decompose_even(12).m, 3);
  EXPECT_EQ(decompose_even(9).beta, 0);
  EXPECT_EQ(decompose_even(9).m, 9);
  EXPECT_THROW(decompose_even(1), InvalidInput);
}

TEST(CheckedArithmetic, OverflowThrows) {
  EXPECT_EQ(checked_pow(4, 10), 1048576);
  EXPECT_THROW(checked_pow(10, 20), Unsupported);
  EXPECT_THROW(checked_add(INT64_MAX, 1), Unsupported);
}

TEST(SplitList, TrimsAndRejectsEmptyEntries) {
  EXPECT_EQ(split_list(" 0, 1 ,8"), (std::vector<std::string>{"0", "1", "8"}));
  EXPECT_THROW(split_list("0,,1"), InvalidInput);
}
