#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "ssm/cyclotomic.hpp"
#include "ssm/errors.hpp"
#include "ssm/mask_zeros.hpp"

using namespace ssm;

namespace {

Rational R(const char* s) { return Rational::parse(s); }
IntegerDigits D(std::vector<std::int64_t> v) { return IntegerDigits::make(std::move(v)); }

std::vector<std::string> part_strings(const ZeroSet& z) {
  std::vector<std::string> out;
  for (const auto& p : z.parts) out.push_back(p.str());
  return out;
}

// Random gcd-1 digit set {0 < c1 < ... } with entries <= bound.
IntegerDigits random_digits(std::mt19937_64& rng, int card, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> pick(1, bound);
  for (;;) {
    std::vector<std::int64_t> v{0};
    while (static_cast<int>(v.size()) < card) {
      auto x = pick(rng);
      if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    }
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    if (g == 1) return D(v);
  }
}

}  // namespace

TEST(ScaledResidues, MembershipAndValidation) {
  auto half_odd = ScaledResidues::odd_multiples(R("1/2"));
  EXPECT_TRUE(half_odd.contains(R("3/2")));
  EXPECT_TRUE(half_odd.contains(R("-1/2")));
  EXPECT_FALSE(half_odd.contains(R("1")));
  EXPECT_FALSE(half_odd.contains(R("0")));
  auto thirds = ScaledResidues::make(R("1/3"), 3, {2, 1});
  EXPECT_EQ(thirds.residues, (std::vector<std::int64_t>{1, 2}));
  EXPECT_TRUE(thirds.contains(R("-2/3")));
  EXPECT_FALSE(thirds.contains(R("1")));
  EXPECT_THROW(ScaledResidues::make(R("1/3"), 3, {0}), InvalidInput);
  EXPECT_THROW(ScaledResidues::make(R("-1/3"), 3, {1}), InvalidInput);
  EXPECT_THROW(ScaledResidues::make(R("1/3"), 1, {1}), InvalidInput);
  EXPECT_THROW(ScaledResidues::make(R("1/3"), 3, {}), InvalidInput);
}

TEST(ScaledResidues, FamilyContainment) {
  auto half = ScaledResidues::odd_multiples(R("1/2"));
  EXPECT_TRUE(ScaledResidues::odd_multiples(R("1/6")).contains_family(half));  // 1/2 O = 3 * (1/6) O
  EXPECT_FALSE(half.contains_family(ScaledResidues::odd_multiples(R("1"))));   // 1 = 2 * 1/2
  EXPECT_FALSE(half.contains_family(ScaledResidues::make(R("1/2"), 3, {1})));
}

TEST(ZeroSet, Examples) {
  EXPECT_EQ(part_strings(zero_set(D({0, 1, 2, 3}))), (std::vector<std::string>{"(1/2)O", "(1/4)O"}));
  EXPECT_EQ(part_strings(zero_set(D({0, 1, 8, 9}))), (std::vector<std::string>{"(1/2)O", "(1/16)O"}));
  EXPECT_TRUE(zero_set(D({0, 1, 4})).empty());
  EXPECT_TRUE(zero_set(D({0})).empty());
  EXPECT_EQ(part_strings(zero_set(D({0, 1}))), (std::vector<std::string>{"(1/2)O"}));
  EXPECT_EQ(part_strings(zero_set(D({0, 1, 2}))), (std::vector<std::string>{"(1/3){n: n mod 3 in {1,2}}"}));
  EXPECT_TRUE(zero_set(D({0, 1, 2, 4})).empty());  // one odd digit
  EXPECT_TRUE(zero_set(D({0, 1, 3, 5})).empty());  // three odd digits
}

TEST(ZeroSet, NonPrimitiveDigitsAreRescaled) {
  // Z(M_{gC}) = Z(M_C) / g
  EXPECT_EQ(part_strings(zero_set(D({0, 2}))), (std::vector<std::string>{"(1/4)O"}));
  EXPECT_EQ(part_strings(zero_set(D({0, 2, 4, 6}))), (std::vector<std::string>{"(1/4)O", "(1/8)O"}));
}

TEST(ZeroSet, TooManyDigits) { EXPECT_THROW(zero_set(D({0, 1, 3, 5, 6})), Unsupported); }

TEST(ZeroSet, PartCountFollowsValuationShape) {
  for (std::int64_t a = 1; a <= 15; ++a)
    for (std::int64_t b = a + 1; b <= 15; ++b)
      for (std::int64_t c = b + 1; c <= 15; ++c) {
        if (std::gcd(a, std::gcd(b, c)) != 1) continue;
        auto d = zero_set_derivation(D({0, a, b, c}));
        const int odd = (a % 2) + (b % 2) + (c % 2);
        if (odd != 2) {
          EXPECT_EQ(d.shape, FourDigitShape::NoZeros);
          EXPECT_TRUE(d.raw_parts.empty());
          continue;
        }
        std::vector<std::int64_t> odds, evens;
        for (auto x : {a, b, c}) (x % 2 ? odds : evens).push_back(x);
        const bool equal_t = val2(evens[0]).t == val2(odds[1] - odds[0]).t;
        EXPECT_EQ(d.raw_parts.size(), equal_t ? 3u : 2u);
        EXPECT_EQ(d.shape, equal_t ? FourDigitShape::EqualValuations : FourDigitShape::DistinctValuations);
        EXPECT_LE(d.merged.parts.size(), d.raw_parts.size());
      }
}

TEST(ZeroSetMember, Examples) {
  ZeroSet half{{ScaledResidues::odd_multiples(R("1/2"))}};
  EXPECT_TRUE(zero_set_member(half, R("3/2")));
  EXPECT_FALSE(zero_set_member(half, R("1")));
  ZeroSet two{{ScaledResidues::odd_multiples(R("1/16")), ScaledResidues::odd_multiples(R("1/2"))}};
  EXPECT_TRUE(zero_set_member(two, R("5/16")));
  EXPECT_FALSE(zero_set_member(ZeroSet{}, R("1/2")));
}

TEST(VanishingCase, Examples) {
  auto c = D({0, 1, 2, 3});
  EXPECT_EQ(vanishing_case(c, R("1/2")), VanishingCase::Case1);
  EXPECT_EQ(vanishing_case(c, R("1/4")), VanishingCase::Case2);
  EXPECT_EQ(vanishing_case(c, R("1/3")), VanishingCase::None);
  EXPECT_THROW(vanishing_case(D({0, 1, 2}), R("1/3")), InvalidInput);
  EXPECT_STREQ(to_string(VanishingCase::Case3), "Case3");
}

// A vanishing sum of four unit vectors pairs into two cancelling pairs; the
// case classifier must agree with exact cyclotomic vanishing.
TEST(VanishingCase, AgreesWithCyclotomicZeroOnAllSmallSets) {
  for (std::int64_t a = 1; a <= 9; ++a)
    for (std::int64_t b = a + 1; b <= 9; ++b)
      for (std::int64_t c = b + 1; c <= 9; ++c) {
        auto C = D({0, a, b, c});
        for (std::int64_t q = 1; q <= 48; ++q)
          for (std::int64_t p = 0; p < 2 * q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            Rational xi{BigInt(p), BigInt(q)};
            EXPECT_EQ(vanishing_case(C, xi) != VanishingCase::None, mask_eval_exact(C.values(), xi).is_zero())
                << C.str() << " at " << xi;
          }
      }
}

// Symbolic membership against the cyclotomic oracle on random sets (the
// acceptance run covers a larger range).
TEST(ZeroSet, OracleEquivalenceOnRandomSets) {
  std::mt19937_64 rng(1337);
  for (int card : {2, 3, 4}) {
    for (int s = 0; s < 8; ++s) {
      auto C = random_digits(rng, card, 30);
      auto z = zero_set(C);
      for (std::int64_t q = 1; q <= 64; ++q)
        for (std::int64_t p = 1; p <= 4 * q; ++p) {
          if (std::gcd(p, q) != 1) continue;
          Rational xi{BigInt(p), BigInt(q)};
          ASSERT_EQ(zero_set_member(z, xi), mask_eval_exact(C.values(), xi).is_zero()) << C.str() << " at " << xi;
        }
    }
  }
}

TEST(ZeroSet, NonPrimitiveOracle) {
  for (auto C : {D({0, 2}), D({0, 3, 6}), D({0, 2, 4, 6}), D({0, 6, 16, 18})}) {
    auto z = zero_set(C);
    for (std::int64_t q = 1; q <= 64; ++q)
      for (std::int64_t p = 1; p <= 2 * q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        Rational xi{BigInt(p), BigInt(q)};
        EXPECT_EQ(zero_set_member(z, xi), mask_eval_exact(C.values(), xi).is_zero()) << C.str() << " at " << xi;
      }
  }
}

TEST(MuZeroMember, Examples) {
  EXPECT_TRUE(mu_zero_member(D({0, 2}), 4, R("16")));
  EXPECT_FALSE(mu_zero_member(D({0, 2}), 4, R("1/2")));
  EXPECT_TRUE(mu_zero_member(D({0, 1, 2, 3}), 4, R("2")));
  EXPECT_TRUE(mu_zero_member(D({0, 2}), 4, R("-3")));
  EXPECT_THROW(mu_zero_member(D({0, 2}), 4, R("0")), InvalidInput);
  EXPECT_THROW(mu_zero_member(D({0, 2}), 1, R("1")), InvalidInput);
  EXPECT_FALSE(mu_zero_member(D({0, 1, 4}), 4, R("1")));
}

// xi is a zero of mu-hat iff some factor M_C(xi / N^k) vanishes; check that
// against the cyclotomic oracle factor by factor. Factors with
// |xi / N^k| < 1 / (4 max C) have all phases in (-pi/2, pi/2) and cannot vanish.
TEST(MuZeroMember, AgreesWithFactorwiseOracle) {
  for (auto C : {D({0, 2}), D({0, 1, 8, 9}), D({0, 1, 2}), D({0, 1, 2, 3})}) {
    for (std::int64_t N : {2, 3, 4, 6}) {
      for (std::int64_t q = 1; q <= 8; ++q)
        for (std::int64_t p = -300; p <= 300; ++p) {
          if (p == 0 || std::gcd(std::abs(p), q) != 1) continue;
          Rational xi{BigInt(p), BigInt(q)};
          bool oracle = false;
          Rational nk(N);
          const Rational stop = Rational(4 * C.values().back()) * xi.abs();
          for (; nk <= stop && !oracle; nk *= Rational(N))
            oracle = mask_eval_exact(C.values(), xi / nk).is_zero();
          EXPECT_EQ(mu_zero_member(C, N, xi), oracle) << C.str() << " N=" << N << " xi=" << xi;
        }
    }
  }
}

TEST(MergeParts, DropsDuplicatesAndAbsorbedParts) {
  auto a = ScaledResidues::odd_multiples(R("1/2"));
  auto b = ScaledResidues::odd_multiples(R("1/6"));
  auto z = merge_parts({a, a, b});
  ASSERT_EQ(z.parts.size(), 1u);
  EXPECT_EQ(z.parts[0], b);
}
