#include <gtest/gtest.h>

#include "ssm/errors.hpp"
#include "ssm/mask_zeros.hpp"
#include "ssm/spectra.hpp"

using namespace ssm;
using V = std::vector<std::int64_t>;

namespace {

Rational R(const char* s) { return Rational::parse(s); }
IntegerDigits D(V v) { return IntegerDigits::make(std::move(v)); }

std::vector<std::string> strs(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

}  // namespace

TEST(SpectrumTruncation, Examples) {
  HadamardTriple ht{4, V{0, 2}, V{0, 1}};
  EXPECT_EQ(spectrum_truncation(ht, 0).points, (V{0}));
  EXPECT_EQ(spectrum_truncation(ht, 2).points, (V{0, 1, 4, 5}));
  EXPECT_EQ(spectrum_truncation(ht, 3).points, (V{0, 1, 4, 5, 16, 17, 20, 21}));
  EXPECT_THROW(spectrum_truncation(ht, -1), InvalidInput);
}

TEST(SpectrumTruncation, CollisionThrows) {
  // L = {0, 4} with N = 4: 4 + 0 collides with 0 + 4 * 1
  EXPECT_THROW(spectrum_truncation(HadamardTriple{4, V{0, 1}, V{0, 1, 4}}, 2), DegenerateTriple);
}

TEST(SpectrumTruncation, NestedAndBiZero) {
  const HadamardTriple triples[] = {
      {4, V{0, 2}, V{0, 1}},
      {6, V{0, 1, 2}, V{0, 2, 4}},
      {4, V{0, 1, 2, 3}, V{0, 1, 2, 3}},
      {8, V{0, 1}, V{0, 4}},
  };
  for (const auto& ht : triples) {
    ASSERT_TRUE(is_hadamard_triple(ht));
    auto C = D(ht.D);
    V prev{0};
    for (int n = 1; n <= 4; ++n) {
      auto cur = spectrum_truncation(ht, n).points;
      EXPECT_EQ(cur.size(), prev.size() * ht.L.size());
      EXPECT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      EXPECT_TRUE(is_bizero_set(cur, C, ht.N).is_bizero) << "level " << n;
      prev = cur;
    }
  }
}

TEST(IsBiZeroSet, Examples) {
  auto C = D({0, 2});
  EXPECT_TRUE(is_bizero_set(V{0, 1, 4, 5, 16, 17, 20, 21}, C, 4).is_bizero);
  EXPECT_TRUE(is_bizero_set(V{0}, C, 4).is_bizero);

  auto bad = is_bizero_set(V{0, 1, 2}, C, 4);
  EXPECT_FALSE(bad.is_bizero);
  ASSERT_TRUE(bad.violating_pair);
  // 1 - 0 = 1 is a zero (4 * (1/4)O); 2 - 0 = 2 is not
  EXPECT_EQ(bad.violating_pair->first, R("0"));
  EXPECT_EQ(bad.violating_pair->second, R("2"));

  // repeated point: difference 0 is never a zero
  EXPECT_FALSE(is_bizero_set(V{0, 1, 1}, C, 4).is_bizero);
}

// Frozen from the implementation; the first steps check by hand: 1 is a zero
// (4 * (1/4) * 1), -1 fails against 1 (difference 2), -3 passes (3 and 4 are
// zeros), 4 passes (4, 3, 7).
TEST(GreedyBiZero, FrozenRegressionForMiddleFourth) {
  auto g = greedy_bizero(D({0, 2}), 4, R("30"), 8);
  EXPECT_EQ(strs(g), (std::vector<std::string>{"-15", "-12", "-3", "0", "1", "4", "13", "16"}));
  EXPECT_TRUE(is_bizero_set(g, D({0, 2}), 4).is_bizero);
}

TEST(GreedyBiZero, OtherInputs) {
  auto g = greedy_bizero(D({0, 1, 2, 3}), 4, R("10"), 4);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_TRUE(is_bizero_set(g, D({0, 1, 2, 3}), 4).is_bizero);
  EXPECT_THROW(greedy_bizero(D({0, 1, 4}), 4, R("10"), 4), InvalidInput);
  EXPECT_EQ(greedy_bizero(D({0, 2}), 4, R("10"), 1).size(), 1u);
}

// Without a count limit the greedy set is maximal: no lattice point within the
// bound can be added. Candidates off the lattice are never zeros of mu-hat
// differences with 0, so they cannot be added either.
TEST(GreedyBiZero, MaximalWithinBound) {
  struct Case {
    V digits;
    std::int64_t N;
    const char* bound;
  };
  for (const auto& cs : {Case{{0, 2}, 4, "40"}, Case{{0, 1, 8, 9}, 4, "12"}, Case{{0, 1, 2}, 6, "40"},
                         Case{{0, 1, 2, 3}, 8, "40"}}) {
    auto C = D(cs.digits);
    const Rational bound = R(cs.bound);
    auto g = greedy_bizero(C, cs.N, bound, 100000);
    ASSERT_TRUE(is_bizero_set(g, C, cs.N).is_bizero);
    // every rational with denominator <= 64 in [-bound, bound]
    for (std::int64_t q = 1; q <= 64; q *= 2)
      for (Rational x = -bound; x <= bound; x += Rational(BigInt(1), BigInt(q))) {
        if (std::find(g.begin(), g.end(), x) != g.end()) continue;
        bool addable = std::all_of(g.begin(), g.end(), [&](const Rational& y) { return mu_zero_member(C, cs.N, x - y); });
        EXPECT_FALSE(addable) << C.str() << " N=" << cs.N << " could add " << x;
      }
  }
}

TEST(DjExampleSpectrum, Examples) {
  EXPECT_EQ(strs(dj_example_spectrum(0)), (std::vector<std::string>{"0", "1/4"}));
  EXPECT_EQ(strs(dj_example_spectrum(1)), (std::vector<std::string>{"-1", "-3/4", "0", "1/4", "1", "5/4"}));
  EXPECT_EQ(dj_example_spectrum(2).size(), 10u);
  EXPECT_THROW(dj_example_spectrum(-1), InvalidInput);
}

// Differences of Z + {0, 1/4} are zeros of mu-hat for digits {0,1,8,9}, ratio
// 1/4, in the normalization where the digits are the integers {0,1,8,9}
// (no rescaling needed). Multiplying by 4 keeps them zeros, since
// 4 Z(mu-hat) is contained in Z(mu-hat) for N = 4.
TEST(DjExampleSpectrum, DifferencesAreZeros) {
  auto C = D({0, 1, 8, 9});
  auto pts = dj_example_spectrum(4);
  EXPECT_TRUE(is_bizero_set(pts, C, 4).is_bizero);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) EXPECT_TRUE(mu_zero_member(C, 4, Rational(4) * (pts[j] - pts[i])));
}

TEST(Conversions, RoundTrip) {
  EXPECT_EQ(to_rationals(V{0, 3}), (std::vector<Rational>{Rational(0), Rational(3)}));
  EXPECT_EQ(to_doubles({R("1/4"), R("-3")}), (std::vector<double>{0.25, -3.0}));
}
