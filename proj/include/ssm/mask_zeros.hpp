#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ssm/cyclotomic.hpp"
#include "ssm/exact_core.hpp"
#include "ssm/rational.hpp"

namespace ssm {

/// { scale * n : n in Z, n mod modulus in residues }. Never contains 0.
struct ScaledResidues {
  Rational scale;
  std::int64_t modulus = 2;
  std::vector<std::int64_t> residues;  // sorted, each in [1, modulus-1]

  static ScaledResidues odd_multiples(Rational scale);  // scale * O
  static ScaledResidues make(Rational scale, std::int64_t modulus, std::vector<std::int64_t> residues);

  bool contains(const Rational& xi) const;
  bool contains_family(const ScaledResidues& other) const;  // other is a subset of *this
  std::string str() const;

  friend bool operator==(const ScaledResidues&, const ScaledResidues&) = default;
};

/// Finite union of ScaledResidues families; no parts means the empty set.
struct ZeroSet {
  std::vector<ScaledResidues> parts;

  bool empty() const { return parts.empty(); }
  bool contains(const Rational& xi) const;
  // Smallest positive element over all parts.
  std::optional<Rational> min_positive() const;
  std::string str() const;
};

/// Which of the three pairings of {0, d1, d2, d3} makes the mask vanish:
///   Case1: (d1, d3 - d2), Case2: (d2, d3 - d1), Case3: (d3, d2 - d1),
/// each requiring both exponentials to equal -1.
enum class VanishingCase { None, Case1, Case2, Case3 };

const char* to_string(VanishingCase c);

VanishingCase vanishing_case(const IntegerDigits& c, const Rational& xi);

/// How the four-digit zero set was obtained.
enum class FourDigitShape { NotFourDigits, NoZeros, DistinctValuations, EqualValuations };

struct ZeroSetDerivation {
  std::vector<ScaledResidues> raw_parts;  // before merging
  ZeroSet merged;
  FourDigitShape shape = FourDigitShape::NotFourDigits;
};

/// Z(M_C) for 1 to 4 integer digits. Digit sets with gcd g > 1 are handled by
/// scaling: Z(M_{gC}) = Z(M_C) / g.
ZeroSetDerivation zero_set_derivation(const IntegerDigits& c);
ZeroSet zero_set(const IntegerDigits& c);

bool zero_set_member(const ZeroSet& z, const Rational& xi);

/// xi in the union over k >= 1 of N^k Z(M_C), i.e. the zero set of mu-hat for
/// contraction 1/N. Throws InvalidInput for xi = 0.
bool mu_zero_member(const IntegerDigits& c, std::int64_t N, const Rational& xi);
bool mu_zero_member(const ZeroSet& z, std::int64_t N, const Rational& xi);

/// Drops exact duplicates and parts contained in another part of the same modulus.
ZeroSet merge_parts(const std::vector<ScaledResidues>& parts);

}  // namespace ssm
