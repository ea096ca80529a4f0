#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ssm/rational.hpp"

namespace ssm {

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

/// p + q*t for a single shared symbolic irrational t.
struct TauLinear {
  Rational p;
  Rational q;

  bool is_rational() const { return q.is_zero(); }
  bool is_zero() const { return p.is_zero() && q.is_zero(); }
  std::string str() const;

  // Accepts "p/q", "p/q + r/s*t", "p/q+r/s t", "t", "-2t", ...
  static TauLinear parse(std::string_view text);

  friend bool operator==(const TauLinear&, const TauLinear&) = default;
};

TauLinear operator*(const Rational& c, const TauLinear& x);

/// rho in (0, 1): either an exact rational or the root form (n/m)^(1/r).
class ContractionRatio {
 public:
  struct Root {
    std::int64_t n;
    std::int64_t m;
    std::int64_t r;
  };

  static ContractionRatio rational(Rational value);
  static ContractionRatio root(std::int64_t n, std::int64_t m, std::int64_t r);

  bool is_rational() const { return std::holds_alternative<Rational>(kind_); }
  const Rational& value() const { return std::get<Rational>(kind_); }
  const Root& root_form() const { return std::get<Root>(kind_); }

  // (n, m, r) with rho = (n/m)^(1/r); rational inputs report r = 1.
  Root as_root() const;
  double to_double() const;
  std::string str() const;

 private:
  explicit ContractionRatio(std::variant<Rational, Root> k) : kind_(std::move(k)) {}
  std::variant<Rational, Root> kind_;
};

// ---------------------------------------------------------------------------
// Digit sets
// ---------------------------------------------------------------------------

/// Input digits as given by the user. Rational-only sets are kept sorted;
/// sets with t-tagged entries keep their input order (t has no numeric value).
class DigitSet {
 public:
  static DigitSet make(std::vector<TauLinear> digits);
  static DigitSet make_rational(const std::vector<Rational>& digits);
  static DigitSet parse(std::string_view comma_list);

  const std::vector<TauLinear>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool has_tau() const;
  std::string str() const;

  DigitSet scaled(const Rational& c) const;

 private:
  explicit DigitSet(std::vector<TauLinear> d) : digits_(std::move(d)) {}
  std::vector<TauLinear> digits_;
};

/// Sorted, distinct, non-negative integer digits containing 0.
/// The gcd is not constrained; see NormalizedDigits for the gcd-1 form.
class IntegerDigits {
 public:
  static IntegerDigits make(std::vector<std::int64_t> values);
  static IntegerDigits parse(std::string_view comma_list);

  const std::vector<std::int64_t>& values() const { return values_; }
  std::span<const std::int64_t> span() const { return values_; }
  std::size_t size() const { return values_.size(); }
  std::int64_t gcd() const;
  std::string str() const;

  friend bool operator==(const IntegerDigits&, const IntegerDigits&) = default;

 private:
  explicit IntegerDigits(std::vector<std::int64_t> v) : values_(std::move(v)) {}
  std::vector<std::int64_t> values_;
};

/// digits = scale * integers, with gcd(nonzero integers) = 1.
struct NormalizedDigits {
  TauLinear scale;
  IntegerDigits integers;
};

/// Returned when two nonzero digits have an irrational ratio.
struct IrreducibleWitness {
  TauLinear numerator;
  TauLinear denominator;

  std::string ratio() const;  // e.g. "t/1"
};

using NormalizeResult = std::variant<NormalizedDigits, IrreducibleWitness>;

NormalizeResult normalize_digits(const DigitSet& d);

/// Probability vector over the digits.
class WeightVector {
 public:
  static WeightVector make(std::vector<Rational> w);
  static WeightVector uniform(std::size_t n);
  static WeightVector parse(std::string_view comma_list);

  const std::vector<Rational>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  bool is_equal() const;
  std::string str() const;

 private:
  explicit WeightVector(std::vector<Rational> w) : weights_(std::move(w)) {}
  std::vector<Rational> weights_;
};

// ---------------------------------------------------------------------------
// Integer helpers
// ---------------------------------------------------------------------------

struct TwoAdic {
  int t;               // exponent of 2
  std::int64_t odd;    // odd part
};

/// n = 2^t * odd. Throws InvalidInput for n = 0.
TwoAdic val2(std::int64_t n);

struct EvenSplit {
  int beta;
  std::int64_t m;  // odd
};

/// N = 2^beta * m, m odd, for N >= 2.
EvenSplit decompose_even(std::int64_t N);

// Wide intermediate for (a * b) mod n with 64-bit operands.
__extension__ typedef __int128 Int128;

// Overflow-checked arithmetic; throws Unsupported on overflow.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_pow(std::int64_t base, int exp);

std::vector<std::string> split_list(std::string_view s, char sep = ',');

}  // namespace ssm
