#include "ssm/exact_core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>

#include "ssm/errors.hpp"

namespace ssm {

// ---------------------------------------------------------------------------
// TauLinear

std::string TauLinear::str() const {
  if (q.is_zero()) return p.str();
  std::string tau = q == Rational(1) ? "t" : q.str() + "*t";
  if (p.is_zero()) return tau;
  if (q.sign() < 0) {
    Rational aq = q.abs();
    return p.str() + " - " + (aq == Rational(1) ? "t" : aq.str() + "*t");
  }
  return p.str() + " + " + tau;
}

TauLinear TauLinear::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') s.push_back(c);
  if (s.empty()) throw InvalidInput("empty digit");

  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if ((c == '+' || c == '-') && i > 0 && s[i - 1] != '/') {
      terms.push_back(cur);
      cur.clear();
    }
    cur.push_back(c);
  }
  terms.push_back(cur);

  TauLinear out{Rational(0), Rational(0)};
  for (const std::string& term : terms) {
    if (!term.empty() && term.back() == 't') {
      std::string coef = term.substr(0, term.size() - 1);
      if (coef.empty() || coef == "+")
        out.q += Rational(1);
      else if (coef == "-")
        out.q -= Rational(1);
      else
        out.q += Rational::parse(coef);
    } else {
      out.p += Rational::parse(term);
    }
  }
  return out;
}

TauLinear operator*(const Rational& c, const TauLinear& x) { return TauLinear{c * x.p, c * x.q}; }

// ---------------------------------------------------------------------------
// ContractionRatio

namespace {

std::optional<std::int64_t> exact_root(std::int64_t v, std::int64_t r) {
  if (v == 1) return 1;
  for (std::int64_t b = 2;; ++b) {
    BigInt p = 1;
    for (std::int64_t i = 0; i < r; ++i) p *= b;
    if (p == v) return b;
    if (p > v) return std::nullopt;
  }
}

}  // namespace

ContractionRatio ContractionRatio::rational(Rational value) {
  if (value <= Rational(0) || value >= Rational(1))
    throw InvalidInput("contraction ratio must lie strictly between 0 and 1, got " + value.str());
  return ContractionRatio(std::move(value));
}

ContractionRatio ContractionRatio::root(std::int64_t n, std::int64_t m, std::int64_t r) {
  if (n < 1 || m < 1 || r < 1) throw InvalidInput("root-form ratio needs positive n, m, r");
  std::int64_t g = std::gcd(n, m);
  n /= g;
  m /= g;
  if (n >= m) throw InvalidInput("root-form ratio needs n < m");
  if (r == 1) return rational(Rational(BigInt(n), BigInt(m)));
  auto nr = exact_root(n, r);
  auto mr = exact_root(m, r);
  if (nr && mr) return rational(Rational(BigInt(*nr), BigInt(*mr)));
  return ContractionRatio(Root{n, m, r});
}

ContractionRatio::Root ContractionRatio::as_root() const {
  if (is_rational()) {
    auto n = value().num_int64();
    auto m = value().den_int64();
    if (!n || !m) throw Unsupported("contraction ratio too large for root form");
    return Root{*n, *m, 1};
  }
  return root_form();
}

double ContractionRatio::to_double() const {
  if (is_rational()) return value().to_double();
  const Root& rt = root_form();
  return std::pow(static_cast<double>(rt.n) / static_cast<double>(rt.m), 1.0 / static_cast<double>(rt.r));
}

std::string ContractionRatio::str() const {
  if (is_rational()) return value().str();
  const Root& rt = root_form();
  return "(" + std::to_string(rt.n) + "/" + std::to_string(rt.m) + ")^(1/" + std::to_string(rt.r) + ")";
}

// ---------------------------------------------------------------------------
// DigitSet

DigitSet DigitSet::make(std::vector<TauLinear> digits) {
  if (digits.empty()) throw InvalidInput("digit set is empty");
  for (std::size_t i = 0; i < digits.size(); ++i)
    for (std::size_t j = i + 1; j < digits.size(); ++j)
      if (digits[i] == digits[j]) throw InvalidInput("duplicate digit " + digits[i].str());
  bool has_zero = std::any_of(digits.begin(), digits.end(), [](const TauLinear& d) { return d.is_zero(); });
  if (!has_zero) throw InvalidInput("digit set must contain 0 (translate by its minimum first)");
  bool all_rational = std::all_of(digits.begin(), digits.end(), [](const TauLinear& d) { return d.is_rational(); });
  if (all_rational) {
    for (const auto& d : digits)
      if (d.p.sign() < 0) throw InvalidInput("digits must be non-negative, got " + d.p.str());
    std::sort(digits.begin(), digits.end(), [](const TauLinear& a, const TauLinear& b) { return a.p < b.p; });
  }
  return DigitSet(std::move(digits));
}

DigitSet DigitSet::make_rational(const std::vector<Rational>& digits) {
  std::vector<TauLinear> v;
  v.reserve(digits.size());
  for (const auto& d : digits) v.push_back(TauLinear{d, Rational(0)});
  return make(std::move(v));
}

DigitSet DigitSet::parse(std::string_view comma_list) {
  std::vector<TauLinear> v;
  for (const auto& item : split_list(comma_list)) v.push_back(TauLinear::parse(item));
  return make(std::move(v));
}

bool DigitSet::has_tau() const {
  return std::any_of(digits_.begin(), digits_.end(), [](const TauLinear& d) { return !d.is_rational(); });
}

std::string DigitSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) s += ", ";
    s += digits_[i].str();
  }
  return s + "}";
}

DigitSet DigitSet::scaled(const Rational& c) const {
  if (c.sign() <= 0) throw InvalidInput("scale factor must be positive");
  std::vector<TauLinear> v;
  for (const auto& d : digits_) v.push_back(c * d);
  return DigitSet(std::move(v));
}

// ---------------------------------------------------------------------------
// IntegerDigits

IntegerDigits IntegerDigits::make(std::vector<std::int64_t> values) {
  if (values.empty()) throw InvalidInput("digit set is empty");
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw InvalidInput("duplicate digits");
  if (values.front() != 0) throw InvalidInput("integer digits must be non-negative and contain 0");
  return IntegerDigits(std::move(values));
}

IntegerDigits IntegerDigits::parse(std::string_view comma_list) {
  std::vector<std::int64_t> v;
  for (const auto& item : split_list(comma_list)) {
    auto r = Rational::parse(item).to_int64();
    if (!r) throw InvalidInput("expected an integer digit, got '" + item + "'");
    v.push_back(*r);
  }
  return make(std::move(v));
}

std::int64_t IntegerDigits::gcd() const {
  std::int64_t g = 0;
  for (auto v : values_) g = std::gcd(g, v);
  return g;
}

std::string IntegerDigits::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(values_[i]);
  }
  return s + "}";
}

// ---------------------------------------------------------------------------
// normalize_digits

std::string IrreducibleWitness::ratio() const {
  auto wrap = [](const TauLinear& x) {
    std::string s = x.str();
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(numerator) + "/" + wrap(denominator);
}

namespace {

// Integer form of a list of non-negative rationals: values = scale * ints, gcd(ints) = 1.
std::pair<Rational, std::vector<std::int64_t>> integerize(const std::vector<Rational>& values) {
  BigInt lcm = 1;
  for (const auto& v : values) lcm = boost::multiprecision::lcm(lcm, v.den());
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& v : values) {
    BigInt n = v.num() * (lcm / v.den());
    g = boost::multiprecision::gcd(g, n);
    ints.push_back(std::move(n));
  }
  if (g == 0) g = 1;
  std::vector<std::int64_t> out;
  for (const auto& n : ints) {
    auto c = to_int64(n / g);
    if (!c) throw Unsupported("normalized digits exceed 64-bit range");
    out.push_back(*c);
  }
  return {Rational(g, lcm), std::move(out)};
}

}  // namespace

NormalizeResult normalize_digits(const DigitSet& d) {
  if (d.size() >= 5)
    throw Unsupported("digit sets with " + std::to_string(d.size()) + " elements are not supported (at most 4)");

  if (!d.has_tau()) {
    std::vector<Rational> vals;
    for (const auto& x : d.digits()) vals.push_back(x.p);
    auto [alpha, ints] = integerize(vals);
    return NormalizedDigits{TauLinear{alpha, Rational(0)}, IntegerDigits::make(std::move(ints))};
  }

  // Express every nonzero digit as a rational multiple of the first nonzero one.
  const TauLinear* ref = nullptr;
  for (const auto& x : d.digits())
    if (!x.is_zero()) {
      ref = &x;
      break;
    }
  std::vector<Rational> ratios{Rational(0)};
  for (const auto& x : d.digits()) {
    if (x.is_zero() || &x == ref) continue;
    if (x.p * ref->q != x.q * ref->p) return IrreducibleWitness{x, *ref};
    Rational lambda = ref->p.is_zero() ? x.q / ref->q : x.p / ref->p;
    if (lambda.sign() <= 0)
      throw InvalidInput("digits " + x.str() + " and " + ref->str() + " lie on opposite sides of 0");
    ratios.push_back(lambda);
  }
  ratios.push_back(Rational(1));
  auto [alpha, ints] = integerize(ratios);
  return NormalizedDigits{alpha * *ref, IntegerDigits::make(std::move(ints))};
}

// ---------------------------------------------------------------------------
// WeightVector

WeightVector WeightVector::make(std::vector<Rational> w) {
  if (w.empty()) throw InvalidInput("weight vector is empty");
  Rational sum(0);
  for (const auto& x : w) {
    if (x.sign() <= 0) throw InvalidInput("weights must be positive, got " + x.str());
    sum += x;
  }
  if (sum != Rational(1)) throw InvalidInput("weights must sum to 1, got " + sum.str());
  return WeightVector(std::move(w));
}

WeightVector WeightVector::uniform(std::size_t n) {
  if (n == 0) throw InvalidInput("weight vector is empty");
  return WeightVector(std::vector<Rational>(n, Rational(BigInt(1), BigInt(n))));
}

WeightVector WeightVector::parse(std::string_view comma_list) {
  std::vector<Rational> v;
  for (const auto& item : split_list(comma_list)) v.push_back(Rational::parse(item));
  return make(std::move(v));
}

bool WeightVector::is_equal() const {
  return std::all_of(weights_.begin(), weights_.end(), [&](const Rational& x) { return x == weights_.front(); });
}

std::string WeightVector::str() const {
  std::string s;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) s += ",";
    s += weights_[i].str();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Integer helpers

TwoAdic val2(std::int64_t n) {
  if (n <= 0) throw InvalidInput("val2 needs a positive integer, got " + std::to_string(n));
  int t = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++t;
  }
  return TwoAdic{t, n};
}

EvenSplit decompose_even(std::int64_t N) {
  if (N < 2) throw InvalidInput("decompose_even needs N >= 2, got " + std::to_string(N));
  auto [t, odd] = val2(N);
  return EvenSplit{t, odd};
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Unsupported("64-bit overflow in integer arithmetic");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Unsupported("64-bit overflow in integer arithmetic");
  return r;
}

std::int64_t checked_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::vector<std::string> split_list(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  for (auto& x : out) {
    auto b = x.find_first_not_of(" \t");
    auto e = x.find_last_not_of(" \t");
    x = b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
    if (x.empty()) throw InvalidInput("empty entry in list '" + std::string(s) + "'");
  }
  return out;
}

}  // namespace ssm
