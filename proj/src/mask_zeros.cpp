#include "ssm/mask_zeros.hpp"

#include <algorithm>
#include <numeric>

#include "ssm/errors.hpp"

namespace ssm {

namespace {

std::int64_t mod_nonneg(const BigInt& n, std::int64_t q) {
  BigInt r = n % q;
  if (r < 0) r += q;
  return r.convert_to<std::int64_t>();
}

bool is_half_odd(const Rational& x) {
  // x in 1/2 + Z  <=>  2x is an odd integer
  Rational twice = x * Rational(2);
  return twice.is_integer() && (twice.num() & 1) != 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// ScaledResidues / ZeroSet

ScaledResidues ScaledResidues::odd_multiples(Rational scale) { return make(std::move(scale), 2, {1}); }

ScaledResidues ScaledResidues::make(Rational scale, std::int64_t modulus, std::vector<std::int64_t> residues) {
  if (scale.sign() <= 0) throw InvalidInput("ScaledResidues scale must be positive");
  if (modulus < 2) throw InvalidInput("ScaledResidues modulus must be at least 2");
  if (residues.empty()) throw InvalidInput("ScaledResidues needs at least one residue");
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  for (auto r : residues)
    if (r <= 0 || r >= modulus) throw InvalidInput("residues must lie in [1, modulus-1]");
  return ScaledResidues{std::move(scale), modulus, std::move(residues)};
}

bool ScaledResidues::contains(const Rational& xi) const {
  Rational n = xi / scale;
  if (!n.is_integer()) return false;
  std::int64_t r = mod_nonneg(n.num(), modulus);
  return std::binary_search(residues.begin(), residues.end(), r);
}

bool ScaledResidues::contains_family(const ScaledResidues& other) const {
  if (other.modulus != modulus) return false;
  Rational j = other.scale / scale;
  if (!j.is_integer()) return false;
  std::int64_t jm = mod_nonneg(j.num(), modulus);
  for (auto r : other.residues) {
    std::int64_t image = static_cast<std::int64_t>((static_cast<Int128>(jm) * r) % modulus);
    if (!std::binary_search(residues.begin(), residues.end(), image)) return false;
  }
  return true;
}

std::string ScaledResidues::str() const {
  if (modulus == 2) return "(" + scale.str() + ")O";
  std::string s = "(" + scale.str() + "){n: n mod " + std::to_string(modulus) + " in {";
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(residues[i]);
  }
  return s + "}}";
}

bool ZeroSet::contains(const Rational& xi) const {
  return std::any_of(parts.begin(), parts.end(), [&](const ScaledResidues& p) { return p.contains(xi); });
}

std::optional<Rational> ZeroSet::min_positive() const {
  std::optional<Rational> best;
  for (const auto& p : parts) {
    Rational v = p.scale * Rational(p.residues.front());
    if (!best || v < *best) best = v;
  }
  return best;
}

std::string ZeroSet::str() const {
  if (parts.empty()) return "{}";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += " U ";
    s += parts[i].str();
  }
  return s;
}

ZeroSet merge_parts(const std::vector<ScaledResidues>& parts) {
  ZeroSet out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < parts.size() && !drop; ++j) {
      if (i == j) continue;
      if (parts[i] == parts[j])
        drop = j < i;  // keep the first copy
      else
        drop = parts[j].contains_family(parts[i]);
    }
    if (!drop) out.parts.push_back(parts[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// vanishing_case

const char* to_string(VanishingCase c) {
  switch (c) {
    case VanishingCase::None: return "None";
    case VanishingCase::Case1: return "Case1";
    case VanishingCase::Case2: return "Case2";
    case VanishingCase::Case3: return "Case3";
  }
  return "?";
}

VanishingCase vanishing_case(const IntegerDigits& c, const Rational& xi) {
  if (c.size() != 4) throw InvalidInput("vanishing_case needs exactly four digits");
  const auto& v = c.values();
  const std::int64_t d1 = v[1], d2 = v[2], d3 = v[3];
  auto holds = [&](std::int64_t x, std::int64_t y) {
    return is_half_odd(Rational(x) * xi) && is_half_odd(Rational(y) * xi);
  };
  if (holds(d1, d3 - d2)) return VanishingCase::Case1;
  if (holds(d2, d3 - d1)) return VanishingCase::Case2;
  if (holds(d3, d2 - d1)) return VanishingCase::Case3;
  return VanishingCase::None;
}

// ---------------------------------------------------------------------------
// zero_set

ZeroSetDerivation zero_set_derivation(const IntegerDigits& c) {
  if (c.size() >= 5) throw Unsupported("zero sets are only available for at most four digits");
  ZeroSetDerivation out;
  if (c.size() == 1) return out;

  const std::int64_t g = c.gcd();
  std::vector<std::int64_t> n;
  for (auto d : c.values()) n.push_back(d / g);
  const Rational unscale = Rational(BigInt(1), BigInt(g));

  if (c.size() == 2) {
    out.raw_parts.push_back(ScaledResidues::odd_multiples(Rational(BigInt(1), BigInt(2))));
  } else if (c.size() == 3) {
    // 1 + z^a + z^b = 0 forces {a xi, b xi} = {1/3, 2/3} mod 1, so xi in (1/3)Z
    // (gcd(a,b) = 1) and a, b must be nonzero and distinct mod 3.
    const std::int64_t ra = n[1] % 3, rb = n[2] % 3;
    if (ra != 0 && rb != 0 && ra != rb)
      out.raw_parts.push_back(ScaledResidues::make(Rational(BigInt(1), BigInt(3)), 3, {1, 2}));
  } else {
    out.shape = FourDigitShape::NoZeros;
    std::vector<std::int64_t> odds, evens;
    for (std::size_t i = 1; i < 4; ++i) (n[i] % 2 != 0 ? odds : evens).push_back(n[i]);
    if (odds.size() == 2) {
      const std::int64_t a = odds[0], cc = odds[1], b = evens[0];
      const TwoAdic vb = val2(b);
      const TwoAdic vca = val2(cc - a);
      const std::int64_t p1 = std::gcd(a, std::abs(cc - b));
      const std::int64_t p2 = std::gcd(cc, std::abs(b - a));
      out.raw_parts.push_back(ScaledResidues::odd_multiples(Rational(BigInt(1), BigInt(2 * p1))));
      out.raw_parts.push_back(ScaledResidues::odd_multiples(Rational(BigInt(1), BigInt(2 * p2))));
      if (vb.t == vca.t) {
        out.shape = FourDigitShape::EqualValuations;
        BigInt den = BigInt(1) << (1 + vb.t);
        den *= std::gcd(vb.odd, vca.odd);
        out.raw_parts.push_back(ScaledResidues::odd_multiples(Rational(BigInt(1), den)));
      } else {
        out.shape = FourDigitShape::DistinctValuations;
      }
    }
  }

  for (auto& p : out.raw_parts) p.scale *= unscale;
  out.merged = merge_parts(out.raw_parts);
  return out;
}

ZeroSet zero_set(const IntegerDigits& c) { return zero_set_derivation(c).merged; }

bool zero_set_member(const ZeroSet& z, const Rational& xi) { return z.contains(xi); }

bool mu_zero_member(const ZeroSet& z, std::int64_t N, const Rational& xi) {
  if (xi.is_zero()) throw InvalidInput("0 is never a zero of the Fourier transform");
  if (N < 2) throw InvalidInput("mu_zero_member needs N >= 2");
  auto minpos = z.min_positive();
  if (!minpos) return false;
  const Rational mag = xi.abs();
  Rational nk(N);
  // A member of N^k Z(M) has modulus at least N^k * min_positive.
  while (nk * *minpos <= mag) {
    if (z.contains(xi / nk)) return true;
    nk *= Rational(N);
  }
  return false;
}

bool mu_zero_member(const IntegerDigits& c, std::int64_t N, const Rational& xi) {
  return mu_zero_member(zero_set(c), N, xi);
}

}  // namespace ssm
