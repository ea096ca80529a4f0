#include "ssm/spectra.hpp"

#include <algorithm>

#include "ssm/errors.hpp"
#include "ssm/mask_zeros.hpp"

namespace ssm {

SpectrumTruncation spectrum_truncation(const HadamardTriple& ht, int n) {
  if (n < 0) throw InvalidInput("truncation level must be non-negative");
  SpectrumTruncation out{ht, n, {0}};
  std::int64_t scale = 1;
  for (int j = 0; j < n; ++j) {
    std::vector<std::int64_t> next;
    next.reserve(out.points.size() * ht.L.size());
    for (auto l : ht.L)
      for (auto p : out.points) next.push_back(checked_add(p, checked_mul(scale, l)));
    std::sort(next.begin(), next.end());
    if (std::adjacent_find(next.begin(), next.end()) != next.end())
      throw DegenerateTriple("spectrum sums collide at level " + std::to_string(j + 1));
    out.points = std::move(next);
    if (j + 1 < n) scale = checked_mul(scale, ht.N);
  }
  return out;
}

BiZeroReport is_bizero_set(const std::vector<Rational>& points, const IntegerDigits& C, std::int64_t N) {
  const ZeroSet z = zero_set(C);
  BiZeroReport rep;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      Rational diff = points[j] - points[i];
      if (diff.is_zero() || !mu_zero_member(z, N, diff)) {
        rep.is_bizero = false;
        rep.violating_pair = std::pair{points[i], points[j]};
        return rep;
      }
    }
  return rep;
}

BiZeroReport is_bizero_set(const std::vector<std::int64_t>& points, const IntegerDigits& C, std::int64_t N) {
  return is_bizero_set(to_rationals(points), C, N);
}

std::vector<Rational> greedy_bizero(const IntegerDigits& C, std::int64_t N, const Rational& bound, std::size_t max_count) {
  const ZeroSet z = zero_set(C);
  if (z.empty()) throw InvalidInput("greedy_bizero: Z(M_C) is empty for C = " + C.str());
  if (N < 2) throw InvalidInput("greedy_bizero needs N >= 2");

  // Every part lies in scale*Z, so Z(mu-hat) lies in N*gamma*Z with gamma the
  // rational gcd of the part scales; any bi-zero set containing 0 does too.
  BigInt num_gcd = 0, den_lcm = 1;
  for (const auto& p : z.parts) {
    num_gcd = boost::multiprecision::gcd(num_gcd, p.scale.num());
    den_lcm = boost::multiprecision::lcm(den_lcm, p.scale.den());
  }
  const Rational step = Rational(num_gcd, den_lcm) * Rational(N);

  std::vector<Rational> chosen{Rational(0)};
  if (max_count <= 1) return chosen;
  for (std::int64_t j = 1;; ++j) {
    Rational mag = step * Rational(j);
    if (mag > bound) break;
    for (Rational cand : {mag, -mag}) {
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](const Rational& x) { return mu_zero_member(z, N, cand - x); });
      if (!ok) continue;
      chosen.push_back(cand);
      if (chosen.size() >= max_count) {
        std::sort(chosen.begin(), chosen.end());
        return chosen;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<Rational> dj_example_spectrum(int n) {
  if (n < 0) throw InvalidInput("dj_example_spectrum needs n >= 0");
  std::vector<Rational> out;
  const Rational quarter(BigInt(1), BigInt(4));
  for (int k = -n; k <= n; ++k) {
    out.emplace_back(k);
    out.push_back(Rational(k) + quarter);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> to_rationals(const std::vector<std::int64_t>& v) {
  return std::vector<Rational>(v.begin(), v.end());
}

std::vector<double> to_doubles(const std::vector<Rational>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.to_double());
  return out;
}

}  // namespace ssm
