#include "ssm/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <shared_mutex>

#include "ssm/errors.hpp"
#include "ssm/exact_core.hpp"

namespace ssm {

namespace {

// Orders up to this bound get a cached table of x^e mod Phi_q; larger orders
// are reduced by long division on demand.
constexpr std::int64_t kTableMaxOrder = 256;

// Populated lazily from any thread; entries are never erased, so references stay valid.
template <typename V>
class ReadMostlyCache {
 public:
  template <typename Make>
  const V& get(std::int64_t key, Make make) {
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return *it->second;
    }
    auto value = std::make_unique<V>(make());
    std::unique_lock lock(mu_);
    auto [it, inserted] = map_.try_emplace(key, std::move(value));
    return *it->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<std::int64_t, std::unique_ptr<V>> map_;
};

ReadMostlyCache<IntPoly>& poly_cache() {
  static ReadMostlyCache<IntPoly> c;
  return c;
}

struct PowerTable {
  std::int64_t q;
  std::int64_t phi;
  std::vector<std::int64_t> rows;  // q rows of length phi

  std::span<const std::int64_t> row(std::int64_t e) const {
    return std::span<const std::int64_t>(rows).subspan(static_cast<std::size_t>(e * phi), static_cast<std::size_t>(phi));
  }
};

ReadMostlyCache<PowerTable>& table_cache() {
  static ReadMostlyCache<PowerTable> c;
  return c;
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic polynomial; throws if the remainder is nonzero.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw InternalInconsistency("cyclotomic division degree mismatch");
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    std::int64_t c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw InternalInconsistency("cyclotomic division left a remainder");
  trim(quot);
  return quot;
}

// In-place reduction of a dense polynomial modulo monic Phi_q; result has length phi.
std::vector<std::int64_t> reduce_mod(std::vector<std::int64_t> dense, const IntPoly& phi_poly) {
  const std::size_t deg = phi_poly.size() - 1;
  for (std::size_t i = dense.size(); i-- > deg;) {
    std::int64_t c = dense[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) {
      std::int64_t delta;
      if (__builtin_mul_overflow(c, phi_poly[j], &delta) || __builtin_sub_overflow(dense[i - deg + j], delta, &dense[i - deg + j]))
        throw Unsupported("coefficient overflow reducing modulo a cyclotomic polynomial");
    }
  }
  dense.resize(deg, 0);
  return dense;
}

PowerTable build_table(std::int64_t q) {
  const IntPoly& f = cyclotomic_poly(q);
  const std::int64_t phi = static_cast<std::int64_t>(f.size()) - 1;
  PowerTable t{q, phi, std::vector<std::int64_t>(static_cast<std::size_t>(q * phi), 0)};
  std::vector<std::int64_t> cur(static_cast<std::size_t>(phi), 0);
  if (phi > 0) cur[0] = 1;
  for (std::int64_t e = 0; e < q; ++e) {
    std::copy(cur.begin(), cur.end(), t.rows.begin() + e * phi);
    // cur <- x * cur mod f
    std::int64_t top = phi > 0 ? cur[static_cast<std::size_t>(phi - 1)] : 0;
    for (std::int64_t j = phi - 1; j > 0; --j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)];
    if (phi > 0) cur[0] = 0;
    for (std::int64_t j = 0; j < phi; ++j) cur[static_cast<std::size_t>(j)] -= top * f[static_cast<std::size_t>(j)];
  }
  return t;
}

std::int64_t mod_nonneg(std::int64_t a, std::int64_t q) {
  std::int64_t r = a % q;
  return r < 0 ? r + q : r;
}

}  // namespace

const IntPoly& cyclotomic_poly(std::int64_t q) {
  if (q < 1) throw InvalidInput("cyclotomic order must be positive");
  return poly_cache().get(q, [q] {
    IntPoly p(static_cast<std::size_t>(q + 1), 0);
    p[0] = -1;
    p[static_cast<std::size_t>(q)] = 1;
    for (std::int64_t d = 1; d < q; ++d)
      if (q % d == 0) p = divide_exact(std::move(p), cyclotomic_poly(d));
    return p;
  });
}

std::int64_t euler_phi(std::int64_t q) {
  std::int64_t result = q;
  for (std::int64_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      result -= result / p;
    }
  }
  if (q > 1) result -= result / q;
  return result;
}

bool CyclotomicValue::is_zero() const {
  for (auto c : coefficients)
    if (c != 0) return false;
  return true;
}

double CyclotomicValue::real() const {
  double s = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    s += static_cast<double>(coefficients[i]) * std::cos(2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(order));
  return s;
}

double CyclotomicValue::imag() const {
  double s = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    s += static_cast<double>(coefficients[i]) * std::sin(2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(order));
  return s;
}

std::vector<std::int64_t> power_mod_cyclotomic(std::int64_t q, std::int64_t e) {
  if (e < 0 || e >= q) throw InvalidInput("exponent out of range for power_mod_cyclotomic");
  if (q <= kTableMaxOrder) {
    auto row = table_cache().get(q, [q] { return build_table(q); }).row(e);
    return {row.begin(), row.end()};
  }
  std::vector<std::int64_t> dense(static_cast<std::size_t>(q), 0);
  dense[static_cast<std::size_t>(e)] = 1;
  return reduce_mod(std::move(dense), cyclotomic_poly(q));
}

CyclotomicValue mask_eval_exact(std::span<const std::int64_t> digits, std::int64_t p, std::int64_t q) {
  if (q <= 0) throw InvalidInput("mask_eval_exact needs a positive denominator");
  std::int64_t g = std::gcd(p, q);
  if (g != 0) {
    p /= g;
    q /= g;
  }
  const std::int64_t pm = mod_nonneg(p, q);
  std::vector<std::int64_t> exps;
  exps.reserve(digits.size());
  for (std::int64_t d : digits) {
    Int128 prod = static_cast<Int128>(mod_nonneg(d, q)) * pm;
    std::int64_t e = static_cast<std::int64_t>(prod % q);
    exps.push_back(e == 0 ? 0 : q - e);  // (-d p) mod q
  }

  CyclotomicValue out;
  out.order = q;
  if (q <= kTableMaxOrder) {
    const PowerTable& t = table_cache().get(q, [q] { return build_table(q); });
    out.coefficients.assign(static_cast<std::size_t>(t.phi), 0);
    for (auto e : exps) {
      auto row = t.row(e);
      for (std::size_t j = 0; j < row.size(); ++j) out.coefficients[j] += row[j];
    }
    return out;
  }
  std::vector<std::int64_t> dense(static_cast<std::size_t>(q), 0);
  for (auto e : exps) dense[static_cast<std::size_t>(e)] += 1;
  out.coefficients = reduce_mod(std::move(dense), cyclotomic_poly(q));
  return out;
}

CyclotomicValue mask_eval_exact(std::span<const std::int64_t> digits, const Rational& xi) {
  auto p = xi.num_int64();
  auto q = xi.den_int64();
  if (!p || !q) throw Unsupported("mask_eval_exact: xi = " + xi.str() + " exceeds 64-bit range");
  if (*q > (std::int64_t{1} << 24)) throw Unsupported("mask_eval_exact: denominator too large for exact cyclotomic reduction");
  return mask_eval_exact(digits, *p, *q);
}

}  // namespace ssm
