#include "ssm/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>

#include "ssm/cyclotomic.hpp"
#include "ssm/errors.hpp"
#include "ssm/exact_core.hpp"

namespace ssm {

namespace {

std::int64_t mod_nonneg(std::int64_t a, std::int64_t q) {
  std::int64_t r = a % q;
  return r < 0 ? r + q : r;
}

}  // namespace

bool is_hadamard_triple(std::int64_t N, std::span<const std::int64_t> D, std::span<const std::int64_t> L) {
  if (N < 1) throw InvalidInput("Hadamard triple needs N >= 1");
  if (D.size() != L.size())
    throw InvalidInput("Hadamard triple needs #D = #L, got " + std::to_string(D.size()) + " and " + std::to_string(L.size()));
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = i + 1; j < L.size(); ++j)
      if (!mask_eval_exact(D, checked_add(L[j], -L[i]), N).is_zero()) return false;
  return true;
}

double hadamard_gram_deviation(std::int64_t N, std::span<const std::int64_t> D, std::span<const std::int64_t> L) {
  const std::size_t n = D.size();
  if (n != L.size()) throw InvalidInput("Hadamard triple needs #D = #L");
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<std::complex<double>> h(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto e = static_cast<std::int64_t>((static_cast<Int128>(mod_nonneg(D[i], N)) * mod_nonneg(L[j], N)) % N);
      double phase = 2 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(N);
      h[i * n + j] = std::polar(norm, phase);
    }
  double dev = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::complex<double> g = 0;
      for (std::size_t i = 0; i < n; ++i) g += std::conj(h[i * n + a]) * h[i * n + b];
      if (a == b) g -= 1.0;
      dev = std::max(dev, std::abs(g));
    }
  return dev;
}

std::optional<std::vector<std::int64_t>> find_spectrum_set(std::int64_t N, std::span<const std::int64_t> D) {
  const std::size_t n = D.size();
  if (n == 0 || static_cast<std::int64_t>(n) > N) return std::nullopt;
  std::vector<std::int64_t> L{0};
  // Candidates are pairwise "orthogonal": M_D((l - l')/N) = 0.
  std::vector<char> ok(static_cast<std::size_t>(N), 0);
  for (std::int64_t l = 1; l < N; ++l) ok[static_cast<std::size_t>(l)] = mask_eval_exact(D, l, N).is_zero();

  std::function<bool(std::int64_t)> extend = [&](std::int64_t next) -> bool {
    if (L.size() == n) return true;
    for (std::int64_t l = next; l < N; ++l) {
      bool fits = std::all_of(L.begin(), L.end(), [&](std::int64_t x) { return ok[static_cast<std::size_t>(l - x)]; });
      if (!fits) continue;
      L.push_back(l);
      if (extend(l + 1)) return true;
      L.pop_back();
    }
    return false;
  };
  if (!extend(1)) return std::nullopt;
  return L;
}

std::optional<std::vector<std::int64_t>> direct_sum(std::span<const std::int64_t> X, std::span<const std::int64_t> Y) {
  std::vector<std::int64_t> out;
  out.reserve(X.size() * Y.size());
  for (auto x : X)
    for (auto y : Y) out.push_back(checked_add(x, y));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) return std::nullopt;
  return out;
}

// ---------------------------------------------------------------------------
// StructureDecomposition

std::vector<std::int64_t> StructureDecomposition::digits() const {
  const std::int64_t two_t = checked_pow(2, t);
  std::vector<std::int64_t> d{0, a, checked_mul(two_t, ell), checked_add(a, checked_mul(two_t, ell_prime))};
  std::sort(d.begin(), d.end());
  return d;
}

std::int64_t StructureDecomposition::N() const { return checked_mul(checked_pow(2, beta), m); }

bool StructureDecomposition::valid() const {
  auto odd_pos = [](std::int64_t x) { return x > 0 && x % 2 != 0; };
  return odd_pos(a) && odd_pos(ell) && odd_pos(ell_prime) && odd_pos(m) && t >= 1 && beta >= 1 && k >= 0 &&
         r >= 1 && r <= beta - 1 && t == beta * k + r;
}

// ---------------------------------------------------------------------------
// Product forms

std::vector<HadamardTriple> product_form_triples(const ProductForm& pf) {
  std::vector<HadamardTriple> out;
  out.push_back(HadamardTriple{pf.N, pf.A, pf.L1});
  for (const auto& [a, Ba] : pf.B) out.push_back(HadamardTriple{pf.N, Ba, pf.L2});
  auto L = direct_sum(pf.L1, pf.L2);
  for (const auto& [a, Ba] : pf.B) {
    auto S = direct_sum(pf.A, Ba);
    if (S && L) out.push_back(HadamardTriple{pf.N, *S, *L});
  }
  return out;
}

bool verify_product_form(const ProductForm& pf) {
  try {
    if (pf.N < 2 || pf.stride < 1) return false;
    if (pf.B.size() != pf.A.size()) return false;
    std::set<std::int64_t> seen_a;
    for (std::size_t i = 0; i < pf.A.size(); ++i) {
      if (pf.B[i].first != pf.A[i] || !seen_a.insert(pf.A[i]).second) return false;
    }

    // digits = disjoint union of a + stride * B_a
    std::vector<std::int64_t> rebuilt;
    for (const auto& [a, Ba] : pf.B)
      for (auto b : Ba) rebuilt.push_back(checked_add(a, checked_mul(pf.stride, b)));
    std::sort(rebuilt.begin(), rebuilt.end());
    if (std::adjacent_find(rebuilt.begin(), rebuilt.end()) != rebuilt.end()) return false;
    std::vector<std::int64_t> want = pf.digits;
    std::sort(want.begin(), want.end());
    if (rebuilt != want) return false;

    // condition (1)
    if (pf.A.size() != pf.L1.size() || !is_hadamard_triple(pf.N, pf.A, pf.L1)) return false;
    for (const auto& [a, Ba] : pf.B)
      if (Ba.size() != pf.L2.size() || !is_hadamard_triple(pf.N, Ba, pf.L2)) return false;

    // condition (2), with full-cardinality direct sums
    auto L = direct_sum(pf.L1, pf.L2);
    if (!L) return false;
    for (const auto& [a, Ba] : pf.B) {
      auto S = direct_sum(pf.A, Ba);
      if (!S || S->size() != L->size() || !is_hadamard_triple(pf.N, *S, *L)) return false;
    }
    return true;
  } catch (const Unsupported&) {
    return false;
  }
}

ProductFormConstruction construct_product_form(const StructureDecomposition& dec, std::int64_t N) {
  if (!dec.valid()) throw InvalidInput("malformed structure decomposition");
  if (dec.N() != N) throw InvalidInput("decomposition does not match N = " + std::to_string(N));

  const std::int64_t mk = checked_pow(dec.m, dec.k);
  const std::int64_t two_r = checked_pow(2, dec.r);

  ProductFormConstruction out;
  ProductForm& pf = out.form;
  pf.N = N;
  pf.stride = checked_pow(N, dec.k);
  for (auto d : dec.digits()) pf.digits.push_back(checked_mul(mk, d));
  const std::int64_t a_scaled = checked_mul(dec.a, mk);
  pf.A = {0, a_scaled};
  pf.B = {{0, {0, checked_mul(two_r, dec.ell)}}, {a_scaled, {0, checked_mul(two_r, dec.ell_prime)}}};
  pf.L1 = {0, N / 2};

  for (std::int64_t l = 1; l < N && pf.L2.empty(); ++l) {
    ProductForm trial = pf;
    trial.L2 = {0, l};
    if (verify_product_form(trial)) pf.L2 = trial.L2;
  }
  if (pf.L2.empty() || !verify_product_form(pf))
    throw InternalInconsistency("no L2 completes the product form for D = " + IntegerDigits::make(dec.digits()).str() +
                                ", N = " + std::to_string(N));

  auto check = [&](std::string label, std::vector<std::int64_t> L1, std::vector<std::int64_t> L2, bool is_l1) {
    ProductForm trial = pf;
    trial.L1 = L1;
    trial.L2 = L2;
    out.closed_forms.push_back(ClosedFormCheck{std::move(label), is_l1 ? L1 : L2, verify_product_form(trial)});
  };
  check("L1 = {0, 2}", {0, 2}, pf.L2, true);
  check("L1 = {0, N/2}", {0, N / 2}, pf.L2, true);
  check("L2 = {0, N*2^(r-1)}", pf.L1, {0, checked_mul(N, checked_pow(2, dec.r - 1))}, false);
  check("L2 = {0, N/2^(r+1)}", pf.L1, {0, N / checked_pow(2, dec.r + 1)}, false);
  return out;
}

// ---------------------------------------------------------------------------
// tiling

std::optional<std::vector<std::int64_t>> tiles_zn(std::span<const std::int64_t> C, std::int64_t N) {
  if (N < 1 || C.empty()) return std::nullopt;
  const auto n = static_cast<std::int64_t>(C.size());
  if (N % n != 0) return std::nullopt;
  std::vector<std::int64_t> cm;
  for (auto c : C) cm.push_back(mod_nonneg(c, N));
  std::vector<std::int64_t> sorted = cm;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;

  const std::int64_t want = N / n;
  std::vector<char> covered(static_cast<std::size_t>(N), 0);
  std::vector<std::int64_t> B;
  auto place = [&](std::int64_t b, char v) {
    for (auto c : cm) covered[static_cast<std::size_t>((c + b) % N)] = v;
  };
  auto fits = [&](std::int64_t b) {
    return std::none_of(cm.begin(), cm.end(), [&](std::int64_t c) { return covered[static_cast<std::size_t>((c + b) % N)]; });
  };

  std::function<bool(std::int64_t)> extend = [&](std::int64_t next) -> bool {
    if (static_cast<std::int64_t>(B.size()) == want) return true;
    // increasing b keeps the first complete B lexicographically smallest
    for (std::int64_t b = next; b < N; ++b) {
      if (!fits(b)) continue;
      B.push_back(b);
      place(b, 1);
      if (extend(b + 1)) return true;
      place(b, 0);
      B.pop_back();
    }
    return false;
  };
  B.push_back(0);
  place(0, 1);
  if (!extend(1)) return std::nullopt;
  return B;
}

}  // namespace ssm
