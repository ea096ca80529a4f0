#include "ssm/kernels.hpp"

#include <numeric>

#include <omp.h>

#include "ssm/errors.hpp"
#include "ssm/hadamard.hpp"
#include "ssm/mask_zeros.hpp"

namespace ssm::kernels {

namespace {

constexpr double kFloatUnitarityThreshold = 1e-9;

void enumerate(int remaining, std::int64_t next, std::int64_t bound, std::vector<std::int64_t>& cur,
               std::vector<IntegerDigits>& out) {
  if (remaining == 0) {
    std::int64_t g = 0;
    for (auto v : cur) g = std::gcd(g, v);
    if (g == 1) out.push_back(IntegerDigits::make(cur));
    return;
  }
  for (std::int64_t v = next; v <= bound; ++v) {
    cur.push_back(v);
    enumerate(remaining - 1, v + 1, bound, cur, out);
    cur.pop_back();
  }
}

void check_triple(const HadamardTriple& t, ScanRow& row) {
  if (t.D.size() != t.L.size()) return;
  bool exact = is_hadamard_triple(t);
  bool flt = hadamard_gram_deviation(t.N, t.D, t.L) < kFloatUnitarityThreshold;
  ++row.triples_checked;
  if (exact != flt) {
    ++row.float_disagreements;
    row.violations.push_back("exact/float Hadamard disagreement");
  }
}

void check_candidate_triples(const IntegerDigits& c, std::int64_t N, ScanRow& row) {
  const auto n = static_cast<std::int64_t>(c.size());
  if (n > N) return;
  std::vector<std::int64_t> naive(static_cast<std::size_t>(n));
  std::iota(naive.begin(), naive.end(), 0);
  check_triple(HadamardTriple{N, c.values(), naive}, row);
  if (auto L = find_spectrum_set(N, c.values())) check_triple(HadamardTriple{N, c.values(), *L}, row);
}

bool residues_012(const IntegerDigits& c) {
  std::vector<std::int64_t> r;
  for (auto v : c.values()) r.push_back(v % 3);
  std::sort(r.begin(), r.end());
  return r == std::vector<std::int64_t>{0, 1, 2};
}

}  // namespace

void ScanConfig::validate() const {
  if (cardinality < 2 || cardinality > 4) throw InvalidInput("scan cardinality must be 2, 3 or 4");
  if (digit_bound < 3) throw InvalidInput("scan digit bound must be at least 3");
  if (n_min < 2 || n_max > 64 || n_min > n_max) throw InvalidInput("scan N range must lie within [2, 64]");
}

std::vector<IntegerDigits> enumerate_digit_sets(int cardinality, std::int64_t bound) {
  if (cardinality < 1) throw InvalidInput("cardinality must be positive");
  std::vector<IntegerDigits> out;
  std::vector<std::int64_t> cur{0};
  if (cardinality == 1) {
    out.push_back(IntegerDigits::make(cur));
    return out;
  }
  enumerate(cardinality - 1, 1, bound, cur, out);
  return out;
}

ScanRow scan_row(const IntegerDigits& digits, std::int64_t N) {
  ScanRow row;
  row.digits = digits;
  row.N = N;
  try {
    std::vector<Rational> ds(digits.values().begin(), digits.values().end());
    Verdict v = classify(ContractionRatio::rational(Rational(BigInt(1), BigInt(N))), DigitSet::make_rational(ds));
    row.outcome = v.outcome;
    row.reason = v.reason;
    const std::size_t card = digits.size();
    const bool spectral = v.outcome == Outcome::Spectral;

    if (spectral) {
      row.certificate_ok = v.certificate && v.certificate->verified && certificate_verifies(*v.certificate);
      if (!row.certificate_ok) row.violations.push_back("certificate failed exact verification");
    }

    if (card == 4) {
      const EvenSplit split = decompose_even(N);
      if (spectral) {
        bool ok = N % 2 == 0 && v.valuations && v.valuations->first == v.valuations->second &&
                  v.valuations->first % split.beta != 0;
        std::size_t odd = 0;
        for (std::size_t i = 1; i < 4; ++i) odd += digits.values()[i] % 2 != 0;
        if (!ok || odd != 2) row.violations.push_back("spectral verdict without the necessary conditions");
        if (split.beta == 1) row.violations.push_back("spectral verdict with beta = 1");
        if (!zero_set(digits).empty() && v.certificate && v.certificate->product_form) {
          const auto& pfc = *v.certificate->product_form;
          for (const auto& t : product_form_triples(pfc.form)) check_triple(t, row);
          for (const auto& cf : pfc.closed_forms) {
            ProductForm trial = pfc.form;
            (cf.label.rfind("L1", 0) == 0 ? trial.L1 : trial.L2) = cf.set;
            for (const auto& t : product_form_triples(trial)) check_triple(t, row);
          }
        }
      }
    } else if (card == 2) {
      if (spectral != (N % 2 == 0)) row.violations.push_back("two-digit verdict disagrees with 'N even'");
    } else if (card == 3) {
      if (spectral != (residues_012(digits) && N % 3 == 0))
        row.violations.push_back("three-digit verdict disagrees with residue/divisibility rule");
    }

    if (spectral && (card == 2 || card == 3)) {
      if (!v.certificate || !v.certificate->tiling) row.violations.push_back("no tiling complement for spectral digits");
      if (v.certificate && v.certificate->triple) check_triple(*v.certificate->triple, row);
    }
    check_candidate_triples(digits, N, row);
  } catch (const std::exception& e) {
    row.violations.push_back(std::string("exception: ") + e.what());
  }
  return row;
}

std::vector<ScanRow> scan_serial(const ScanConfig& cfg) {
  cfg.validate();
  const auto sets = enumerate_digit_sets(cfg.cardinality, cfg.digit_bound);
  const auto nN = static_cast<std::size_t>(cfg.n_max - cfg.n_min + 1);
  std::vector<ScanRow> rows;
  rows.reserve(sets.size() * nN);
  for (const auto& s : sets)
    for (std::int64_t N = cfg.n_min; N <= cfg.n_max; ++N) rows.push_back(scan_row(s, N));
  return rows;
}

std::vector<ScanRow> scan_parallel(const ScanConfig& cfg) {
  cfg.validate();
  const auto sets = enumerate_digit_sets(cfg.cardinality, cfg.digit_bound);
  const auto nN = static_cast<std::int64_t>(cfg.n_max - cfg.n_min + 1);
  const auto total = static_cast<std::int64_t>(sets.size()) * nN;
  std::vector<ScanRow> rows(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < total; ++i)
    rows[static_cast<std::size_t>(i)] = scan_row(sets[static_cast<std::size_t>(i / nN)], cfg.n_min + i % nN);
  return rows;
}

// ---------------------------------------------------------------------------
// oracle sweep

namespace {

void sweep_one(const IntegerDigits& c, std::int64_t q, std::int64_t p_factor, std::size_t& checked,
               std::vector<OracleMismatch>& mismatches, const ZeroSet& z) {
  for (std::int64_t p = 1; p <= p_factor * q; ++p) {
    if (std::gcd(p, q) != 1) continue;
    const bool symbolic = zero_set_member(z, Rational(BigInt(p), BigInt(q)));
    const bool cyclo = mask_eval_exact(c.values(), p, q).is_zero();
    ++checked;
    if (symbolic != cyclo) mismatches.push_back(OracleMismatch{c, p, q, symbolic, cyclo});
  }
}

}  // namespace

OracleReport oracle_sweep_serial(std::span<const IntegerDigits> sets, std::int64_t q_max, std::int64_t p_factor) {
  OracleReport rep;
  for (const auto& c : sets) {
    const ZeroSet z = zero_set(c);
    for (std::int64_t q = 1; q <= q_max; ++q) sweep_one(c, q, p_factor, rep.checked, rep.mismatches, z);
  }
  return rep;
}

OracleReport oracle_sweep_parallel(std::span<const IntegerDigits> sets, std::int64_t q_max, std::int64_t p_factor) {
  const auto ns = static_cast<std::int64_t>(sets.size());
  std::vector<ZeroSet> zs(sets.size());
  for (std::int64_t s = 0; s < ns; ++s) zs[static_cast<std::size_t>(s)] = zero_set(sets[static_cast<std::size_t>(s)]);

  const std::int64_t total = ns * q_max;
  std::vector<std::size_t> checked(static_cast<std::size_t>(total), 0);
  std::vector<std::vector<OracleMismatch>> found(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto s = static_cast<std::size_t>(i / q_max);
    sweep_one(sets[s], 1 + i % q_max, p_factor, checked[static_cast<std::size_t>(i)], found[static_cast<std::size_t>(i)],
              zs[s]);
  }
  OracleReport rep;
  for (std::int64_t i = 0; i < total; ++i) {
    rep.checked += checked[static_cast<std::size_t>(i)];
    for (auto& m : found[static_cast<std::size_t>(i)]) rep.mismatches.push_back(std::move(m));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Q grid and Gram

namespace {

QSample q_at(const MuHatEvaluator& ev, std::span<const double> points, double xi, int level) {
  double sum = 0;
  for (double lambda : points) sum += std::norm(ev(xi + lambda));
  return QSample{xi, sum, level};
}

}  // namespace

std::vector<QSample> q_grid_serial(const MuHatEvaluator& ev, std::span<const double> points, std::span<const double> grid,
                                   int level) {
  std::vector<QSample> out;
  out.reserve(grid.size());
  for (double xi : grid) out.push_back(q_at(ev, points, xi, level));
  return out;
}

std::vector<QSample> q_grid_parallel(const MuHatEvaluator& ev, std::span<const double> points, std::span<const double> grid,
                                     int level) {
  const auto n = static_cast<std::int64_t>(grid.size());
  std::vector<QSample> out(grid.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = q_at(ev, points, grid[static_cast<std::size_t>(i)], level);
  return out;
}

ComplexMatrix gram_serial(const MuHatEvaluator& ev, std::span<const double> points) {
  ComplexMatrix g{points.size(), std::vector<std::complex<double>>(points.size() * points.size())};
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j) g(i, j) = i == j ? std::complex<double>(1.0) : ev(points[i] - points[j]);
  return g;
}

ComplexMatrix gram_parallel(const MuHatEvaluator& ev, std::span<const double> points) {
  ComplexMatrix g{points.size(), std::vector<std::complex<double>>(points.size() * points.size())};
  const auto n = static_cast<std::int64_t>(g.n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < g.n; ++j) {
      const auto ii = static_cast<std::size_t>(i);
      g(ii, j) = ii == j ? std::complex<double>(1.0) : ev(points[ii] - points[j]);
    }
  return g;
}

}  // namespace ssm::kernels
