#pragma once

// Data-parallel kernels. Each has a serial reference (`*_serial`) and an
// OpenMP version (`*_parallel`) that must produce identical output: results are
// written per index and reduced in index order, never in thread order.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ssm/classifier.hpp"
#include "ssm/exact_core.hpp"
#include "ssm/numerics.hpp"

namespace ssm::kernels {

// ---------------------------------------------------------------------------
// Exhaustive classification scan

struct ScanConfig {
  int cardinality = 4;      // 2, 3 or 4
  std::int64_t digit_bound = 15;
  std::int64_t n_min = 2;
  std::int64_t n_max = 10;

  void validate() const;  // throws InvalidInput
};

struct ScanRow {
  IntegerDigits digits = IntegerDigits::make({0});
  std::int64_t N = 2;
  Outcome outcome = Outcome::NonSpectral;
  Reason reason = Reason::OK;
  bool certificate_ok = false;  // meaningful for Spectral rows
  std::size_t triples_checked = 0;
  std::size_t float_disagreements = 0;
  std::vector<std::string> violations;
};

/// All {0 < c_1 < ... < c_{n-1} <= bound} with gcd 1, in lexicographic order.
std::vector<IntegerDigits> enumerate_digit_sets(int cardinality, std::int64_t bound);

/// Classifies one (digits, N) pair and checks every scan invariant on it.
ScanRow scan_row(const IntegerDigits& digits, std::int64_t N);

std::vector<ScanRow> scan_serial(const ScanConfig& cfg);
std::vector<ScanRow> scan_parallel(const ScanConfig& cfg);

// ---------------------------------------------------------------------------
// Zero-set oracle sweep: symbolic membership vs exact cyclotomic vanishing

struct OracleMismatch {
  IntegerDigits digits;
  std::int64_t p;
  std::int64_t q;
  bool symbolic;
  bool cyclotomic;
};

struct OracleReport {
  std::size_t checked = 0;
  std::vector<OracleMismatch> mismatches;
};

/// Every reduced p/q with 1 <= q <= q_max and 1 <= p <= p_factor * q.
OracleReport oracle_sweep_serial(std::span<const IntegerDigits> sets, std::int64_t q_max, std::int64_t p_factor);
OracleReport oracle_sweep_parallel(std::span<const IntegerDigits> sets, std::int64_t q_max, std::int64_t p_factor);

// ---------------------------------------------------------------------------
// Q-function on a grid and Gram matrices

std::vector<QSample> q_grid_serial(const MuHatEvaluator& ev, std::span<const double> points, std::span<const double> grid,
                                   int level);
std::vector<QSample> q_grid_parallel(const MuHatEvaluator& ev, std::span<const double> points, std::span<const double> grid,
                                     int level);

ComplexMatrix gram_serial(const MuHatEvaluator& ev, std::span<const double> points);
ComplexMatrix gram_parallel(const MuHatEvaluator& ev, std::span<const double> points);

}  // namespace ssm::kernels
