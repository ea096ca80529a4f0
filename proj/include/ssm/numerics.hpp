#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "ssm/exact_core.hpp"

namespace ssm {

inline constexpr double kDefaultTolerance = 1e-10;

/// Tolerance from SPECTRAL_SSM_TOL if set and valid, else kDefaultTolerance.
double tolerance_from_env();

/// Evaluates mu-hat(xi) = prod_{k>=1} M_D(rho^k xi) by truncating the product
/// once the tail is provably below tolerance/2. The bound comes from
/// |M_D(eta) - 1| <= 2 pi mean(D) |eta| and |M_D| <= 1, so
/// |truncated - exact| <= sum_{k>K} 2 pi mean(D) rho^k |xi|.
class MuHatEvaluator {
 public:
  MuHatEvaluator(IntegerDigits digits, std::int64_t N, double tolerance = kDefaultTolerance);
  // General contraction ratio in (0, 1), for exploring non-spectral inputs.
  static MuHatEvaluator with_ratio(IntegerDigits digits, double rho, double tolerance = kDefaultTolerance);

  std::complex<double> operator()(double xi) const;
  std::complex<double> mask(double eta) const;  // M_D(eta)

  // Number of product terms used at xi.
  int terms(double xi) const;
  // Evaluate with an explicit number of terms (for self-consistency checks).
  std::complex<double> truncated(double xi, int K) const;

  const IntegerDigits& digits() const { return digits_; }
  double rho() const { return rho_; }
  double tolerance() const { return tol_; }

 private:
  struct RatioTag {};
  MuHatEvaluator(IntegerDigits digits, double rho, double tolerance, RatioTag);

  IntegerDigits digits_;
  double rho_;
  double tol_;
  double lipschitz_;  // 2 pi mean(D)
};

std::complex<double> mu_hat(const MuHatEvaluator& ev, double xi);

struct QSample {
  double xi = 0;
  double q_value = 0;
  int level = 0;
};

/// Q(xi) = sum over points of |mu-hat(xi + lambda)|^2 for each grid point,
/// summed in the order of `points`.
std::vector<QSample> q_function(const MuHatEvaluator& ev, std::span<const double> points, std::span<const double> xi_grid,
                                int level = 0);

/// Row-major square matrix.
struct ComplexMatrix {
  std::size_t n = 0;
  std::vector<std::complex<double>> data;

  std::complex<double>& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
  const std::complex<double>& operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
  double max_off_diagonal() const;
};

/// G[i][j] = mu-hat(lambda_i - lambda_j), with the diagonal set to exactly 1.
ComplexMatrix gram_matrix(const MuHatEvaluator& ev, std::span<const double> points);

/// {0, step, 2 step, ...} below 1.
std::vector<double> unit_grid(double step);

}  // namespace ssm
