#include "ssm/numerics.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "ssm/errors.hpp"
#include "ssm/kernels.hpp"

namespace ssm {

double tolerance_from_env() {
  const char* s = std::getenv("SPECTRAL_SSM_TOL");
  if (!s || !*s) return kDefaultTolerance;
  char* end = nullptr;
  double v = std::strtod(s, &end);
  if (end == s || *end != '\0' || !(v > 0.0) || !(v < 1.0))
    throw InvalidInput(std::string("SPECTRAL_SSM_TOL must be a number in (0, 1), got '") + s + "'");
  return v;
}

MuHatEvaluator::MuHatEvaluator(IntegerDigits digits, std::int64_t N, double tolerance)
    : MuHatEvaluator(std::move(digits), N >= 2 ? 1.0 / static_cast<double>(N) : 0.5, tolerance, RatioTag{}) {
  if (N < 2) throw InvalidInput("MuHatEvaluator needs N >= 2");
}

MuHatEvaluator MuHatEvaluator::with_ratio(IntegerDigits digits, double rho, double tolerance) {
  return MuHatEvaluator(std::move(digits), rho, tolerance, RatioTag{});
}

MuHatEvaluator::MuHatEvaluator(IntegerDigits digits, double rho, double tolerance, RatioTag)
    : digits_(std::move(digits)), rho_(rho), tol_(tolerance) {
  if (!(rho_ > 0.0 && rho_ < 1.0)) throw InvalidInput("contraction ratio must lie in (0, 1)");
  if (!(tol_ > 0.0 && tol_ < 1.0)) throw InvalidInput("tolerance must lie in (0, 1)");
  double sum = 0;
  for (auto d : digits_.values()) sum += static_cast<double>(d);
  lipschitz_ = 2 * std::numbers::pi * sum / static_cast<double>(digits_.size());
}

std::complex<double> MuHatEvaluator::mask(double eta) const {
  double re = 0, im = 0;
  for (auto d : digits_.values()) {
    // reduce the phase mod 1 before scaling by 2 pi
    double phase = static_cast<double>(d) * eta;
    phase -= std::floor(phase);
    re += std::cos(2 * std::numbers::pi * phase);
    im -= std::sin(2 * std::numbers::pi * phase);
  }
  const double inv = 1.0 / static_cast<double>(digits_.size());
  return {re * inv, im * inv};
}

int MuHatEvaluator::terms(double xi) const {
  // tail after K terms: lipschitz |xi| rho^{K+1} / (1 - rho) <= tol / 2
  const double a = std::abs(xi) * lipschitz_;
  if (a == 0.0) return 0;
  int K = 0;
  double tail = a * rho_ / (1.0 - rho_);
  while (tail > tol_ / 2) {
    tail *= rho_;
    ++K;
  }
  return K;
}

std::complex<double> MuHatEvaluator::truncated(double xi, int K) const {
  std::complex<double> prod = 1.0;
  double eta = xi;
  for (int k = 1; k <= K; ++k) {
    eta *= rho_;
    prod *= mask(eta);
    if (prod == 0.0) break;
  }
  return prod;
}

std::complex<double> MuHatEvaluator::operator()(double xi) const { return truncated(xi, terms(xi)); }

std::complex<double> mu_hat(const MuHatEvaluator& ev, double xi) { return ev(xi); }

std::vector<QSample> q_function(const MuHatEvaluator& ev, std::span<const double> points, std::span<const double> xi_grid,
                                int level) {
  return kernels::q_grid_parallel(ev, points, xi_grid, level);
}

double ComplexMatrix::max_off_diagonal() const {
  double m = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m = std::max(m, std::abs(data[i * n + j]));
  return m;
}

ComplexMatrix gram_matrix(const MuHatEvaluator& ev, std::span<const double> points) {
  return kernels::gram_parallel(ev, points);
}

std::vector<double> unit_grid(double step) {
  if (!(step > 0.0 && step <= 1.0)) throw InvalidInput("grid step must lie in (0, 1]");
  std::vector<double> g;
  for (std::size_t i = 0;; ++i) {
    double x = static_cast<double>(i) * step;
    if (x >= 1.0) break;
    g.push_back(x);
  }
  return g;
}

}  // namespace ssm
