#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ssm/rational.hpp"

namespace ssm {

/// Dense integer polynomial, coefficient of x^i at index i. No trailing zeros
/// except for the zero polynomial, which is the empty vector.
using IntPoly = std::vector<std::int64_t>;

/// Phi_q, the minimal polynomial of exp(2 pi i / q). Results are cached.
const IntPoly& cyclotomic_poly(std::int64_t q);

/// Euler's totient; equals deg Phi_q.
std::int64_t euler_phi(std::int64_t q);

/// An element of Z[zeta_q] as a coefficient vector of length phi(q),
/// i.e. a polynomial reduced modulo Phi_q and evaluated at zeta_q = e^{2 pi i/q}.
struct CyclotomicValue {
  std::int64_t order = 1;
  std::vector<std::int64_t> coefficients;

  bool is_zero() const;
  // Numerical value at exp(2 pi i / order), for diagnostics.
  double real() const;
  double imag() const;
};

/// #D * M_D(xi) exactly, for integer digits and rational xi:
/// sum over d of zeta_q^{(-d p) mod q} with xi = p/q in lowest terms.
CyclotomicValue mask_eval_exact(std::span<const std::int64_t> digits, const Rational& xi);

/// Same, with xi given as p/q (need not be reduced; q > 0).
CyclotomicValue mask_eval_exact(std::span<const std::int64_t> digits, std::int64_t p, std::int64_t q);

/// x^e mod Phi_q for 0 <= e < q, reduced to length phi(q).
std::vector<std::int64_t> power_mod_cyclotomic(std::int64_t q, std::int64_t e);

}  // namespace ssm
