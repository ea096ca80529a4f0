#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ssm/exact_core.hpp"
#include "ssm/hadamard.hpp"
#include "ssm/rational.hpp"

namespace ssm {

// Spectra are expressed for the measure with integer digits C and ratio 1/N.
// For mu_{rho, alpha C} the corresponding set is Lambda / alpha.

/// Lambda_n = { sum_{j<n} N^j l_j : l_j in L }, sorted.
struct SpectrumTruncation {
  HadamardTriple base;
  int level = 0;
  std::vector<std::int64_t> points;
};

/// Throws DegenerateTriple if two of the (#L)^n sums coincide.
SpectrumTruncation spectrum_truncation(const HadamardTriple& ht, int n);

struct BiZeroReport {
  bool is_bizero = true;
  std::optional<std::pair<Rational, Rational>> violating_pair;
};

/// Exact test that every nonzero difference lies in Z(mu-hat) for digits C, ratio 1/N.
/// The first failing pair (i < j in the given order) is reported.
BiZeroReport is_bizero_set(const std::vector<Rational>& points, const IntegerDigits& C, std::int64_t N);
BiZeroReport is_bizero_set(const std::vector<std::int64_t>& points, const IntegerDigits& C, std::int64_t N);

/// Greedy bi-zero set: candidates on the lattice containing Z(mu-hat), visited in
/// order of increasing |xi| (positive first on ties), kept when every difference
/// to the current set is a zero. Stops at max_count points.
/// Throws InvalidInput if Z(M_C) is empty.
std::vector<Rational> greedy_bizero(const IntegerDigits& C, std::int64_t N, const Rational& bound, std::size_t max_count);

/// (Z intersect [-n, n]) + {0, 1/4}, sorted: the explicit spectrum of the
/// Lebesgue measure on [0,1] U [2,3] (digits {0,1,8,9}, ratio 1/4).
std::vector<Rational> dj_example_spectrum(int n);

std::vector<Rational> to_rationals(const std::vector<std::int64_t>& v);
std::vector<double> to_doubles(const std::vector<Rational>& v);

}  // namespace ssm
