#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ssm {

/// (N, D, L) with #D = #L. The triple is Hadamard when the matrix
/// (e^{2 pi i d l / N}) / sqrt(#D) is unitary.
struct HadamardTriple {
  std::int64_t N = 2;
  std::vector<std::int64_t> D;
  std::vector<std::int64_t> L;

  friend bool operator==(const HadamardTriple&, const HadamardTriple&) = default;
};

/// Exact check: M_D((l - l')/N) = 0 for every pair l != l' in L.
/// Throws InvalidInput when #D != #L.
bool is_hadamard_triple(std::int64_t N, std::span<const std::int64_t> D, std::span<const std::int64_t> L);
inline bool is_hadamard_triple(const HadamardTriple& t) { return is_hadamard_triple(t.N, t.D, t.L); }

/// Floating-point unitarity test of the same matrix: Frobenius-max deviation
/// of its Gram matrix from the identity.
double hadamard_gram_deviation(std::int64_t N, std::span<const std::int64_t> D, std::span<const std::int64_t> L);

/// Lexicographically smallest L in {0..N-1} containing 0 with (N, D, L) Hadamard.
std::optional<std::vector<std::int64_t>> find_spectrum_set(std::int64_t N, std::span<const std::int64_t> D);

/// Product-form decomposition of a digit set:
///   digits = union over a in A of (a + stride * B_a), all disjoint,
/// with (N, A, L1), (N, B_a, L2) and (N, A (+) B_a, L1 (+) L2) Hadamard.
/// The definition uses stride = N; the sufficiency construction for
/// t = beta k + r produces m^k D with stride N^k.
struct ProductForm {
  std::int64_t N = 2;
  std::int64_t stride = 2;
  std::vector<std::int64_t> digits;
  std::vector<std::int64_t> A;
  std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> B;  // (a, B_a), in A order
  std::vector<std::int64_t> L1;
  std::vector<std::int64_t> L2;
};

/// A closed-form choice of L1 or L2 and whether it passes the exact checks.
struct ClosedFormCheck {
  std::string label;
  std::vector<std::int64_t> set;
  bool passes = false;
};

struct StructureDecomposition {
  std::int64_t a = 1;          // odd
  int t = 1;
  std::int64_t ell = 1;        // odd
  std::int64_t ell_prime = 1;  // odd
  int beta = 1;
  std::int64_t m = 1;          // odd
  int k = 0;
  int r = 1;                   // in [1, beta - 1]

  // {0, a, 2^t ell, a + 2^t ell'}
  std::vector<std::int64_t> digits() const;
  std::int64_t N() const;
  bool valid() const;
};

struct ProductFormConstruction {
  ProductForm form;
  std::vector<ClosedFormCheck> closed_forms;
};

/// Builds A = {0, a m^k}, B_0 = {0, 2^r ell}, B_{a m^k} = {0, 2^r ell'},
/// L1 = {0, N/2}, and the smallest L2 = {0, l} passing every condition.
/// Throws InvalidInput for a malformed decomposition and
/// InternalInconsistency if no L2 verifies.
ProductFormConstruction construct_product_form(const StructureDecomposition& dec, std::int64_t N);

bool verify_product_form(const ProductForm& pf);

/// Every triple whose exactness verify_product_form relies on.
std::vector<HadamardTriple> product_form_triples(const ProductForm& pf);

/// Smallest B in {0..N-1} (lexicographic, containing 0) with C (+) B a complete
/// residue system mod N; empty when none exists or #C does not divide N.
std::optional<std::vector<std::int64_t>> tiles_zn(std::span<const std::int64_t> C, std::int64_t N);

/// All pairwise sums, if they are distinct.
std::optional<std::vector<std::int64_t>> direct_sum(std::span<const std::int64_t> X, std::span<const std::int64_t> Y);

}  // namespace ssm
