#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssm/exact_core.hpp"
#include "ssm/hadamard.hpp"

namespace ssm {

enum class Outcome { Spectral, NonSpectral, Unsupported };

// Closed set of decision reasons; scan tooling pivots on these names.
// ParityPattern and Card3ResidueFail describe the two ways a rational zero set
// comes out empty; the pipeline reports both under EmptyZeroSet and names the
// cause in the step citation.
enum class Reason {
  OK,
  UnequalWeights,
  IrrationalDigits,
  EmptyZeroSet,
  RhoNotReciprocalInteger,
  NOdd,
  ParityPattern,
  TDistinct,
  TDivisibleByBeta,
  Card3ResidueFail,
  Card3NNotDivisibleBy3,
  CardinalityUnsupported,
};

const char* to_string(Outcome o);
const char* to_string(Reason r);

struct PipelineStep {
  std::string name;
  std::string result;
  std::string citation;
};

struct Certificate {
  enum class Kind { Trivial, Triple, ProductForm };
  Kind kind = Kind::Trivial;
  std::vector<std::int64_t> spectrum_seed;              // Trivial: {0}
  std::optional<HadamardTriple> triple;                 // cards 2 and 3
  std::optional<std::vector<std::int64_t>> tiling;      // complement B with C (+) B = Z_N
  std::optional<StructureDecomposition> decomposition;  // card 4
  std::optional<ProductFormConstruction> product_form;  // card 4
  bool verified = false;
};

struct Verdict {
  Outcome outcome = Outcome::NonSpectral;
  Reason reason = Reason::OK;
  std::vector<std::string> citations;
  std::optional<Certificate> certificate;
  std::vector<PipelineStep> steps;

  // context for reporting
  std::string rho;
  std::string digits;
  std::string weights;
  std::optional<NormalizedDigits> normalized;
  std::optional<IrreducibleWitness> witness;
  std::optional<std::int64_t> N;
  // t1, t2 for four rational digits with a nonempty zero set
  std::optional<std::pair<int, int>> valuations;
};

/// Decides spectrality of mu_{rho, d, p} for at most four digits.
/// Five or more digits yield outcome Unsupported. Throws InvalidInput when the
/// weight vector does not match the digit count.
Verdict classify(const ContractionRatio& rho, const DigitSet& d, const WeightVector& p);
Verdict classify(const ContractionRatio& rho, const DigitSet& d);

/// True iff rho = (n/m)^(1/r) with m even and n odd.
bool hu_lau_infinite_bizero(const ContractionRatio& rho);

/// Re-checks a certificate with the exact verifiers.
bool certificate_verifies(const Certificate& c);

/// Human-readable account of every pipeline step and its justification.
std::string explain(const Verdict& v);

}  // namespace ssm
