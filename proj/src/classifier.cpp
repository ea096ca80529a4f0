#include "ssm/classifier.hpp"

#include <algorithm>
#include <sstream>

#include "ssm/errors.hpp"
#include "ssm/mask_zeros.hpp"

namespace ssm {

namespace {

constexpr const char* kCiteEqualWeights = "Deng-Chen: a spectral self-similar measure has equal weights";
constexpr const char* kCiteIrrational =
    "four-digit irrational case: a spectral measure on {0,1,a,b} forces a and b rational";
constexpr const char* kCiteIrreducibleThree =
    "three-digit zeros need a xi, b xi in {1/3, 2/3} mod 1, so a/b must be rational";
constexpr const char* kCiteZeros2 = "two digits: Z(M_C) = (1/2)O for C = {0,1}";
constexpr const char* kCiteZeros3 = "three digits: Z(M_C) nonempty iff C = {0,1,2} (mod 3); then Z(M_C) = (1/3)(Z \\ 3Z)";
constexpr const char* kCiteZeros4 = "four digits: Z(M_D) nonempty iff exactly two of a, b, c are odd";
constexpr const char* kCiteIntegerRatio = "integer ratio criterion: Z(M_D) inside a lattice and mu spectral imply 1/rho = N is an integer";
constexpr const char* kCiteCard2 = "two digits: Bernoulli zero structure; spectral iff rho = 1/N with N even";
constexpr const char* kCiteCard3 =
    "three digits: if 3 does not divide N every bi-zero set is a bi-zero set of delta_C, hence finite";
constexpr const char* kCiteEvenN = "four digits: N odd gives N^k O in O, so Z(mu) lies in Z(M_D) and bi-zero sets are finite";
constexpr const char* kCiteTDistinct = "four-digit classification: t1 != t2 admits no spectrum";
constexpr const char* kCiteTBeta = "four-digit classification: t1 = t2 = beta r admits no spectrum";
constexpr const char* kCiteSufficiency =
    "four-digit classification: t = beta k + r with 0 < r < beta gives a product-form Hadamard triple for m^k D";
constexpr const char* kCiteUnsupported =
    "five or more digits: mask zeros can be purely irrational (e.g. {0,1,3,5,6}), so no lattice reduction applies";
constexpr const char* kCiteDirac = "single digit: the Dirac mass is spectral with spectrum {0} (convention)";

Verdict& reject(Verdict& v, Outcome o, Reason r, std::string step, std::string result, const char* cite) {
  v.outcome = o;
  v.reason = r;
  v.citations.emplace_back(cite);
  v.steps.push_back(PipelineStep{std::move(step), std::move(result), cite});
  return v;
}

void pass(Verdict& v, std::string step, std::string result, const char* cite) {
  v.steps.push_back(PipelineStep{std::move(step), std::move(result), cite});
}

// 1/N, or empty when rho is not the reciprocal of an integer >= 2.
std::optional<std::int64_t> reciprocal_integer(const ContractionRatio& rho) {
  if (!rho.is_rational()) return std::nullopt;
  const Rational& v = rho.value();
  if (v.num() != 1) return std::nullopt;
  return to_int64(v.den());
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

Certificate plain_triple_certificate(std::int64_t N, std::vector<std::int64_t> C, std::vector<std::int64_t> L) {
  Certificate cert;
  cert.kind = Certificate::Kind::Triple;
  cert.tiling = tiles_zn(C, N);
  cert.triple = HadamardTriple{N, std::move(C), std::move(L)};
  cert.verified = is_hadamard_triple(*cert.triple);
  return cert;
}

}  // namespace

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Spectral: return "Spectral";
    case Outcome::NonSpectral: return "NonSpectral";
    case Outcome::Unsupported: return "Unsupported";
  }
  return "?";
}

const char* to_string(Reason r) {
  switch (r) {
    case Reason::OK: return "OK";
    case Reason::UnequalWeights: return "UnequalWeights";
    case Reason::IrrationalDigits: return "IrrationalDigits";
    case Reason::EmptyZeroSet: return "EmptyZeroSet";
    case Reason::RhoNotReciprocalInteger: return "RhoNotReciprocalInteger";
    case Reason::NOdd: return "NOdd";
    case Reason::ParityPattern: return "ParityPattern";
    case Reason::TDistinct: return "TDistinct";
    case Reason::TDivisibleByBeta: return "TDivisibleByBeta";
    case Reason::Card3ResidueFail: return "Card3ResidueFail";
    case Reason::Card3NNotDivisibleBy3: return "Card3NNotDivisibleBy3";
    case Reason::CardinalityUnsupported: return "CardinalityUnsupported";
  }
  return "?";
}

bool hu_lau_infinite_bizero(const ContractionRatio& rho) {
  auto rt = rho.as_root();
  return rt.m % 2 == 0 && rt.n % 2 != 0;
}

Verdict classify(const ContractionRatio& rho, const DigitSet& d) { return classify(rho, d, WeightVector::uniform(d.size())); }

Verdict classify(const ContractionRatio& rho, const DigitSet& d, const WeightVector& p) {
  Verdict v;
  v.rho = rho.str();
  v.digits = d.str();
  v.weights = p.str();

  if (d.size() >= 5)
    return reject(v, Outcome::Unsupported, Reason::CardinalityUnsupported, "cardinality",
                  std::to_string(d.size()) + " digits (at most 4 supported)", kCiteUnsupported);
  if (p.size() != d.size())
    throw InvalidInput("weight vector has " + std::to_string(p.size()) + " entries for " + std::to_string(d.size()) + " digits");

  // (1) weights
  if (!p.is_equal())
    return reject(v, Outcome::NonSpectral, Reason::UnequalWeights, "weights", "not equal", kCiteEqualWeights);
  pass(v, "weights", "equal", kCiteEqualWeights);

  // (2) rational reduction
  NormalizeResult nr = normalize_digits(d);
  if (auto* w = std::get_if<IrreducibleWitness>(&nr)) {
    v.witness = *w;
    if (d.size() == 4)
      return reject(v, Outcome::NonSpectral, Reason::IrrationalDigits, "normalize", "irrational ratio " + w->ratio(),
                    kCiteIrrational);
    return reject(v, Outcome::NonSpectral, Reason::EmptyZeroSet, "normalize", "irrational ratio " + w->ratio(),
                  kCiteIrreducibleThree);
  }
  v.normalized = std::get<NormalizedDigits>(nr);
  const IntegerDigits& C = v.normalized->integers;
  pass(v, "normalize", "D = (" + v.normalized->scale.str() + ") * " + C.str(), "rescaling preserves spectrality");

  if (C.size() == 1) {
    Certificate cert;
    cert.kind = Certificate::Kind::Trivial;
    cert.spectrum_seed = {0};
    cert.verified = true;
    v.certificate = cert;
    v.outcome = Outcome::Spectral;
    v.reason = Reason::OK;
    v.citations.emplace_back(kCiteDirac);
    pass(v, "single digit", "spectrum {0}", kCiteDirac);
    return v;
  }

  // (3) zero set
  const char* zero_cite = C.size() == 2 ? kCiteZeros2 : C.size() == 3 ? kCiteZeros3 : kCiteZeros4;
  ZeroSet z = zero_set(C);
  if (z.empty()) return reject(v, Outcome::NonSpectral, Reason::EmptyZeroSet, "zero set", "Z(M_C) is empty", zero_cite);
  pass(v, "zero set", z.str(), zero_cite);

  // (4) rho = 1/N
  auto N = reciprocal_integer(rho);
  if (!N)
    return reject(v, Outcome::NonSpectral, Reason::RhoNotReciprocalInteger, "contraction",
                  "rho = " + rho.str() + " is not 1/N", kCiteIntegerRatio);
  v.N = *N;
  pass(v, "contraction", "rho = 1/" + std::to_string(*N), kCiteIntegerRatio);

  // (5) two digits
  if (C.size() == 2) {
    if (*N % 2 != 0) return reject(v, Outcome::NonSpectral, Reason::NOdd, "two digits", "N odd", kCiteCard2);
    v.certificate = plain_triple_certificate(*N, C.values(), {0, *N / 2});
    if (!v.certificate->verified) throw InternalInconsistency("two-digit certificate failed verification");
    v.outcome = Outcome::Spectral;
    v.reason = Reason::OK;
    v.citations.emplace_back(kCiteCard2);
    pass(v, "two digits", "Hadamard triple (" + std::to_string(*N) + ", {0,1}, {0," + std::to_string(*N / 2) + "})", kCiteCard2);
    return v;
  }

  // (6) three digits; a nonempty zero set already means C = {0,1,2} mod 3
  if (C.size() == 3) {
    if (*N % 3 != 0)
      return reject(v, Outcome::NonSpectral, Reason::Card3NNotDivisibleBy3, "three digits", "3 does not divide N", kCiteCard3);
    v.certificate = plain_triple_certificate(*N, C.values(), {0, *N / 3, 2 * (*N / 3)});
    if (!v.certificate->verified) throw InternalInconsistency("three-digit certificate failed verification");
    v.outcome = Outcome::Spectral;
    v.reason = Reason::OK;
    v.citations.emplace_back(kCiteCard3);
    pass(v, "three digits", "Hadamard triple (" + std::to_string(*N) + ", " + C.str() + ", " +
                                join(v.certificate->triple->L) + ")", kCiteCard3);
    return v;
  }

  // (7) four digits
  if (*N % 2 != 0) return reject(v, Outcome::NonSpectral, Reason::NOdd, "even N", "N odd", kCiteEvenN);
  pass(v, "even N", "N even", kCiteEvenN);

  std::vector<std::int64_t> odds, evens;
  for (std::size_t i = 1; i < 4; ++i) (C.values()[i] % 2 != 0 ? odds : evens).push_back(C.values()[i]);
  if (odds.size() != 2)
    return reject(v, Outcome::NonSpectral, Reason::ParityPattern, "parity", "not two odd digits", kCiteZeros4);
  const std::int64_t a = odds[0], c = odds[1], b = evens[0];
  const TwoAdic v1 = val2(b), v2 = val2(c - a);
  v.valuations = std::pair{v1.t, v2.t};
  if (v1.t != v2.t)
    return reject(v, Outcome::NonSpectral, Reason::TDistinct, "valuations",
                  "t1 = " + std::to_string(v1.t) + " != t2 = " + std::to_string(v2.t), kCiteTDistinct);

  const EvenSplit split = decompose_even(*N);
  const int t = v1.t;
  if (t % split.beta == 0)
    return reject(v, Outcome::NonSpectral, Reason::TDivisibleByBeta, "valuations",
                  "t = " + std::to_string(t) + " is a multiple of beta = " + std::to_string(split.beta), kCiteTBeta);

  StructureDecomposition dec;
  dec.a = a;
  dec.t = t;
  dec.ell = v1.odd;
  dec.ell_prime = v2.odd;
  dec.beta = split.beta;
  dec.m = split.m;
  dec.k = t / split.beta;
  dec.r = t % split.beta;

  Certificate cert;
  cert.kind = Certificate::Kind::ProductForm;
  cert.decomposition = dec;
  cert.product_form = construct_product_form(dec, *N);
  cert.verified = verify_product_form(cert.product_form->form);
  if (!cert.verified) throw InternalInconsistency("product-form certificate failed verification");
  v.certificate = std::move(cert);
  v.outcome = Outcome::Spectral;
  v.reason = Reason::OK;
  v.citations.emplace_back(kCiteSufficiency);
  pass(v, "valuations",
       "t = " + std::to_string(t) + " = " + std::to_string(split.beta) + "*" + std::to_string(dec.k) + " + " +
           std::to_string(dec.r),
       kCiteSufficiency);
  return v;
}

bool certificate_verifies(const Certificate& c) {
  switch (c.kind) {
    case Certificate::Kind::Trivial: return c.spectrum_seed == std::vector<std::int64_t>{0};
    case Certificate::Kind::Triple: return c.triple && is_hadamard_triple(*c.triple);
    case Certificate::Kind::ProductForm:
      return c.product_form && c.decomposition && c.decomposition->valid() && verify_product_form(c.product_form->form);
  }
  return false;
}

std::string explain(const Verdict& v) {
  std::ostringstream os;
  os << "rho = " << v.rho << ", D = " << v.digits << ", p = (" << v.weights << ")\n";
  for (std::size_t i = 0; i < v.steps.size(); ++i) {
    const auto& s = v.steps[i];
    os << "  [" << i + 1 << "] " << s.name << ": " << s.result << "\n      because " << s.citation << "\n";
  }
  os << "verdict: " << to_string(v.outcome);
  if (v.reason != Reason::OK) os << " (" << to_string(v.reason) << ")";
  os << "\n";
  if (!v.certificate) return os.str();

  const Certificate& c = *v.certificate;
  switch (c.kind) {
    case Certificate::Kind::Trivial:
      os << "certificate: spectrum {0}\n";
      break;
    case Certificate::Kind::Triple:
      os << "certificate: Hadamard triple (" << c.triple->N << ", " << join(c.triple->D) << ", " << join(c.triple->L)
         << ")" << (c.verified ? " [verified]" : " [FAILED]") << "\n";
      if (c.tiling) os << "  tiling complement B = " << join(*c.tiling) << "\n";
      break;
    case Certificate::Kind::ProductForm: {
      const auto& d = *c.decomposition;
      const auto& pf = c.product_form->form;
      os << "decomposition: a=" << d.a << " t=" << d.t << " ell=" << d.ell << " ell'=" << d.ell_prime
         << " beta=" << d.beta << " m=" << d.m << " k=" << d.k << " r=" << d.r << "\n";
      os << "product form for m^k D = " << join(pf.digits) << " (N = " << pf.N << ", stride N^k = " << pf.stride << ")\n";
      os << "  A = " << join(pf.A) << "\n";
      for (const auto& [a, Ba] : pf.B) os << "  B_" << a << " = " << join(Ba) << "\n";
      os << "  L1 = " << join(pf.L1) << ", L2 = " << join(pf.L2) << (c.verified ? " [verified]" : " [FAILED]") << "\n";
      for (const auto& cf : c.product_form->closed_forms)
        os << "  closed form " << cf.label << " = " << join(cf.set) << ": " << (cf.passes ? "passes" : "fails") << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace ssm
