// spectral_ssm: classify self-similar measures with at most four digits, dump
// zero sets, run exhaustive scans and write Q-function / Gram CSV files.
//
// Exit codes: 0 ok, 1 scan found an invariant violation, 2 invalid or
// unsupported input, 64 usage error.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11/CLI11.hpp>

#include "ssm/classifier.hpp"
#include "ssm/errors.hpp"
#include "ssm/exact_core.hpp"
#include "ssm/hadamard.hpp"
#include "ssm/json_io.hpp"
#include "ssm/kernels.hpp"
#include "ssm/mask_zeros.hpp"
#include "ssm/numerics.hpp"
#include "ssm/spectra.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runs `f` and converts parse failures into UsageError.
template <class F>
auto parse_or_usage(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw UsageError("malformed " + what + ": " + e.what());
  }
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Writes to --out when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
};

// ---------------------------------------------------------------------------
// shared argument parsing

struct RhoArgs {
  std::string rho;
  std::string rho_root;
};

void add_rho_flags(CLI::App* cmd, RhoArgs& a) {
  auto* r = cmd->add_option("--rho", a.rho, "contraction ratio p/q");
  auto* rr = cmd->add_option("--rho-root", a.rho_root, "contraction ratio (n/m)^(1/r) given as n,m,r");
  r->excludes(rr);
}

ssm::ContractionRatio parse_rho(const RhoArgs& a) {
  if (a.rho.empty() == a.rho_root.empty()) throw UsageError("exactly one of --rho and --rho-root is required");
  if (!a.rho.empty()) {
    auto v = parse_or_usage("--rho", [&] { return ssm::Rational::parse(a.rho); });
    return ssm::ContractionRatio::rational(v);
  }
  auto parts = ssm::split_list(a.rho_root);
  if (parts.size() != 3) throw UsageError("--rho-root expects n,m,r");
  std::int64_t nmr[3];
  for (int i = 0; i < 3; ++i) {
    auto v = parse_or_usage("--rho-root", [&] { return ssm::Rational::parse(parts[static_cast<std::size_t>(i)]); });
    auto iv = v.to_int64();
    if (!iv) throw UsageError("--rho-root entries must be integers");
    nmr[i] = *iv;
  }
  return ssm::ContractionRatio::root(nmr[0], nmr[1], nmr[2]);
}

ssm::DigitSet parse_digits(const std::string& text) {
  std::vector<ssm::TauLinear> ds;
  for (const auto& item : ssm::split_list(text))
    ds.push_back(parse_or_usage("--digits", [&] { return ssm::TauLinear::parse(item); }));
  return ssm::DigitSet::make(std::move(ds));
}

ssm::IntegerDigits parse_integer_digits(const std::string& text) {
  std::vector<std::int64_t> ds;
  for (const auto& item : ssm::split_list(text)) {
    auto v = parse_or_usage("digit list", [&] { return ssm::Rational::parse(item); });
    auto iv = v.to_int64();
    if (!iv) throw ssm::InvalidInput("expected integer digits, got '" + item + "'");
    ds.push_back(*iv);
  }
  return ssm::IntegerDigits::make(std::move(ds));
}

double parse_step(const std::string& text) {
  return parse_or_usage("--grid", [&] { return ssm::Rational::parse(text).to_double(); });
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyArgs {
  RhoArgs rho;
  std::string digits;
  std::string weights;
  bool explain = false;
};

int cmd_classify(const ClassifyArgs& a) {
  ssm::ContractionRatio rho = parse_rho(a.rho);
  ssm::DigitSet d = parse_digits(a.digits);
  std::optional<ssm::WeightVector> w;
  if (!a.weights.empty()) {
    std::vector<ssm::Rational> ws;
    for (const auto& item : ssm::split_list(a.weights))
      ws.push_back(parse_or_usage("--weights", [&] { return ssm::Rational::parse(item); }));
    w = ssm::WeightVector::make(std::move(ws));
  }
  ssm::Verdict v = w ? ssm::classify(rho, d, *w) : ssm::classify(rho, d);
  std::cout << ssm::to_json(v).dump(2) << "\n";
  if (a.explain) std::cerr << ssm::explain(v);
  return v.outcome == ssm::Outcome::Unsupported ? kExitInput : kExitOk;
}

// ---------------------------------------------------------------------------
// zeros

int cmd_zeros(const std::string& digits) {
  std::cout << ssm::to_json(ssm::zero_set(parse_integer_digits(digits))).dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// scan

struct ScanArgs {
  ssm::kernels::ScanConfig cfg;
  std::string out;
};

std::string digits_field(const ssm::IntegerDigits& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + std::to_string(d.values()[i]);
  return s;
}

int cmd_scan(const ScanArgs& a) {
  a.cfg.validate();
  const auto rows = ssm::kernels::scan_parallel(a.cfg);
  Sink sink(a.out);
  auto& os = sink.out();
  os << "digits,N,outcome,reason,certificate_ok\n";
  std::size_t spectral = 0, violations = 0, triples = 0, disagreements = 0;
  for (const auto& r : rows) {
    const bool spectral_row = r.outcome == ssm::Outcome::Spectral;
    os << digits_field(r.digits) << "," << r.N << "," << ssm::to_string(r.outcome) << "," << ssm::to_string(r.reason)
       << "," << (spectral_row ? (r.certificate_ok ? "true" : "false") : "") << "\n";
    spectral += spectral_row;
    triples += r.triples_checked;
    disagreements += r.float_disagreements;
    for (const auto& msg : r.violations) {
      ++violations;
      std::cerr << "violation: digits {" << digits_field(r.digits) << "} N=" << r.N << ": " << msg << "\n";
    }
  }
  if (sink.to_file()) {
    ssm::json summary{{"rows", rows.size()},
                      {"spectral", spectral},
                      {"violations", violations},
                      {"triples_checked", triples},
                      {"float_disagreements", disagreements}};
    std::cout << summary.dump(2) << "\n";
  }
  return violations ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------------------
// qdump / gram

struct NumericArgs {
  RhoArgs rho;
  std::string digits;
  int level = 3;
  std::string grid = "1/256";
  std::string spectrum = "auto";
  std::string out;
};

std::int64_t require_reciprocal_integer(const ssm::ContractionRatio& rho, const std::string& why) {
  if (rho.is_rational() && rho.value().num() == 1) {
    if (auto n = ssm::to_int64(rho.value().den())) return *n;
  }
  throw ssm::InvalidInput(why + " needs rho = 1/N for an integer N");
}

// Spectrum specs:
//   auto               Lambda_level of (N, C, L) with L = find_spectrum_set(N, C)
//   triple:l0,l1,...   Lambda_level of (N, C, L) for the given L
//   dj                 the {0,1,8,9} spectrum {k, k + 1/4 : |k| <= level}
//   greedy:B:M         greedy bi-zero set within [-B, B], at most M points
//   points:x0,x1,...   explicit rational points
std::vector<double> build_points(const std::string& spectrum_arg, const ssm::ContractionRatio& rho, const ssm::IntegerDigits& C,
                                 int level) {
  const auto colon = spectrum_arg.find(':');
  const std::string kind = spectrum_arg.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spectrum_arg.substr(colon + 1);

  if (kind == "dj") return ssm::to_doubles(ssm::dj_example_spectrum(level));
  if (kind == "points") {
    std::vector<ssm::Rational> pts;
    for (const auto& item : ssm::split_list(rest))
      pts.push_back(parse_or_usage("--spectrum points", [&] { return ssm::Rational::parse(item); }));
    return ssm::to_doubles(pts);
  }
  if (kind == "auto" || kind == "triple") {
    const std::int64_t N = require_reciprocal_integer(rho, "--spectrum " + kind);
    std::vector<std::int64_t> L;
    if (kind == "auto") {
      auto found = ssm::find_spectrum_set(N, C.values());
      if (!found) throw ssm::InvalidInput("no L makes (N, C, L) a Hadamard triple; pass --spectrum explicitly");
      L = *found;
    } else {
      for (const auto& item : ssm::split_list(rest)) {
        auto v = parse_or_usage("--spectrum triple", [&] { return ssm::Rational::parse(item); }).to_int64();
        if (!v) throw UsageError("--spectrum triple entries must be integers");
        L.push_back(*v);
      }
    }
    auto trunc = ssm::spectrum_truncation(ssm::HadamardTriple{N, C.values(), L}, level);
    return ssm::to_doubles(ssm::to_rationals(trunc.points));
  }
  if (kind == "greedy") {
    const std::int64_t N = require_reciprocal_integer(rho, "--spectrum greedy");
    auto parts = ssm::split_list(rest, ':');
    if (parts.size() != 2) throw UsageError("--spectrum greedy expects greedy:bound:max");
    auto bound = parse_or_usage("greedy bound", [&] { return ssm::Rational::parse(parts[0]); });
    auto max = parse_or_usage("greedy max", [&] { return ssm::Rational::parse(parts[1]); }).to_int64();
    if (!max || *max < 1) throw UsageError("greedy max must be a positive integer");
    return ssm::to_doubles(ssm::greedy_bizero(C, N, bound, static_cast<std::size_t>(*max)));
  }
  throw UsageError("unknown --spectrum kind '" + kind + "'");
}

ssm::MuHatEvaluator make_evaluator(const ssm::ContractionRatio& rho, const ssm::IntegerDigits& C) {
  return ssm::MuHatEvaluator::with_ratio(C, rho.to_double(), ssm::tolerance_from_env());
}

int cmd_qdump(const NumericArgs& a) {
  const auto rho = parse_rho(a.rho);
  const auto C = parse_integer_digits(a.digits);
  const double step = parse_step(a.grid);
  const auto points = build_points(a.spectrum, rho, C, a.level);
  const auto ev = make_evaluator(rho, C);
  const auto grid = ssm::unit_grid(step);
  const auto samples = ssm::q_function(ev, points, grid, a.level);
  Sink sink(a.out);
  auto& os = sink.out();
  os << "xi,q,level\n";
  for (const auto& s : samples) os << fmt17(s.xi) << "," << fmt17(s.q_value) << "," << s.level << "\n";
  return kExitOk;
}

int cmd_gram(const NumericArgs& a) {
  const auto rho = parse_rho(a.rho);
  const auto C = parse_integer_digits(a.digits);
  const auto points = build_points(a.spectrum, rho, C, a.level);
  const auto ev = make_evaluator(rho, C);
  const auto g = ssm::gram_matrix(ev, points);
  Sink sink(a.out);
  auto& os = sink.out();
  os << "i,j,re,im\n";
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j)
      os << i << "," << j << "," << fmt17(g(i, j).real()) << "," << fmt17(g(i, j).imag()) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectrality of self-similar measures with at most four digits"};
  app.require_subcommand(1);

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "decide spectrality and print the verdict as JSON");
  add_rho_flags(classify, ca.rho);
  classify->add_option("--digits", ca.digits, "comma list of rationals; irrational digits as \"p/q+r/s t\"")->required();
  classify->add_option("--weights", ca.weights, "comma list of rational weights (default: equal)");
  classify->add_flag("--explain", ca.explain, "print the decision steps to stderr");

  std::string zero_digits;
  auto* zeros = app.add_subcommand("zeros", "print the zero set of the mask of integer digits");
  zeros->add_option("digits", zero_digits, "comma list of integer digits")->required();

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "classify every gcd-1 digit set in range and check invariants");
  scan->add_option("--cardinality", sa.cfg.cardinality, "2, 3 or 4");
  scan->add_option("--digit-bound", sa.cfg.digit_bound, "largest digit");
  scan->add_option("--n-min", sa.cfg.n_min, "smallest N");
  scan->add_option("--n-max", sa.cfg.n_max, "largest N");
  scan->add_option("--out", sa.out, "CSV output path (default: stdout)");

  NumericArgs qa;
  auto* qdump = app.add_subcommand("qdump", "write Q(xi) on a grid over [0, 1) as CSV");
  NumericArgs ga;
  auto* gram = app.add_subcommand("gram", "write the Gram matrix mu-hat(l_i - l_j) as CSV");
  for (auto [cmd, a] : {std::pair{qdump, &qa}, std::pair{gram, &ga}}) {
    add_rho_flags(cmd, a->rho);
    cmd->add_option("--digits", a->digits, "comma list of integer digits")->required();
    cmd->add_option("--level", a->level, "truncation level n");
    cmd->add_option("--spectrum", a->spectrum, "auto | triple:L | dj | greedy:bound:max | points:list");
    cmd->add_option("--out", a->out, "CSV output path (default: stdout)");
  }
  qdump->add_option("--grid", qa.grid, "grid step, e.g. 1/256");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(ca);
    if (*zeros) return cmd_zeros(zero_digits);
    if (*scan) return cmd_scan(sa);
    if (*qdump) return cmd_qdump(qa);
    if (*gram) return cmd_gram(ga);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ssm::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const ssm::Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitInput;
  } catch (const ssm::DegenerateTriple& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
