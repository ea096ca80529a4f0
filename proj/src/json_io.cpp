#include "ssm/json_io.hpp"

namespace ssm {

namespace {

std::string pq(const Rational& r) { return r.num().str() + "/" + r.den().str(); }

}  // namespace

json to_json(const Rational& r) { return pq(r); }

json to_json(const ScaledResidues& s) {
  return json{{"scale", pq(s.scale)}, {"modulus", s.modulus}, {"residues", s.residues}, {"text", s.str()}};
}

json to_json(const ZeroSet& z) {
  json out = json::array();
  for (const auto& p : z.parts) out.push_back(to_json(p));
  return out;
}

json to_json(const HadamardTriple& t) { return json{{"N", t.N}, {"D", t.D}, {"L", t.L}}; }

json to_json(const ProductForm& pf) {
  json b = json::array();
  for (const auto& [a, Ba] : pf.B) b.push_back(json{{"a", a}, {"B_a", Ba}});
  return json{{"N", pf.N}, {"stride", pf.stride}, {"digits", pf.digits}, {"A", pf.A},
              {"B", b},     {"L1", pf.L1},         {"L2", pf.L2}};
}

json to_json(const StructureDecomposition& d) {
  return json{{"a", d.a},       {"t", d.t}, {"ell", d.ell}, {"ell_prime", d.ell_prime},
              {"beta", d.beta}, {"m", d.m}, {"k", d.k},     {"r", d.r}};
}

json to_json(const Certificate& c) {
  json out;
  switch (c.kind) {
    case Certificate::Kind::Trivial: out["kind"] = "Trivial"; break;
    case Certificate::Kind::Triple: out["kind"] = "Triple"; break;
    case Certificate::Kind::ProductForm: out["kind"] = "ProductForm"; break;
  }
  out["verified"] = c.verified;
  out["spectrum_seed"] = c.spectrum_seed;
  if (c.triple) out["triple"] = to_json(*c.triple);
  if (c.tiling) out["tiling_complement"] = *c.tiling;
  if (c.decomposition) out["decomposition"] = to_json(*c.decomposition);
  if (c.product_form) {
    out["product_form"] = to_json(c.product_form->form);
    json cfs = json::array();
    for (const auto& cf : c.product_form->closed_forms)
      cfs.push_back(json{{"label", cf.label}, {"set", cf.set}, {"passes", cf.passes}});
    out["closed_forms"] = cfs;
  }
  return out;
}

json to_json(const Verdict& v) {
  json out;
  out["input"] = json{{"rho", v.rho}, {"digits", v.digits}, {"weights", v.weights}};
  if (v.normalized) {
    // the spectrum of mu_{rho, alpha C} is Lambda / alpha, with Lambda for digits C
    out["normalized"] = json{{"alpha", v.normalized->scale.str()},
                             {"C", v.normalized->integers.values()}};
  } else if (v.witness) {
    out["normalized"] = json{{"irrational_ratio", v.witness->ratio()}};
  } else {
    out["normalized"] = nullptr;
  }
  if (v.N) out["N"] = *v.N;
  if (v.valuations) out["valuations"] = {v.valuations->first, v.valuations->second};
  out["outcome"] = to_string(v.outcome);
  out["reason"] = to_string(v.reason);
  out["citations"] = v.citations;
  json steps = json::array();
  for (const auto& s : v.steps) steps.push_back(json{{"step", s.name}, {"result", s.result}, {"because", s.citation}});
  out["steps"] = steps;
  if (v.certificate) out["certificate"] = to_json(*v.certificate);
  return out;
}

json to_json(const std::vector<Rational>& points) {
  json out = json::array();
  for (const auto& p : points) out.push_back(pq(p));
  return out;
}

}  // namespace ssm
