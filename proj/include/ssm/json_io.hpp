#pragma once

#include <nlohmann/json.hpp>

#include "ssm/classifier.hpp"
#include "ssm/hadamard.hpp"
#include "ssm/mask_zeros.hpp"
#include "ssm/rational.hpp"

namespace ssm {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);  // always "p/q", integers as "n/1"
json to_json(const ScaledResidues& s);
json to_json(const ZeroSet& z);  // list of parts
json to_json(const HadamardTriple& t);
json to_json(const ProductForm& pf);
json to_json(const StructureDecomposition& d);
json to_json(const Certificate& c);
json to_json(const Verdict& v);
json to_json(const std::vector<Rational>& points);

}  // namespace ssm
