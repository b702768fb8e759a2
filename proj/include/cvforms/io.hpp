#pragma once

// JSON forms of the library's values. Variable numbers in JSON are one-based
// (matching t1..tN); exponent vectors are positional.

#include "cvforms/basis.hpp"
#include "cvforms/cvform.hpp"
#include "cvforms/laplace.hpp"
#include "cvforms/poly.hpp"
#include "cvforms/ribbon.hpp"

#include <json.hpp>

namespace cvf {

using json = nlohmann::json;

json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json to_json(const CvForm& f);
json to_json(const RowBlock& rb);
json to_json(const Expansion& ex);
json to_json(const Ribbon& r);
json to_json(const SkewTableau& t);
json to_json(const BasisElement& e, bool with_type);
json to_json(const Basis& b);

Ribbon ribbon_from_json(const json& j);
/// Throws std::invalid_argument for malformed or non-standard tableaux.
SkewTableau tableau_from_json(const json& j);

}  // namespace cvf
