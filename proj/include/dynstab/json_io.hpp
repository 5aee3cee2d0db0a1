#pragma once

#include <json.hpp>

#include "dynstab/ratf.hpp"

namespace dynstab {

// Schema: {"vars": [names], "terms": [{"coeff": "p/q", "exps": [ints]}]} with
// terms in canonical (ascending graded-lex) order; coefficients are exact
// decimal-free rational strings. Round trips are bit-exact.
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const VarTablePtr& vt, const nlohmann::json& j);

// {"num": <poly>, "den": <poly>} with the denominator expanded.
nlohmann::json ratf_to_json(const RatF& f);
RatF ratf_from_json(const VarTablePtr& vt, const nlohmann::json& j);

}  // namespace dynstab
