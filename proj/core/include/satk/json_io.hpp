#pragma once

#include <nlohmann/json.hpp>

#include "satk/lattice_oracle.hpp"
#include "satk/modp.hpp"
#include "satk/monoid.hpp"
#include "satk/root_datum.hpp"
#include "satk/schubert.hpp"

namespace satk {

using nlohmann::json;

json to_json(const Coweight& c);
/// Throws DomainError("parse") unless `j` is an array of integers.
Coweight coweight_from_json(const json& j);

/// {"rank": int, "simple_roots": [[int]], "simple_coroots": [[int]], "label": string}
json to_json(const RootDatum& d);
RootDatum root_datum_from_json(const json& j, std::size_t weyl_cap = default_weyl_cap());

/// {"mu": [int], "dim": int, "strata": [{"lambda": [int], "dim": int, "codim": int}], "component": [int]}
json to_json(const StratumReport& r);

/// {"p": int, "terms": [{"coweight": [int], "coeff": int}]}, lexicographic term order.
template <class Tag>
json to_json(const ModPSum<Tag>& x) {
  json terms = json::array();
  for (const auto& [c, v] : x.terms()) terms.push_back({{"coweight", to_json(c)}, {"coeff", v}});
  return {{"p", x.modulus()}, {"terms", std::move(terms)}};
}

/// Inverse of to_json; coefficients are reduced mod p. Keys are not checked
/// against any root datum here.
template <class Tag>
ModPSum<Tag> element_from_json(const json& j);

json to_json(const OracleReport& r);

/// {"p": int, "basis": [[int]], "matrix": [[int]], "upper_triangular": bool,
///  "strictly_upper_triangular": bool}
json to_json(const FpMatrix& m);

}  // namespace satk
