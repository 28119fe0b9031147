#include "satk/json_io.hpp"

#include "satk/error.hpp"

namespace satk {

json to_json(const Coweight& c) { return json(c.coords()); }

Coweight coweight_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("parse", "coweight must be a JSON integer array");
  IntVector v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw DomainError("parse", "coweight entries must be integers");
    v.push_back(x.get<Int>());
  }
  return Coweight(std::move(v));
}

json to_json(const RootDatum& d) {
  return {{"rank", d.rank()},
          {"simple_roots", d.simple_roots()},
          {"simple_coroots", d.simple_coroots()},
          {"label", d.label()}};
}

RootDatum root_datum_from_json(const json& j, std::size_t weyl_cap) {
  try {
    const auto rank = j.at("rank").get<Int>();
    if (rank <= 0) throw DomainError("invalid-datum", "rank must be positive");
    std::vector<IntVector> roots, coroots;
    for (const auto& r : j.at("simple_roots")) roots.push_back(coweight_from_json(r).coords());
    for (const auto& r : j.at("simple_coroots")) coroots.push_back(coweight_from_json(r).coords());
    return RootDatum(static_cast<std::size_t>(rank), std::move(roots), std::move(coroots),
                     j.value("label", std::string("custom")), weyl_cap);
  } catch (const json::exception& e) {
    throw DomainError("parse", std::string("root datum JSON: ") + e.what());
  }
}

json to_json(const StratumReport& r) {
  json strata = json::array();
  for (const auto& s : r.strata)
    strata.push_back({{"lambda", to_json(s.lambda)}, {"dim", s.dim}, {"codim", s.codim}});
  return {{"mu", to_json(r.mu)}, {"dim", r.dim}, {"strata", std::move(strata)}, {"component", r.component}};
}

template <class Tag>
ModPSum<Tag> element_from_json(const json& j) {
  try {
    ModPSum<Tag> x(checked_prime(j.at("p").get<Int>()));
    for (const auto& t : j.at("terms")) x.add_term(coweight_from_json(t.at("coweight")), t.at("coeff").get<Int>());
    return x;
  } catch (const json::exception& e) {
    throw DomainError("parse", std::string("element JSON: ") + e.what());
  }
}

template ModPSum<K0Tag> element_from_json<K0Tag>(const json&);
template ModPSum<HeckeTag> element_from_json<HeckeTag>(const json&);
template ModPSum<AntiDomTag> element_from_json<AntiDomTag>(const json&);

json to_json(const OracleReport& r) {
  json cases = json::array();
  for (const auto& c : r.cases)
    cases.push_back({{"mu", to_json(c.mu)},
                     {"lambda", to_json(c.lambda)},
                     {"product_oracle", to_json(c.product_oracle).at("terms")},
                     {"product_formula", to_json(c.product_formula).at("terms")},
                     {"match", c.match}});
  return {{"group", "GL"}, {"n", r.n}, {"q", r.q}, {"p", r.p}, {"cases", std::move(cases)}};
}

json to_json(const FpMatrix& m) {
  json basis = json::array();
  for (const auto& b : m.basis) basis.push_back(to_json(b));
  return {{"p", m.p},
          {"basis", std::move(basis)},
          {"matrix", m.entries},
          {"upper_triangular", m.is_upper_triangular()},
          {"strictly_upper_triangular", m.is_strictly_upper_triangular()}};
}

}  // namespace satk
