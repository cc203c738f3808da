#include "convexmod/json_io.hpp"

#include <algorithm>

namespace convexmod {

json scalar_to_json(Semiring sr, const Scalar& s) {
  switch (sr.id()) {
    case SemiringId::boolean: return !s.is_zero();
    case SemiringId::nat:
      if (s.value().get_num().fits_slong_p()) return s.value().get_num().get_si();
      return s.str();
    case SemiringId::qplus: return s.str();
  }
  return s.str();
}

Scalar scalar_from_json(Semiring sr, const json& j) {
  if (j.is_boolean()) return sr.check(Scalar(j.get<bool>() ? 1 : 0));
  if (j.is_number_unsigned() || j.is_number_integer()) {
    auto v = j.get<long long>();
    if (v < 0) throw Error("negative scalar " + std::to_string(v));
    return sr.check(Scalar(Rational(std::to_string(v))));
  }
  if (j.is_string()) return sr.parse(j.get<std::string>());
  throw Error("bad scalar " + j.dump());
}

json finsupp_to_json(const FinSupp& phi) {
  json j = json::object();
  for (auto& [x, v] : phi) j[x] = scalar_to_json(phi.semiring(), v);
  return j;
}

FinSupp finsupp_from_json(Semiring sr, const json& j) {
  if (!j.is_object()) throw Error("expected an object of symbol weights, got " + j.dump());
  std::vector<std::pair<Symbol, Scalar>> e;
  for (auto& [k, v] : j.items()) e.emplace_back(k, scalar_from_json(sr, v));
  return FinSupp(sr, std::move(e));
}

json convex_to_json(const ConvexSet& a) {
  json gens = json::array();
  for (auto& g : a.generators()) gens.push_back(finsupp_to_json(g));
  return {{"semiring", std::string(a.semiring().name())}, {"generators", gens}};
}

ConvexSet convex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("semiring") || !j.contains("generators"))
    throw Error("expected {\"semiring\": ..., \"generators\": [...]}");
  Semiring sr(parse_semiring_id(j.at("semiring").get<std::string>()));
  std::vector<FinSupp> gens;
  for (auto& g : j.at("generators")) gens.push_back(finsupp_from_json(sr, g));
  return ConvexSet::of(sr, std::move(gens));
}

json set_weighting_to_json(const SetWeighting& phi) {
  json ws = json::array();
  for (auto& [a, v] : phi)
    ws.push_back({{"set", std::vector<Symbol>(a.begin(), a.end())},
                  {"value", scalar_to_json(phi.semiring(), v)}});
  return {{"weights", ws}};
}

SetWeighting set_weighting_from_json(Semiring sr, const json& j) {
  if (!j.is_object() || !j.contains("weights") || !j.at("weights").is_array())
    throw Error("expected {\"weights\": [{\"set\": [...], \"value\": ...}, ...]}");
  std::vector<std::pair<SymbolSet, Scalar>> e;
  for (auto& w : j.at("weights")) {
    SymbolSet a;
    for (auto& x : w.at("set")) a.insert(x.get<std::string>());
    e.emplace_back(std::move(a), scalar_from_json(sr, w.at("value")));
  }
  return SetWeighting(sr, std::move(e));
}

json arrow_to_json(const KleisliArrow& f) {
  json table = json::object();
  for (auto& [x, a] : f.table) table[x] = convex_to_json(a);
  return {{"semiring", std::string(f.sr.name())},
          {"vars_in", f.vars_in},
          {"vars_out", f.vars_out},
          {"table", table}};
}

KleisliArrow arrow_from_json(const json& j) {
  KleisliArrow f;
  f.sr = Semiring(parse_semiring_id(j.at("semiring").get<std::string>()));
  f.vars_in = j.at("vars_in").get<std::vector<Symbol>>();
  f.vars_out = j.at("vars_out").get<std::vector<Symbol>>();
  for (auto& [x, a] : j.at("table").items()) {
    json set = a;
    if (!set.contains("semiring")) set["semiring"] = std::string(f.sr.name());
    f.table.emplace(x, convex_from_json(set));
  }
  f.validate();
  return f;
}

std::string convex_to_csv(const ConvexSet& a, std::vector<Symbol> vars) {
  std::sort(vars.begin(), vars.end());
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? "," : "") + vars[i];
  out += '\n';
  for (auto& g : a.generators()) {
    for (auto& [x, v] : g)
      if (!std::binary_search(vars.begin(), vars.end(), x))
        throw Error("generator mentions '" + x + "' outside the variable list");
    for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? "," : "") + g(vars[i]).str();
    out += '\n';
  }
  return out;
}

}  // namespace convexmod
