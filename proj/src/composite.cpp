#include "convexmod/composite.hpp"

#include <algorithm>

namespace convexmod {

void KleisliArrow::validate() const {
  if (table.size() != vars_in.size()) throw Error("kleisli arrow table is not total on vars_in");
  for (auto& x : vars_in) {
    auto it = table.find(x);
    if (it == table.end()) throw Error("kleisli arrow has no image for '" + x + "'");
    require_same(sr, it->second.semiring());
    for (auto& g : it->second.generators())
      for (auto& [y, v] : g)
        if (std::find(vars_out.begin(), vars_out.end(), y) == vars_out.end())
          throw Error("kleisli arrow image mentions '" + y + "' outside vars_out");
  }
}

const ConvexSet& KleisliArrow::operator()(const Symbol& x) const {
  auto it = table.find(x);
  if (it == table.end()) throw Error("kleisli arrow has no image for '" + x + "'");
  return it->second;
}

KleisliArrow kleisli_identity(Semiring sr, const std::vector<Symbol>& vars) {
  KleisliArrow f{sr, vars, vars, {}};
  for (auto& x : vars) f.table.emplace(x, pc_unit(sr, x));
  return f;
}

KleisliArrow kleisli_bottom(Semiring sr, const std::vector<Symbol>& vars_in,
                            const std::vector<Symbol>& vars_out) {
  KleisliArrow f{sr, vars_in, vars_out, {}};
  for (auto& x : vars_in) f.table.emplace(x, cs_empty<Symbol>(sr));
  return f;
}

namespace {

void require_shape(const KleisliArrow& f, const KleisliArrow& g) {
  if (!(f.sr == g.sr)) throw Error("mixed semirings");
  if (f.vars_in != g.vars_in || f.vars_out != g.vars_out)
    throw Error("kleisli arrows have different shapes");
}

}  // namespace

KleisliArrow kleisli_join(const KleisliArrow& f, const KleisliArrow& g) {
  require_shape(f, g);
  KleisliArrow h{f.sr, f.vars_in, f.vars_out, {}};
  for (auto& x : f.vars_in) h.table.emplace(x, cs_join(f(x), g(x)));
  return h;
}

KleisliArrow kleisli_compose(const KleisliArrow& f, const KleisliArrow& g) {
  if (!(f.sr == g.sr)) throw Error("mixed semirings");
  if (f.vars_out != g.vars_in) throw Error("kleisli arrows do not compose: variable mismatch");
  KleisliArrow h{f.sr, f.vars_in, g.vars_out, {}};
  for (auto& x : f.vars_in) {
    ConvexSet acc = cs_empty<Symbol>(f.sr);
    for (auto& phi : f(x).generators()) {
      ConvexSet sum = cs_zero<Symbol>(f.sr);
      for (auto& [y, w] : phi) sum = cs_add(sum, cs_scale(w, g(y)));
      acc = cs_join(acc, sum);
    }
    h.table.emplace(x, std::move(acc));
  }
  return h;
}

KleisliArrow kleisli_compose_via_mult(const KleisliArrow& f, const KleisliArrow& g) {
  if (!(f.sr == g.sr)) throw Error("mixed semirings");
  if (f.vars_out != g.vars_in) throw Error("kleisli arrows do not compose: variable mismatch");
  KleisliArrow h{f.sr, f.vars_in, g.vars_out, {}};
  for (auto& x : f.vars_in) {
    auto lifted = pc_map([&](const Symbol& y) { return g(y); }, f(x));
    h.table.emplace(x, pc_mult(lifted));
  }
  return h;
}

}  // namespace convexmod
