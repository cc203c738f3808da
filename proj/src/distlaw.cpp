#include "convexmod/distlaw.hpp"

namespace convexmod {

bool delta_witness_check(const SetWeighting& phi_sets, const FinSupp& phi,
                         const MembershipWeighting& psi) {
  Semiring sr = phi_sets.semiring();
  if (!(sr == phi.semiring()) || !(sr == psi.semiring())) return false;

  std::map<SymbolSet, Scalar> row_sums;
  std::map<Symbol, Scalar> col_sums;
  for (auto& [key, w] : psi) {
    auto& [a, x] = key;
    if (!a.contains(x)) return false;
    auto [rit, rnew] = row_sums.try_emplace(a, sr.zero());
    rit->second = sr.add(rit->second, w);
    auto [cit, cnew] = col_sums.try_emplace(x, sr.zero());
    cit->second = sr.add(cit->second, w);
  }
  // (a): Φ(A) = Σ_{x∈A} ψ(A,x) for every A, including those outside supp Φ.
  for (auto& [a, w] : phi_sets) {
    auto it = row_sums.find(a);
    if ((it == row_sums.end() ? sr.zero() : it->second) != w) return false;
  }
  for (auto& [a, s] : row_sums)
    if (phi_sets(a) != s) return false;
  // (b): φ(x) = Σ_{A∋x} ψ(A,x).
  for (auto& [x, v] : phi) {
    auto it = col_sums.find(x);
    if ((it == col_sums.end() ? sr.zero() : it->second) != v) return false;
  }
  for (auto& [x, s] : col_sums)
    if (phi(x) != s) return false;
  return true;
}

FinSupp2 convex_decomposition(const SetWeighting& phi_sets, const MembershipWeighting& psi) {
  Semiring sr = phi_sets.semiring();
  if (!sr.has_division()) throw Error("not a semifield");

  std::vector<std::vector<Symbol>> options;
  for (auto& [a, w] : phi_sets) options.emplace_back(a.begin(), a.end());
  std::vector<std::pair<FinSupp, Scalar>> out;
  detail::for_each_product<Symbol>(options, [&](const std::vector<const Symbol*>& pick) {
    Scalar weight = sr.one();
    std::vector<std::pair<Symbol, Scalar>> chosen;
    for (std::size_t i = 0; i < pick.size(); ++i) {
      const auto& [a, w] = phi_sets.entries()[i];
      weight = sr.mul(weight, sr.div(psi({a, *pick[i]}), w));
      chosen.emplace_back(*pick[i], w);
    }
    if (!weight.is_zero()) out.emplace_back(FinSupp(sr, std::move(chosen)), weight);
  });
  return FinSupp2(sr, std::move(out));
}

void Relation::validate() const {
  for (auto& [x, y] : pairs)
    if (!domain.contains(x) || !codomain.contains(y))
      throw Error("relation pair (" + x + ", " + y + ") outside domain x codomain");
}

Relation Relation::graph(const SymbolSet& domain, const SymbolSet& codomain, const SymbolMap& f) {
  Relation r{domain, codomain, {}};
  for (auto& x : domain) r.pairs.emplace(x, apply(f, x));
  r.validate();
  return r;
}

bool Relation::is_function() const {
  for (auto& x : domain) {
    std::size_t n = 0;
    for (auto& p : pairs) n += p.first == x;
    if (n != 1) return false;
  }
  return true;
}

WeightingRelation barr_extend(const Relation& r, Semiring sr, unsigned value_bound) {
  if (sr.id() == SemiringId::qplus) throw Error("barr_extend needs a finite carrier (bool or nat)");
  r.validate();
  std::vector<std::pair<Symbol, Symbol>> pairs(r.pairs.begin(), r.pairs.end());
  long top = sr.id() == SemiringId::boolean ? 1 : static_cast<long>(value_bound);

  WeightingRelation out;
  std::vector<long> vals(pairs.size(), 0);
  while (true) {
    std::vector<std::pair<Symbol, Scalar>> left, right;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      left.emplace_back(pairs[i].first, Scalar(vals[i]));
      right.emplace_back(pairs[i].second, Scalar(vals[i]));
    }
    out.emplace(FinSupp(sr, std::move(left)), FinSupp(sr, std::move(right)));
    std::size_t i = 0;
    while (i < vals.size() && ++vals[i] > top) vals[i++] = 0;
    if (i == vals.size()) break;
  }
  return out;
}

std::function<SymbolSet(const SymbolSet&)> trivialE_extend(const Relation& r) {
  r.validate();
  return [r](const SymbolSet& a) {
    SymbolSet out;
    for (auto& [x, y] : r.pairs)
      if (a.contains(x)) out.insert(y);
    return out;
  };
}

std::set<SymbolSet> powerset_delta(const std::set<SymbolSet>& family) {
  SymbolSet u;
  for (auto& a : family) u.insert(a.begin(), a.end());
  return {u};
}

}  // namespace convexmod
