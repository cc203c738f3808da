#pragma once

#include <map>
#include <vector>

#include "convexmod/distlaw.hpp"

namespace convexmod {

/// An element of S(P_cf S X): weights on convex sets.
template <class Key>
using FamilyWeighting = Weighting<Hull<Key>>;
using ConvexFamilyWeighting = FamilyWeighting<Symbol>;

/// The lifted algebra map: replaces every convex set in supp Φ by one of its
/// points, weights and sums, and takes the hull of all outcomes. Choosing
/// among generators suffices. α(ε) = {ε}; a key ∅ gives ∅.
template <class Key>
Hull<Key> alpha(const FamilyWeighting<Key>& phi) {
  Semiring sr = phi.semiring();
  if (!sr.is_positive_semifield()) throw Error("alpha needs a positive semifield");
  std::vector<std::vector<Weighting<Key>>> options;
  for (auto& [a, w] : phi) options.push_back(a.generators());
  std::vector<Weighting<Key>> gens;
  detail::for_each_product<Weighting<Key>>(
      options, [&](const std::vector<const Weighting<Key>*>& pick) {
        std::vector<std::pair<Key, Scalar>> entries;
        for (std::size_t i = 0; i < pick.size(); ++i) {
          const Scalar& w = phi.entries()[i].second;
          for (auto& [k, v] : *pick[i]) entries.emplace_back(k, sr.mul(w, v));
        }
        gens.emplace_back(sr, std::move(entries));
      });
  return Hull<Key>::of(sr, std::move(gens));
}

/// Unit of P_cf S: x ↦ {Δ_x}.
template <class Key>
Hull<Key> pc_unit(Semiring sr, Key x) {
  return Hull<Key>::singleton(fs_unit(sr, std::move(x)));
}

/// Functor action of P_cf S.
template <class Key, std::invocable<const Key&> F>
auto pc_map(F&& f, const Hull<Key>& a) {
  return cs_map(std::forward<F>(f), a);
}

inline ConvexSet pc_map(const SymbolMap& f, const ConvexSet& a) {
  return cs_map([&](const Symbol& x) { return apply(f, x); }, a);
}

/// Multiplication of P_cf S: the hull of the union of α(Θ) over the
/// generators Θ of the outer set.
template <class Key>
Hull<Key> pc_mult(const Hull<Hull<Key>>& outer) {
  Semiring sr = outer.semiring();
  std::vector<Weighting<Key>> gens;
  for (auto& theta : outer.generators()) {
    auto part = alpha(theta);
    gens.insert(gens.end(), part.generators().begin(), part.generators().end());
  }
  return Hull<Key>::of(sr, std::move(gens));
}

/// A Kleisli arrow X → P_cf S Y, total on `vars_in`.
struct KleisliArrow {
  Semiring sr;
  std::vector<Symbol> vars_in, vars_out;
  std::map<Symbol, ConvexSet> table;

  /// Throws unless the table is total on vars_in, has no extra keys, and all
  /// images live over vars_out in the arrow's semiring.
  void validate() const;
  const ConvexSet& operator()(const Symbol& x) const;

  friend bool operator==(const KleisliArrow&, const KleisliArrow&) = default;
};

/// x ↦ {Δ_x}.
KleisliArrow kleisli_identity(Semiring sr, const std::vector<Symbol>& vars);
/// The constant-∅ arrow.
KleisliArrow kleisli_bottom(Semiring sr, const std::vector<Symbol>& vars_in,
                            const std::vector<Symbol>& vars_out);
/// Pointwise join.
KleisliArrow kleisli_join(const KleisliArrow& f, const KleisliArrow& g);
/// g after f: x ↦ ⊔_{φ gen of f(x)} Σ_y φ(y)·g(y).
KleisliArrow kleisli_compose(const KleisliArrow& f, const KleisliArrow& g);
/// Same composite, computed as μ ∘ P_cf S(g) on each f(x).
KleisliArrow kleisli_compose_via_mult(const KleisliArrow& f, const KleisliArrow& g);

}  // namespace convexmod
