#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "convexmod/convex.hpp"

namespace convexmod {

/// Default cap on the partial sums a brute-force enumeration may expand.
inline constexpr std::size_t kDefaultEnumerationLimit = 2'000'000;

namespace detail {

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Odometer over a product of option lists.
template <class T>
void for_each_product(const std::vector<std::vector<T>>& options,
                      const std::function<void(const std::vector<const T*>&)>& visit) {
  for (auto& o : options)
    if (o.empty()) return;
  std::vector<std::size_t> idx(options.size(), 0);
  std::vector<const T*> cur(options.size());
  for (std::size_t i = 0; i < options.size(); ++i) cur[i] = &options[i][0];
  while (true) {
    visit(cur);
    std::size_t i = 0;
    while (i < options.size() && ++idx[i] == options[i].size()) {
      idx[i] = 0;
      cur[i] = &options[i][0];
      ++i;
    }
    if (i == options.size()) return;
    cur[i] = &options[i][idx[i]];
  }
}

}  // namespace detail

/// c(Φ): the functions S(u)(Φ) for every u picking u(A) ∈ A on supp Φ.
/// Empty when ∅ ∈ supp Φ, and {ε} when Φ = ε.
template <class E>
std::vector<Weighting<E>> choice_set(const Weighting<std::set<E>>& phi) {
  Semiring sr = phi.semiring();
  std::vector<std::vector<E>> options;
  for (auto& [a, w] : phi) options.emplace_back(a.begin(), a.end());
  std::vector<Weighting<E>> out;
  detail::for_each_product<E>(options, [&](const std::vector<const E*>& pick) {
    std::vector<std::pair<E, Scalar>> entries;
    for (std::size_t i = 0; i < pick.size(); ++i)
      entries.emplace_back(*pick[i], phi.entries()[i].second);
    out.emplace_back(sr, std::move(entries));
  });
  detail::sort_unique(out);
  return out;
}

/// δ_X(Φ) on a positive semifield: the hull of c(Φ).
template <class E>
Hull<E> delta_hull(const Weighting<std::set<E>>& phi) {
  Semiring sr = phi.semiring();
  if (!sr.is_positive_semifield()) throw Error("not a semifield; use brute force");
  return Hull<E>::of(sr, choice_set(phi));
}

/// δ_X(Φ) straight from its definition: all φ obtained through some ψ on
/// the membership relation with Σ_{x∈A} ψ(A,x) = Φ(A) and
/// φ(x) = Σ_{A∋x} ψ(A,x). Finite only over bool and nat.
template <class E>
std::vector<Weighting<E>> delta_bruteforce(const Weighting<std::set<E>>& phi,
                                           std::size_t limit = kDefaultEnumerationLimit) {
  Semiring sr = phi.semiring();
  if (sr.id() == SemiringId::qplus) throw Error("use delta_hull + delta_witness_check");

  // For each A ∈ supp Φ, the admissible rows ψ(A, ·) as weightings on A.
  std::vector<std::vector<Weighting<E>>> rows;
  for (auto& [a, w] : phi) {
    std::vector<E> elems(a.begin(), a.end());
    std::vector<Weighting<E>> opts;
    if (sr.id() == SemiringId::boolean) {
      for (std::size_t mask = 1; mask < (std::size_t{1} << elems.size()); ++mask) {
        std::vector<std::pair<E, Scalar>> entries;
        for (std::size_t i = 0; i < elems.size(); ++i)
          if (mask >> i & 1) entries.emplace_back(elems[i], sr.one());
        opts.emplace_back(sr, std::move(entries));
      }
    } else {
      long total = w.value().get_num().get_si();
      std::vector<long> parts(elems.size(), 0);
      std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i + 1 == elems.size()) {
          parts[i] = left;
          std::vector<std::pair<E, Scalar>> entries;
          for (std::size_t k = 0; k < elems.size(); ++k)
            entries.emplace_back(elems[k], Scalar(parts[k]));
          opts.emplace_back(sr, std::move(entries));
          if (opts.size() > limit)
            throw Error("brute-force enumeration exceeds the limit of " + std::to_string(limit));
          return;
        }
        for (long v = 0; v <= left; ++v) {
          parts[i] = v;
          rec(i + 1, left - v);
        }
      };
      if (!elems.empty()) rec(0, total);
    }
    rows.push_back(std::move(opts));
  }
  // φ is the sum of one row per set; fold the sums set by set, deduplicating
  // as we go so equal partial sums are expanded once.
  std::vector<Weighting<E>> out{Weighting<E>(sr)};
  for (auto& opts : rows) {
    if (opts.empty()) return {};
    if (out.size() > limit / opts.size())
      throw Error("brute-force enumeration exceeds the limit of " + std::to_string(limit));
    std::vector<Weighting<E>> next;
    next.reserve(out.size() * opts.size());
    for (auto& partial : out)
      for (auto& row : opts) next.push_back(fs_add(partial, row));
    detail::sort_unique(next);
    out = std::move(next);
  }
  return out;
}

/// True iff ψ satisfies conditions (a) and (b) of δ exactly for Φ and φ.
bool delta_witness_check(const SetWeighting& phi_sets, const FinSupp& phi,
                         const MembershipWeighting& psi);

/// Turns a witness ψ for φ ∈ δ_X(Φ) into a convex combination Ψ of elements
/// of c(Φ) with μ(Ψ) = φ, using Ψ(S(u)Φ) = Π_A ψ(A,u(A)) / Π_A Φ(A) summed
/// over choice functions u. Requires a semifield and a valid witness.
FinSupp2 convex_decomposition(const SetWeighting& phi_sets, const MembershipWeighting& psi);

/// A finite relation between two finite symbol sets.
struct Relation {
  SymbolSet domain, codomain;
  std::set<std::pair<Symbol, Symbol>> pairs;

  /// Throws unless pairs ⊆ domain × codomain.
  void validate() const;
  static Relation graph(const SymbolSet& domain, const SymbolSet& codomain, const SymbolMap& f);
  bool is_function() const;
};

using WeightingRelation = std::set<std::pair<FinSupp, FinSupp>>;

/// The Barr extension S̃(R) = {(S(π_X)ψ, S(π_Y)ψ) : ψ ∈ S(R)}, with ψ
/// ranging over weightings whose values are at most `value_bound` (bool is
/// enumerated fully).
WeightingRelation barr_extend(const Relation& r, Semiring sr, unsigned value_bound);

/// The function on subsets A ↦ {y : ∃a ∈ A. a R y}.
std::function<SymbolSet(const SymbolSet&)> trivialE_extend(const Relation& r);

/// The weak distributive law P P → P P induced by that extension:
/// 𝒜 ↦ {⋃𝒜}.
std::set<SymbolSet> powerset_delta(const std::set<SymbolSet>& family);

}  // namespace convexmod
