#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "convexmod/exactlp.hpp"
#include "convexmod/freemod.hpp"

namespace convexmod {

/// Weights λ ≥ 0 with Σλ = 1 and Σλ_i·gens[i] = target, found by the exact
/// simplex, or nullopt when target is outside the Q+ hull of gens.
template <class Key>
std::optional<std::vector<Rational>> hull_weights(const std::vector<Weighting<Key>>& gens,
                                                  const Weighting<Key>& target) {
  if (gens.empty()) return std::nullopt;
  std::vector<Key> coords;
  for (auto& g : gens)
    for (auto& e : g) coords.push_back(e.first);
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  for (auto& e : target)
    if (!std::binary_search(coords.begin(), coords.end(), e.first)) return std::nullopt;

  auto row_of = [&](const Key& k) {
    return static_cast<std::size_t>(std::lower_bound(coords.begin(), coords.end(), k) -
                                    coords.begin());
  };
  FeasibilitySystem sys;
  sys.columns.assign(gens.size(), std::vector<Rational>(coords.size() + 1, 0));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (auto& [k, v] : gens[j]) sys.columns[j][row_of(k)] = v.value();
    sys.columns[j].back() = 1;
  }
  sys.target.assign(coords.size() + 1, 0);
  for (auto& [k, v] : target) sys.target[row_of(k)] = v.value();
  sys.target.back() = 1;
  return feasible(sys);
}

namespace detail {

// Bool hulls are the closures under binary joins: target is in the hull iff
// the generators below it are nonempty and join to it.
template <class Key>
bool bool_member(const std::vector<const Weighting<Key>*>& gens, const Weighting<Key>& target) {
  bool any = false;
  std::vector<Key> covered;
  for (auto* g : gens) {
    bool below = std::all_of(g->begin(), g->end(),
                             [&](const auto& e) { return !target(e.first).is_zero(); });
    if (!below) continue;
    any = true;
    for (auto& e : *g) covered.push_back(e.first);
  }
  if (!any) return false;
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  return covered.size() == target.size();
}

template <class Key>
bool member_of(Semiring sr, const std::vector<const Weighting<Key>*>& gens,
               const Weighting<Key>& target) {
  if (gens.empty()) return false;
  for (auto* g : gens)
    if (*g == target) return true;
  switch (sr.id()) {
    case SemiringId::nat: return false;
    case SemiringId::boolean: return bool_member(gens, target);
    case SemiringId::qplus: {
      std::vector<Weighting<Key>> copy;
      copy.reserve(gens.size());
      for (auto* g : gens) copy.push_back(*g);
      return hull_weights(copy, target).has_value();
    }
  }
  return false;
}

// Cheap certificate that `g` is not in the Q+ hull of `others`: some
// coordinate of g lies outside the range the others span there.
template <class Key>
bool obviously_extreme(const Weighting<Key>& g, const std::vector<const Weighting<Key>*>& others) {
  if (others.empty()) return true;
  std::vector<Key> keys = g.support();
  for (auto* h : others)
    for (auto& e : *h) keys.push_back(e.first);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (auto& k : keys) {
    Scalar v = g(k);
    bool above = true, below = true;
    for (auto* h : others) {
      Scalar w = (*h)(k);
      if (!(v > w)) above = false;
      if (!(v < w)) below = false;
    }
    if (above || below) return true;
  }
  return false;
}

}  // namespace detail

/// A finitely generated convex subset of S Key, stored by its canonical
/// generators: sorted, duplicate free, and none in the hull of the others.
/// The empty generator list is the empty set, which differs from {ε}.
template <class Key>
class Hull {
 public:
  using Point = Weighting<Key>;

  Hull() = default;
  explicit Hull(Semiring sr) : sr_(sr) {}

  /// Hull of arbitrary generators, reduced to canonical form. Redundant
  /// generators are dropped one at a time in sorted order.
  static Hull of(Semiring sr, std::vector<Point> gens) {
    for (auto& g : gens) require_same(sr, g.semiring());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    Hull h(sr);
    if (sr.id() == SemiringId::nat || gens.size() <= 1) {
      h.gens_ = std::move(gens);
      return h;
    }
    std::vector<bool> alive(gens.size(), true);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::vector<const Point*> others;
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != i && alive[j]) others.push_back(&gens[j]);
      if (sr.id() == SemiringId::qplus && detail::obviously_extreme(gens[i], others)) continue;
      if (detail::member_of(sr, others, gens[i])) alive[i] = false;
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (alive[i]) h.gens_.push_back(std::move(gens[i]));
    return h;
  }

  static Hull singleton(Point p) {
    Hull h(p.semiring());
    h.gens_.push_back(std::move(p));
    return h;
  }

  Semiring semiring() const { return sr_; }
  const std::vector<Point>& generators() const { return gens_; }
  bool empty() const { return gens_.empty(); }

  bool contains(const Point& p) const {
    require_same(sr_, p.semiring());
    std::vector<const Point*> ptrs;
    for (auto& g : gens_) ptrs.push_back(&g);
    return detail::member_of(sr_, ptrs, p);
  }

  friend bool operator==(const Hull& a, const Hull& b) {
    return a.sr_ == b.sr_ && a.gens_ == b.gens_;
  }
  friend std::strong_ordering operator<=>(const Hull& a, const Hull& b) {
    if (a.sr_.id() != b.sr_.id())
      return a.sr_.id() < b.sr_.id() ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.gens_ <=> b.gens_;
  }

 private:
  Semiring sr_;
  std::vector<Point> gens_;
};

/// A finitely generated convex subset of S X.
using ConvexSet = Hull<Symbol>;

template <class Key>
bool member(const Hull<Key>& a, const Weighting<Key>& phi) {
  return a.contains(phi);
}

template <class Key>
Hull<Key> hull_canonicalize(Semiring sr, std::vector<Weighting<Key>> gens) {
  return Hull<Key>::of(sr, std::move(gens));
}

/// Every generator of `a` lies in `b`.
template <class Key>
bool cs_subset(const Hull<Key>& a, const Hull<Key>& b) {
  require_same(a.semiring(), b.semiring());
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const auto& g) { return b.contains(g); });
}

/// Set equality of the two hulls, by mutual generator membership.
template <class Key>
bool cs_equal(const Hull<Key>& a, const Hull<Key>& b) {
  return cs_subset(a, b) && cs_subset(b, a);
}

template <class Key>
Hull<Key> cs_empty(Semiring sr) {
  return Hull<Key>(sr);
}

/// {ε}, the zero of the semimodule of convex sets.
template <class Key>
Hull<Key> cs_zero(Semiring sr) {
  return Hull<Key>::singleton(Weighting<Key>(sr));
}

template <class Key>
Hull<Key> cs_scale(const Scalar& lambda, const Hull<Key>& a) {
  Semiring sr = a.semiring();
  sr.check(lambda);
  if (lambda.is_zero()) return cs_zero<Key>(sr);
  std::vector<Weighting<Key>> gens;
  for (auto& g : a.generators()) gens.push_back(fs_scale(lambda, g));
  return Hull<Key>::of(sr, std::move(gens));
}

/// Minkowski sum. Empty if either side is.
template <class Key>
Hull<Key> cs_add(const Hull<Key>& a, const Hull<Key>& b) {
  require_same(a.semiring(), b.semiring());
  std::vector<Weighting<Key>> gens;
  for (auto& g : a.generators())
    for (auto& h : b.generators()) gens.push_back(fs_add(g, h));
  return Hull<Key>::of(a.semiring(), std::move(gens));
}

/// Hull of the union.
template <class Key>
Hull<Key> cs_join(const Hull<Key>& a, const Hull<Key>& b) {
  require_same(a.semiring(), b.semiring());
  std::vector<Weighting<Key>> gens(a.generators());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Hull<Key>::of(a.semiring(), std::move(gens));
}

/// Points of the set that lie properly inside no segment. For Q+ and bool
/// these are the canonical generators.
template <class Key>
std::vector<Weighting<Key>> extreme_points(const Hull<Key>& a) {
  return a.generators();
}

/// Image of the set under S(f), i.e. the convex set generated by the images
/// of the generators.
template <class Key, std::invocable<const Key&> F>
auto cs_map(F&& f, const Hull<Key>& a) {
  using Out = typename std::decay_t<decltype(fs_map(f, std::declval<const Weighting<Key>&>()))>::key_type;
  std::vector<Weighting<Out>> gens;
  for (auto& g : a.generators()) gens.push_back(fs_map(f, g));
  return Hull<Out>::of(a.semiring(), std::move(gens));
}

std::string to_string(const ConvexSet& a);

}  // namespace convexmod
