#pragma once

#include <algorithm>
#include <concepts>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "convexmod/semiring.hpp"

namespace convexmod {

using Symbol = std::string;
using SymbolSet = std::set<Symbol>;

/// A finitely supported function Key -> S, stored as its support sorted by
/// key. Zero weights are never stored, so `==` is extensional equality.
template <class Key>
class Weighting {
 public:
  using key_type = Key;
  using Entry = std::pair<Key, Scalar>;

  Weighting() = default;
  explicit Weighting(Semiring sr) : sr_(sr) {}

  /// Builds the function from arbitrary entries: repeated keys are summed in
  /// the semiring and zeros are dropped.
  Weighting(Semiring sr, std::vector<Entry> entries) : sr_(sr), entries_(std::move(entries)) {
    for (auto& e : entries_) sr_.check(e.second);
    std::stable_sort(entries_.begin(), entries_.end(),
                     [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::vector<Entry> merged;
    merged.reserve(entries_.size());
    for (auto& e : entries_) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second = sr_.add(merged.back().second, e.second);
      else
        merged.push_back(std::move(e));
    }
    std::erase_if(merged, [](const Entry& e) { return e.second.is_zero(); });
    entries_ = std::move(merged);
  }

  Semiring semiring() const { return sr_; }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Scalar operator()(const Key& k) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                               [](const Entry& e, const Key& key) { return e.first < key; });
    return it != entries_.end() && it->first == k ? it->second : sr_.zero();
  }

  std::vector<Key> support() const {
    std::vector<Key> out;
    out.reserve(entries_.size());
    for (auto& e : entries_) out.push_back(e.first);
    return out;
  }

  /// Sum of all weights.
  Scalar total() const {
    Scalar s = sr_.zero();
    for (auto& e : entries_) s = sr_.add(s, e.second);
    return s;
  }

  friend bool operator==(const Weighting& a, const Weighting& b) {
    return a.sr_ == b.sr_ && a.entries_ == b.entries_;
  }
  friend std::strong_ordering operator<=>(const Weighting& a, const Weighting& b) {
    if (a.sr_.id() != b.sr_.id())
      return a.sr_.id() < b.sr_.id() ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.entries_ <=> b.entries_;
  }

 private:
  Semiring sr_;
  std::vector<Entry> entries_;
};

/// An element of S X.
using FinSupp = Weighting<Symbol>;
/// An element of S S X.
using FinSupp2 = Weighting<FinSupp>;
/// An element of S P X (finite subsets only).
using SetWeighting = Weighting<SymbolSet>;
/// An element of S(∋_X): weights on pairs (A, x) with x in A.
using MembershipWeighting = Weighting<std::pair<SymbolSet, Symbol>>;

inline void require_same(Semiring a, Semiring b) {
  if (!(a == b)) throw Error("mixed semirings");
}

/// The Dirac function at `k`.
template <class Key>
Weighting<Key> fs_unit(Semiring sr, Key k) {
  return Weighting<Key>(sr, {{std::move(k), sr.one()}});
}

template <class Key>
Weighting<Key> fs_zero(Semiring sr) {
  return Weighting<Key>(sr);
}

template <class Key>
Weighting<Key> fs_add(const Weighting<Key>& a, const Weighting<Key>& b) {
  require_same(a.semiring(), b.semiring());
  std::vector<typename Weighting<Key>::Entry> all(a.entries());
  all.insert(all.end(), b.begin(), b.end());
  return Weighting<Key>(a.semiring(), std::move(all));
}

template <class Key>
Weighting<Key> fs_scale(const Scalar& lambda, const Weighting<Key>& a) {
  Semiring sr = a.semiring();
  sr.check(lambda);
  std::vector<typename Weighting<Key>::Entry> out;
  out.reserve(a.size());
  for (auto& [k, v] : a) out.emplace_back(k, sr.mul(lambda, v));
  return Weighting<Key>(sr, std::move(out));
}

/// Functor action: pushes weights forward along `f`, summing over fibres.
template <class Key, std::invocable<const Key&> F>
auto fs_map(F&& f, const Weighting<Key>& a) {
  using Out = std::decay_t<decltype(f(std::declval<const Key&>()))>;
  std::vector<std::pair<Out, Scalar>> out;
  out.reserve(a.size());
  for (auto& [k, v] : a) out.emplace_back(f(k), v);
  return Weighting<Out>(a.semiring(), std::move(out));
}

using SymbolMap = std::map<Symbol, Symbol>;

inline Symbol apply(const SymbolMap& f, const Symbol& x) {
  auto it = f.find(x);
  if (it == f.end()) throw Error("symbol '" + x + "' is not mapped");
  return it->second;
}

inline FinSupp fs_map(const SymbolMap& f, const FinSupp& a) {
  return fs_map([&](const Symbol& x) { return apply(f, x); }, a);
}

/// Monad multiplication: the weighted pointwise sum of the inner functions.
template <class Key>
Weighting<Key> fs_mult(const Weighting<Weighting<Key>>& psi) {
  Semiring sr = psi.semiring();
  std::vector<typename Weighting<Key>::Entry> out;
  for (auto& [phi, w] : psi) {
    require_same(sr, phi.semiring());
    for (auto& [k, v] : phi) out.emplace_back(k, sr.mul(w, v));
  }
  return Weighting<Key>(sr, std::move(out));
}

/// The semimodule-combination Σ w_i · φ_i of a list of pairs.
template <class Key>
Weighting<Key> fs_combine(Semiring sr, const std::vector<std::pair<Weighting<Key>, Scalar>>& parts) {
  std::vector<typename Weighting<Key>::Entry> out;
  for (auto& [phi, w] : parts)
    for (auto& [k, v] : phi) out.emplace_back(k, sr.mul(w, v));
  return Weighting<Key>(sr, std::move(out));
}

std::string to_string(const FinSupp& phi);
std::string to_string(const SymbolSet& s);
std::string to_string(const SetWeighting& phi);

}  // namespace convexmod
