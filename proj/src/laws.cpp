#include "convexmod/laws.hpp"

#include <functional>
#include <random>

#include "convexmod/terms.hpp"

namespace convexmod {

namespace {

// ---- printing witnesses ----------------------------------------------------

std::string describe(const Symbol& s) { return s; }
std::string describe(const SymbolSet& s) { return to_string(s); }
template <class A, class B>
std::string describe(const std::pair<A, B>& p);
template <class K>
std::string describe(const Weighting<K>& w);
template <class K>
std::string describe(const Hull<K>& h);
template <class K>
std::string describe(const std::set<K>& s);
template <class K>
std::string describe(const std::vector<K>& v);

template <class A, class B>
std::string describe(const std::pair<A, B>& p) {
  return "(" + describe(p.first) + ", " + describe(p.second) + ")";
}

template <class K>
std::string describe(const Weighting<K>& w) {
  if (w.empty()) return "eps";
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += describe(w.entries()[i].first) + ":" + w.entries()[i].second.str();
  }
  return out + ")";
}

template <class K>
std::string describe(const Hull<K>& h) {
  return "hull" + describe(h.generators());
}

template <class K>
std::string describe(const std::set<K>& s) {
  std::string out = "{";
  bool first = true;
  for (auto& k : s) {
    if (!first) out += ", ";
    first = false;
    out += describe(k);
  }
  return out + "}";
}

template <class K>
std::string describe(const std::vector<K>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += describe(v[i]);
  }
  return out + "}";
}

template <class In, class L, class R>
nlohmann::json witness(const In& in, const L& lhs, const R& rhs) {
  return {{"input", describe(in)}, {"lhs", describe(lhs)}, {"rhs", describe(rhs)}};
}

// ---- enumeration -----------------------------------------------------------

std::vector<SymbolSet> subsets(const std::vector<Symbol>& xs) {
  std::vector<SymbolSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << xs.size()); ++mask) {
    SymbolSet s;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (mask >> i & 1) s.insert(xs[i]);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Subsets of `items` with at most `max_size` elements.
template <class K>
std::vector<std::set<K>> small_subsets(const std::vector<K>& items, std::size_t max_size) {
  std::vector<std::set<K>> out{{}};
  std::function<void(std::size_t, std::set<K>&)> rec = [&](std::size_t from, std::set<K>& cur) {
    if (cur.size() == max_size) return;
    for (std::size_t i = from; i < items.size(); ++i) {
      cur.insert(items[i]);
      out.push_back(cur);
      rec(i + 1, cur);
      cur.erase(items[i]);
    }
  };
  std::set<K> cur;
  rec(0, cur);
  return out;
}

std::vector<Scalar> nonzero_values(Semiring sr, unsigned value_bound) {
  if (sr.id() == SemiringId::boolean) return {sr.one()};
  std::vector<Scalar> out;
  for (unsigned v = 1; v <= value_bound; ++v) out.emplace_back(static_cast<long>(v));
  return out;
}

// All weightings with support of size at most `max_support` drawn from
// `keys` and values from `values`.
template <class K>
std::vector<Weighting<K>> weightings(Semiring sr, const std::vector<K>& keys,
                                     std::size_t max_support, const std::vector<Scalar>& values) {
  std::vector<Weighting<K>> out;
  std::vector<std::pair<K, Scalar>> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    out.emplace_back(sr, cur);
    if (cur.size() == max_support) return;
    for (std::size_t i = from; i < keys.size(); ++i) {
      for (auto& v : values) {
        cur.emplace_back(keys[i], v);
        rec(i + 1);
        cur.pop_back();
      }
    }
  };
  rec(0);
  return out;
}

// All functions from xs to ys.
std::vector<SymbolMap> all_maps(const std::vector<Symbol>& xs, const std::vector<Symbol>& ys) {
  std::vector<SymbolMap> out;
  std::vector<std::size_t> idx(xs.size(), 0);
  while (true) {
    SymbolMap f;
    for (std::size_t i = 0; i < xs.size(); ++i) f[xs[i]] = ys[idx[i]];
    out.push_back(std::move(f));
    std::size_t i = 0;
    while (i < xs.size() && ++idx[i] == ys.size()) idx[i++] = 0;
    if (i == xs.size()) return out;
  }
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  detail::sort_unique(v);
  return v;
}

// ---- random instances ------------------------------------------------------

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(unsigned percent) { return below(100) < percent; }

  Scalar scalar(Semiring sr, unsigned value_bound = 3) {
    switch (sr.id()) {
      case SemiringId::boolean: return sr.one();
      case SemiringId::nat: return Scalar(static_cast<long>(1 + below(value_bound)));
      case SemiringId::qplus: return Scalar(static_cast<long>(1 + below(9)), static_cast<long>(1 + below(4)));
    }
    return sr.one();
  }

  SymbolSet subset(const std::vector<Symbol>& xs, bool allow_empty) {
    while (true) {
      SymbolSet s;
      for (auto& x : xs)
        if (coin(50)) s.insert(x);
      if (allow_empty || !s.empty()) return s;
    }
  }

  FinSupp finsupp(Semiring sr, const std::vector<Symbol>& xs) {
    std::vector<std::pair<Symbol, Scalar>> e;
    for (auto& x : xs)
      if (coin(60)) e.emplace_back(x, scalar(sr));
    return FinSupp(sr, std::move(e));
  }

  ConvexSet convex(Semiring sr, const std::vector<Symbol>& xs, std::size_t max_gens) {
    std::vector<FinSupp> gens;
    std::size_t n = 1 + below(max_gens);
    for (std::size_t i = 0; i < n; ++i) gens.push_back(finsupp(sr, xs));
    return ConvexSet::of(sr, std::move(gens));
  }

  SetWeighting set_weighting(Semiring sr, const std::vector<Symbol>& xs, std::size_t max_support,
                             unsigned empty_percent = 5) {
    std::vector<std::pair<SymbolSet, Scalar>> e;
    std::size_t n = below(max_support + 1);
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(subset(xs, coin(empty_percent)), scalar(sr));
    return SetWeighting(sr, std::move(e));
  }

  SymbolMap map(const std::vector<Symbol>& xs, const std::vector<Symbol>& ys) {
    SymbolMap f;
    for (auto& x : xs) f[x] = ys[below(ys.size())];
    return f;
  }

 private:
  std::mt19937_64 rng_;
};

LawReport report(std::string law, bool expect_holds = true) {
  LawReport r;
  r.law = std::move(law);
  r.expect_holds = expect_holds;
  return r;
}

SetWeighting eta_p_image(const FinSupp& phi) {
  return fs_map([](const Symbol& x) { return SymbolSet{x}; }, phi);
}

template <class E>
SymbolSet union_of(const std::set<E>& family) {
  SymbolSet u;
  for (auto& a : family) u.insert(a.begin(), a.end());
  return u;
}

ConvexSet join_all(Semiring sr, const std::set<ConvexSet>& family) {
  ConvexSet acc = cs_empty<Symbol>(sr);
  for (auto& a : family) acc = cs_join(acc, a);
  return acc;
}

// ---- weak law over bool / nat ---------------------------------------------

std::vector<LawReport> weak_law_finite(const SuiteOptions& opt) {
  Semiring sr = opt.sr;
  auto xs = standard_vars(opt.xsize);
  auto vals = nonzero_values(sr, opt.value_bound);
  auto px = subsets(xs);
  auto spx = weightings(sr, px, 2, vals);
  std::string scope = "exhaustive, |X|=" + std::to_string(opt.xsize) + ", supports <= 2" +
                      (sr.id() == SemiringId::nat
                           ? ", values <= " + std::to_string(opt.value_bound)
                           : std::string());
  std::vector<LawReport> out;

  {
    auto r = report("unit triangle of P: delta(S(eta^P)(phi)) = {phi}");
    for (auto& phi : weightings(sr, xs, xs.size(), vals)) {
      ++r.instances;
      auto lhs = delta_bruteforce(eta_p_image(phi));
      std::vector<FinSupp> rhs{phi};
      if (lhs != rhs) r.fail(witness(phi, lhs, rhs));
    }
    r.detail = scope;
    out.push_back(std::move(r));
  }
  {
    bool has_a = sr.declared_properties().contains(Property::A);
    auto r = report("dropped unit triangle of S: delta(Delta_A) = {Delta_a : a in A}", has_a);
    for (auto& a : px) {
      ++r.instances;
      auto lhs = delta_bruteforce(fs_unit(sr, a));
      std::vector<FinSupp> rhs;
      for (auto& x : a) rhs.push_back(fs_unit(sr, x));
      rhs = sorted(rhs);
      if (lhs != rhs) r.fail(witness(a, lhs, rhs));
    }
    r.detail = scope + (has_a ? "; (A) holds so the triangle should commute"
                              : "; (A) fails so a counterexample is expected");
    out.push_back(std::move(r));
  }
  {
    auto r = report("multiplication square of S: delta . mu^S = P(mu^S) . delta_S . S(delta)");
    for (auto& psi : weightings(sr, spx, 2, vals)) {
      ++r.instances;
      auto lhs = delta_bruteforce(fs_mult(psi));
      auto lifted = fs_map(
          [](const SetWeighting& phi) {
            auto d = delta_bruteforce(phi);
            return std::set<FinSupp>(d.begin(), d.end());
          },
          psi);
      std::vector<FinSupp> rhs;
      for (auto& big : delta_bruteforce(lifted)) rhs.push_back(fs_mult(big));
      rhs = sorted(rhs);
      if (lhs != rhs) r.fail(witness(psi, lhs, rhs));
    }
    r.detail = scope;
    out.push_back(std::move(r));
  }
  {
    auto r = report("multiplication square of P: delta . S(mu^P) = mu^P . P(delta) . delta_P");
    auto families = small_subsets(px, 2);
    for (auto& phi : weightings(sr, families, 2, vals)) {
      ++r.instances;
      auto lhs = delta_bruteforce(fs_map([](const std::set<SymbolSet>& f) { return union_of(f); }, phi));
      std::vector<FinSupp> rhs;
      for (auto& theta : delta_bruteforce(phi)) {
        auto part = delta_bruteforce(theta);
        rhs.insert(rhs.end(), part.begin(), part.end());
      }
      rhs = sorted(rhs);
      if (lhs != rhs) r.fail(witness(phi, lhs, rhs));
    }
    r.detail = scope;
    out.push_back(std::move(r));
  }
  return out;
}

// ---- weak law over Q+ -------------------------------------------------------

std::vector<LawReport> weak_law_qplus(const SuiteOptions& opt) {
  Semiring sr = opt.sr;
  Random rnd(opt.seed);
  auto xs = standard_vars(opt.xsize);
  std::string scope = std::to_string(opt.trials) + " random instances, |X|=" +
                      std::to_string(opt.xsize) + ", seed " + std::to_string(opt.seed);
  std::vector<LawReport> out;

  auto unit_p = report("unit triangle of P: delta(S(eta^P)(phi)) = {phi}");
  auto dropped = report("dropped unit triangle of S: delta(Delta_A) = {Delta_a : a in A}", false);
  auto mult_s = report("multiplication square of S: delta . mu^S = alpha . S(delta)");
  auto mult_p = report("multiplication square of P: delta . S(mu^P) = mu^P . P(delta) . delta_P");
  auto hull_char = report("hull form: every witness psi gives a point of hull(c(Phi))");

  for (unsigned t = 0; t < opt.trials; ++t) {
    {
      auto phi = rnd.finsupp(sr, xs);
      ++unit_p.instances;
      auto lhs = delta_hull(eta_p_image(phi));
      auto rhs = ConvexSet::singleton(phi);
      if (!cs_equal(lhs, rhs)) unit_p.fail(witness(phi, lhs, rhs));
    }
    {
      // On an infinite semifield the hull of two distinct Diracs is infinite,
      // so the sides agree iff A has at most one element.
      auto a = rnd.subset(xs, rnd.coin(10));
      ++dropped.instances;
      auto lhs = delta_hull(fs_unit(sr, a));
      std::vector<FinSupp> diracs;
      for (auto& x : a) diracs.push_back(fs_unit(sr, x));
      bool same = lhs.generators() == sorted(diracs) && a.size() <= 1;
      if (!same) {
        FinSupp mid(sr);
        for (auto& x : a) mid = fs_add(mid, FinSupp(sr, {{x, Scalar(1, static_cast<long>(a.size()))}}));
        auto w = witness(a, lhs, diracs);
        w["point_only_on_lhs"] = describe(mid);
        if (!lhs.contains(mid)) throw Error("internal: barycentre missing from delta(Delta_A)");
        dropped.fail(w);
      }
    }
    {
      std::vector<std::pair<SetWeighting, Scalar>> e;
      std::size_t n = 1 + rnd.below(2);
      for (std::size_t i = 0; i < n; ++i) e.emplace_back(rnd.set_weighting(sr, xs, 2), rnd.scalar(sr));
      Weighting<SetWeighting> psi(sr, std::move(e));
      ++mult_s.instances;
      auto lhs = delta_hull(fs_mult(psi));
      auto rhs = alpha(fs_map([](const SetWeighting& phi) { return delta_hull(phi); }, psi));
      if (!cs_equal(lhs, rhs)) mult_s.fail(witness(psi, lhs, rhs));
    }
    {
      std::vector<std::pair<std::set<SymbolSet>, Scalar>> e;
      std::size_t n = 1 + rnd.below(2);
      for (std::size_t i = 0; i < n; ++i) {
        std::set<SymbolSet> fam;
        std::size_t k = 1 + rnd.below(2);
        for (std::size_t j = 0; j < k; ++j) fam.insert(rnd.subset(xs, rnd.coin(5)));
        e.emplace_back(std::move(fam), rnd.scalar(sr));
      }
      Weighting<std::set<SymbolSet>> phi(sr, std::move(e));
      ++mult_p.instances;
      auto lhs = delta_hull(fs_map([](const std::set<SymbolSet>& f) { return union_of(f); }, phi));
      // The union of δ over the convex set δ_P(Φ) is the hull of the union
      // over its generators.
      ConvexSet rhs = cs_empty<Symbol>(sr);
      auto outer = delta_hull(phi);
      for (auto& theta : outer.generators()) rhs = cs_join(rhs, delta_hull(theta));
      if (!cs_equal(lhs, rhs)) mult_p.fail(witness(phi, lhs, rhs));
    }
    {
      auto phi = rnd.set_weighting(sr, xs, 3, 0);
      // Split every Φ(A) at random over the elements of A.
      std::vector<std::pair<std::pair<SymbolSet, Symbol>, Scalar>> pe;
      for (auto& [a, w] : phi) {
        std::vector<Rational> cuts;
        Rational left = w.value();
        std::vector<Symbol> elems(a.begin(), a.end());
        for (std::size_t i = 0; i < elems.size(); ++i) {
          Rational part = i + 1 == elems.size() ? left : left * Rational(static_cast<long>(rnd.below(5)), 4) / 2;
          if (part > left) part = left;
          left -= part;
          pe.push_back({{a, elems[i]}, Scalar(part)});
        }
      }
      MembershipWeighting psi(sr, std::move(pe));
      std::vector<std::pair<Symbol, Scalar>> fe;
      for (auto& [key, w] : psi) fe.emplace_back(key.second, w);
      FinSupp target(sr, std::move(fe));
      ++hull_char.instances;
      bool ok = delta_witness_check(phi, target, psi);
      auto hull = delta_hull(phi);
      ok = ok && hull.contains(target);
      auto decomposition = convex_decomposition(phi, psi);
      ok = ok && fs_mult(decomposition) == target && decomposition.total() == sr.one();
      auto choices = choice_set(phi);
      for (auto& [chi, w] : decomposition)
        ok = ok && std::binary_search(choices.begin(), choices.end(), chi);
      if (!ok) hull_char.fail(witness(phi, hull, target));
    }
  }
  for (auto* r : {&unit_p, &dropped, &mult_s, &mult_p, &hull_char}) {
    r->detail = scope;
    out.push_back(std::move(*r));
  }
  out[1].detail += "; (A) fails so a counterexample is expected";
  return out;
}

}  // namespace

std::vector<Symbol> standard_vars(unsigned n) {
  static const char* names[] = {"p", "q", "r", "s"};
  std::vector<Symbol> out;
  for (unsigned i = 0; i < n; ++i) out.push_back(i < 4 ? names[i] : "x" + std::to_string(i + 1));
  return out;
}

std::vector<LawReport> check_weak_law(const SuiteOptions& opt) {
  if (opt.sr.id() == SemiringId::qplus) return weak_law_qplus(opt);
  return weak_law_finite(opt);
}

// ---- naturality --------------------------------------------------------------

std::vector<LawReport> check_naturality(const SuiteOptions& opt) {
  Semiring sr = opt.sr;
  std::vector<LawReport> out;
  auto xs = standard_vars(opt.xsize);
  auto image = [](const SymbolMap& f) {
    return [&f](const SymbolSet& a) {
      SymbolSet b;
      for (auto& x : a) b.insert(apply(f, x));
      return b;
    };
  };

  auto r = report("naturality of delta: delta_Y . SP(f) = PS(f) . delta_X");
  if (sr.id() == SemiringId::qplus) {
    Random rnd(opt.seed);
    for (unsigned t = 0; t < opt.trials; ++t) {
      auto ys = standard_vars(1 + static_cast<unsigned>(rnd.below(opt.xsize)));
      for (auto& y : ys) y = "y" + y;
      auto f = rnd.map(xs, ys);
      auto phi = rnd.set_weighting(sr, xs, 3);
      ++r.instances;
      auto lhs = delta_hull(fs_map(image(f), phi));
      auto rhs = pc_map(f, delta_hull(phi));
      if (!cs_equal(lhs, rhs)) r.fail(witness(phi, lhs, rhs));
    }
    r.detail = std::to_string(opt.trials) + " random instances, seed " + std::to_string(opt.seed);
  } else {
    auto vals = nonzero_values(sr, opt.value_bound);
    auto spx = weightings(sr, subsets(xs), 2, vals);
    for (unsigned m = 1; m <= opt.xsize; ++m) {
      auto ys = standard_vars(m);
      for (auto& y : ys) y = "y" + y;
      for (auto& f : all_maps(xs, ys)) {
        for (auto& phi : spx) {
          ++r.instances;
          auto lhs = delta_bruteforce(fs_map(image(f), phi));
          std::vector<FinSupp> rhs;
          for (auto& p : delta_bruteforce(phi)) rhs.push_back(fs_map(f, p));
          rhs = sorted(rhs);
          if (lhs != rhs) r.fail(witness(phi, lhs, rhs));
        }
      }
    }
    r.detail = "exhaustive over all f: X -> Y with |Y| <= |X| = " + std::to_string(opt.xsize) +
               ", supports <= 2";
  }
  out.push_back(std::move(r));

  // The bare choice set is not natural. Search bool instances, widening |X|
  // until a violation turns up.
  auto c = report("naturality of the bare choice set c (expected to fail)", false);
  Semiring b = Semiring::boolean();
  for (unsigned n = 1; n <= 5 && c.holds; ++n) {
    auto bx = standard_vars(n);
    auto bphi = weightings(b, subsets(bx), 3, {b.one()});
    for (unsigned m = 1; m <= n && c.holds; ++m) {
      auto ys = standard_vars(m);
      for (auto& y : ys) y = "y" + y;
      for (auto& f : all_maps(bx, ys)) {
        for (auto& phi : bphi) {
          ++c.instances;
          auto lhs = choice_set(fs_map(image(f), phi));
          std::vector<FinSupp> rhs;
          for (auto& p : choice_set(phi)) rhs.push_back(fs_map(f, p));
          rhs = sorted(rhs);
          if (lhs != rhs) {
            auto w = witness(phi, lhs, rhs);
            nlohmann::json fj;
            for (auto& [x, y] : f) fj[x] = y;
            w["f"] = fj;
            c.fail(w);
            c.detail = "bool, found at |X|=" + std::to_string(n) + ", |Y|=" + std::to_string(m);
            break;
          }
        }
        if (!c.holds) break;
      }
    }
  }
  if (c.holds) c.detail = "bool, no violation up to |X|=5";
  out.push_back(std::move(c));
  return out;
}

// ---- pentagon ----------------------------------------------------------------

LawReport pentagon_check(AlgebraKind kind, const Weighting<std::set<ConvexSet>>& phi) {
  Semiring sr = phi.semiring();
  auto r = report(kind == AlgebraKind::free ? "pentagon on the free delta-algebra"
                                            : "pentagon on the interval algebra");
  r.instances = 1;
  auto lhs = alpha(fs_map([&](const std::set<ConvexSet>& f) { return join_all(sr, f); }, phi));
  ConvexSet rhs = cs_empty<Symbol>(sr);
  if (sr.id() == SemiringId::qplus) {
    // a is affine for the lifted structure, so the union of a over the hull
    // δ(Φ) is the hull of the union over the choice set.
    for (auto& theta : choice_set(phi)) rhs = cs_join(rhs, alpha(theta));
  } else {
    for (auto& theta : delta_bruteforce(phi)) rhs = cs_join(rhs, alpha(theta));
  }
  if (!cs_equal(lhs, rhs)) r.fail(witness(phi, lhs, rhs));
  return r;
}

namespace {

void absorb(LawReport& total, const LawReport& one) {
  total.instances += one.instances;
  if (!one.holds) total.fail(one.witness);
}

}  // namespace

std::vector<LawReport> check_pentagon(const SuiteOptions& opt) {
  Semiring sr = opt.sr;
  std::vector<LawReport> out;
  if (sr.id() == SemiringId::nat) throw Error("the pentagon suite needs a positive semifield");

  auto free = report("pentagon on the free delta-algebra");
  if (sr.id() == SemiringId::boolean) {
    auto xs = standard_vars(opt.xsize);
    std::vector<FinSupp> points;
    for (auto& s : subsets(xs)) {
      std::vector<std::pair<Symbol, Scalar>> e;
      for (auto& x : s) e.emplace_back(x, sr.one());
      points.emplace_back(sr, std::move(e));
    }
    std::vector<ConvexSet> carrier;
    for (auto& gens : small_subsets(points, points.size()))
      carrier.push_back(ConvexSet::of(sr, {gens.begin(), gens.end()}));
    carrier = sorted(carrier);
    if (opt.xsize <= 2) {
      auto families = small_subsets(carrier, 2);
      for (auto& phi : weightings(sr, families, 2, {sr.one()})) absorb(free, pentagon_check(AlgebraKind::free, phi));
      free.detail = "exhaustive over all " + std::to_string(carrier.size()) +
                    " convex sets on |X|=" + std::to_string(opt.xsize) + ", families <= 2, supports <= 2";
    } else {
      // The exhaustive family count grows with the fourth power of the carrier.
      Random rnd(opt.seed);
      for (unsigned t = 0; t < opt.trials; ++t) {
        std::vector<std::pair<std::set<ConvexSet>, Scalar>> e;
        std::size_t n = rnd.below(3);
        for (std::size_t i = 0; i < n; ++i) {
          std::set<ConvexSet> fam;
          std::size_t k = 1 + rnd.below(2);
          for (std::size_t j = 0; j < k; ++j) fam.insert(carrier[rnd.below(carrier.size())]);
          e.emplace_back(std::move(fam), sr.one());
        }
        absorb(free, pentagon_check(AlgebraKind::free, Weighting<std::set<ConvexSet>>(sr, std::move(e))));
      }
      free.detail = std::to_string(opt.trials) + " random families over all " + std::to_string(carrier.size()) +
                    " convex sets on |X|=" + std::to_string(opt.xsize) + ", seed " + std::to_string(opt.seed);
    }
  } else {
    Random rnd(opt.seed);
    auto xs = standard_vars(opt.xsize);
    for (unsigned t = 0; t < opt.trials; ++t) {
      std::vector<std::pair<std::set<ConvexSet>, Scalar>> e;
      std::size_t n = rnd.below(3);
      for (std::size_t i = 0; i < n; ++i) {
        std::set<ConvexSet> fam;
        std::size_t k = 1 + rnd.below(2);
        for (std::size_t j = 0; j < k; ++j) fam.insert(rnd.convex(sr, xs, 2));
        e.emplace_back(std::move(fam), rnd.scalar(sr));
      }
      absorb(free, pentagon_check(AlgebraKind::free, Weighting<std::set<ConvexSet>>(sr, std::move(e))));
    }
    free.detail = std::to_string(opt.trials) + " random instances, |X|=" + std::to_string(opt.xsize) +
                  ", seed " + std::to_string(opt.seed);
  }
  out.push_back(std::move(free));

  if (sr.id() == SemiringId::qplus) {
    auto interval = report("pentagon on the interval algebra");
    Random rnd(opt.seed + 1);
    std::vector<Symbol> one{"x"};
    auto random_interval = [&]() {
      if (rnd.coin(5)) return cs_empty<Symbol>(sr);
      std::vector<FinSupp> ends;
      for (int i = 0; i < 2; ++i)
        ends.push_back(rnd.coin(10) ? FinSupp(sr) : FinSupp(sr, {{"x", rnd.scalar(sr)}}));
      return ConvexSet::of(sr, std::move(ends));
    };
    for (unsigned t = 0; t < opt.trials; ++t) {
      std::vector<std::pair<std::set<ConvexSet>, Scalar>> e;
      std::size_t n = rnd.below(3);
      for (std::size_t i = 0; i < n; ++i) {
        std::set<ConvexSet> fam;
        std::size_t k = 1 + rnd.below(2);
        for (std::size_t j = 0; j < k; ++j) fam.insert(random_interval());
        e.emplace_back(std::move(fam), rnd.scalar(sr));
      }
      absorb(interval, pentagon_check(AlgebraKind::interval, Weighting<std::set<ConvexSet>>(sr, std::move(e))));
    }
    interval.detail = std::to_string(opt.trials) + " random instances on one variable";
    out.push_back(std::move(interval));

    // Sum rule [a1,b1] + [a2,b2] = [a1+a2, b1+b2] through both legs.
    auto sum_rule = report("interval sum rule through the pentagon");
    for (unsigned t = 0; t < opt.trials; ++t) {
      Scalar a1 = rnd.scalar(sr), b1 = sr.add(a1, rnd.scalar(sr));
      Scalar a2 = rnd.scalar(sr), b2 = sr.add(a2, rnd.scalar(sr));
      auto iv = [&](const Scalar& lo, const Scalar& hi) {
        return ConvexSet::of(sr, {FinSupp(sr, {{"x", lo}}), FinSupp(sr, {{"x", hi}})});
      };
      Weighting<std::set<ConvexSet>> phi(sr, {{{iv(a1, b1)}, sr.one()}, {{iv(a2, b2)}, sr.one()}});
      ++sum_rule.instances;
      auto lhs = alpha(fs_map([&](const std::set<ConvexSet>& f) { return join_all(sr, f); }, phi));
      Interval want{false, sr.add(a1, a2), sr.add(b1, b2)};
      auto got = render_interval(lhs, "x");
      if (!(got == want) || !pentagon_check(AlgebraKind::interval, phi).holds)
        sum_rule.fail({{"input", describe(phi)}, {"got", to_string(got)}, {"want", to_string(want)}});
    }
    out.push_back(std::move(sum_rule));
  }
  return out;
}

// ---- the non-monotone extension ------------------------------------------------

std::vector<LawReport> check_appendix_a(const SuiteOptions&) {
  std::vector<LawReport> out;

  {
    auto r = report("E is not monotone: R subset S but E(R)({0}) != E(S)({0})", false);
    Relation rr{{"0"}, {"1", "2"}, {{"0", "1"}}};
    Relation ss{{"0"}, {"1", "2"}, {{"0", "1"}, {"0", "2"}}};
    auto er = trivialE_extend(rr)({"0"});
    auto es = trivialE_extend(ss)({"0"});
    r.instances = 1;
    if (er != es) r.fail(witness(SymbolSet{"0"}, er, es));
    out.push_back(std::move(r));
  }

  auto xs = standard_vars(2);
  auto ys = standard_vars(2);
  for (auto& y : ys) y = "y" + y;
  std::vector<std::pair<Symbol, Symbol>> all_pairs;
  for (auto& x : xs)
    for (auto& y : ys) all_pairs.emplace_back(x, y);
  std::vector<Relation> relations;
  for (std::size_t mask = 0; mask < (std::size_t{1} << all_pairs.size()); ++mask) {
    Relation rel{{xs.begin(), xs.end()}, {ys.begin(), ys.end()}, {}};
    for (std::size_t i = 0; i < all_pairs.size(); ++i)
      if (mask >> i & 1) rel.pairs.insert(all_pairs[i]);
    relations.push_back(std::move(rel));
  }

  {
    auto r = report("unit extends along R exactly when R is a function");
    for (auto& rel : relations) {
      ++r.instances;
      auto e = trivialE_extend(rel);
      // Upper leg relates x to E(R)({x}); lower leg relates x to {y} for x R y.
      std::set<std::pair<Symbol, SymbolSet>> upper, lower;
      for (auto& x : xs) upper.emplace(x, e({x}));
      for (auto& [x, y] : rel.pairs) lower.emplace(x, SymbolSet{y});
      if ((upper == lower) != rel.is_function())
        r.fail(witness(rel.pairs, upper, lower));
    }
    r.detail = "all relations between 2-element sets";
    out.push_back(std::move(r));
  }
  {
    auto r = report("multiplication is natural for E");
    auto families = small_subsets(subsets(xs), 4);
    for (auto& rel : relations) {
      auto e = trivialE_extend(rel);
      for (auto& fam : families) {
        ++r.instances;
        auto lhs = e(union_of(fam));
        SymbolSet rhs;
        for (auto& a : fam) {
          auto part = e(a);
          rhs.insert(part.begin(), part.end());
        }
        if (lhs != rhs) r.fail(witness(fam, lhs, rhs));
      }
    }
    r.detail = "all relations between 2-element sets, all families";
    out.push_back(std::move(r));
  }
  {
    auto r = report("induced weak law is E(ni)(A) = {union A}");
    auto x3 = standard_vars(3);
    Relation ni;
    auto px = subsets(x3);
    for (auto& a : px) ni.domain.insert(to_string(a));
    ni.codomain = {x3.begin(), x3.end()};
    for (auto& a : px)
      for (auto& x : a) ni.pairs.emplace(to_string(a), x);
    auto e = trivialE_extend(ni);
    for (auto& fam : small_subsets(px, 3)) {
      ++r.instances;
      SymbolSet names;
      for (auto& a : fam) names.insert(to_string(a));
      auto lhs = powerset_delta(fam);
      std::set<SymbolSet> rhs{e(names)};
      if (lhs != rhs) r.fail(witness(fam, lhs, rhs));
    }
    r.detail = "|X|=3, families of up to 3 subsets";
    out.push_back(std::move(r));
  }
  {
    auto r = report("dropped unit triangle for the weak law P P -> P P", false);
    for (auto& b : subsets(xs)) {
      ++r.instances;
      auto lhs = powerset_delta({b});
      std::set<SymbolSet> rhs;
      for (auto& x : b) rhs.insert({x});
      if (lhs != rhs) r.fail(witness(b, lhs, rhs));
    }
    out.push_back(std::move(r));
  }
  {
    // Complete semilattices given by chains 0 < 1 < ... < n-1. The idempotent
    // A ↦ {a(A)} fixes exactly the singletons.
    auto r = report("lifting idempotent fixes exactly the singletons");
    for (unsigned n = 1; n <= 3; ++n) {
      std::vector<Symbol> chain;
      for (unsigned i = 0; i < n; ++i) chain.push_back(std::to_string(i));
      for (auto& a : subsets(chain)) {
        ++r.instances;
        // P(a) ∘ δ ∘ η with a = max, a(∅) = 0 (digit symbols sort numerically here)
        SymbolSet e;
        for (auto& u : powerset_delta({a})) e.insert(u.empty() ? chain.front() : *u.rbegin());
        bool fixed = e == a;
        if (fixed != (a.size() == 1)) r.fail(witness(a, e, a));
      }
    }
    r.detail = "chains of size 1..3";
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace convexmod
