#include "doctest.h"

#include "convexmod/composite.hpp"
#include "oracles.hpp"

using namespace convexmod;

namespace {

const Semiring Q = Semiring::qplus();

FinSupp fs(std::vector<std::pair<Symbol, Scalar>> e, Semiring sr = Q) { return FinSupp(sr, std::move(e)); }

ConvexSet interval(long lo, long hi, const Symbol& x = "x") {
  return ConvexSet::of(Q, {fs({{x, Scalar(lo)}}), fs({{x, Scalar(hi)}})});
}

KleisliArrow arrow(std::vector<Symbol> in, std::vector<Symbol> out, std::map<Symbol, ConvexSet> table) {
  KleisliArrow f{Q, std::move(in), std::move(out), std::move(table)};
  f.validate();
  return f;
}

}  // namespace

TEST_CASE("alpha") {
  auto a = ConvexSet::of(Q, {fs({{"x", Scalar(1)}}), fs({{"y", Scalar(2)}})});
  auto b = interval(1, 3, "z");
  CHECK(alpha(ConvexFamilyWeighting(Q, {{a, Scalar(3)}})) == cs_scale(Scalar(3), a));
  CHECK(alpha(ConvexFamilyWeighting(Q, {{a, Scalar(1)}, {b, Scalar(1)}})) == cs_add(a, b));
  CHECK(alpha(ConvexFamilyWeighting(Q, {})) == cs_zero<Symbol>(Q));
  CHECK(alpha(ConvexFamilyWeighting(Q, {{cs_empty<Symbol>(Q), Scalar(1)}, {a, Scalar(1)}})).empty());
  CHECK_THROWS_WITH(alpha(ConvexFamilyWeighting(Semiring::nat(), {})), "alpha needs a positive semifield");
}

TEST_CASE("multiplication") {
  auto a = interval(2, 4);
  CHECK(pc_mult(Hull<ConvexSet>::singleton(fs_unit(Q, a))) == a);
  CHECK(pc_mult(pc_unit(Q, a)) == a);
  CHECK(pc_mult(cs_empty<ConvexSet>(Q)).empty());
  // Θ₁ = ([1,2]↦1), Θ₂ = ([5,6]↦1): hull of [1,2] ∪ [5,6] is [1,6].
  ConvexFamilyWeighting t1(Q, {{interval(1, 2), Scalar(1)}}), t2(Q, {{interval(5, 6), Scalar(1)}});
  CHECK(pc_mult(Hull<ConvexSet>::of(Q, {t1, t2})) == interval(1, 6));
  // Left unit on the outer level.
  auto inner = Hull<ConvexSet>::of(Q, {t1, ConvexFamilyWeighting(Q, {{interval(0, 1), Scalar(2)}})});
  CHECK(pc_mult(pc_mult(Hull<Hull<ConvexSet>>::singleton(fs_unit(Q, inner)))) == pc_mult(inner));
  CHECK(pc_map(SymbolMap{{"x", "x"}}, a) == a);
}

TEST_CASE("image of the non-naturality example") {
  auto a = ConvexSet::of(Q, {fs({{"x", Scalar(1, 2)}, {"y", Scalar(1, 2)}}),
                             fs({{"x", Scalar(1, 2)}, {"z", Scalar(1, 2)}}), fs({{"z", Scalar(1)}})});
  auto fa = pc_map(SymbolMap{{"x", "u"}, {"y", "u"}, {"z", "v"}}, a);
  CHECK(fa == ConvexSet::of(Q, {fs({{"u", Scalar(1)}}), fs({{"v", Scalar(1)}})}));
  CHECK(member(fa, fs({{"u", Scalar(1, 2)}, {"v", Scalar(1, 2)}})));
}

TEST_CASE("kleisli composition") {
  auto f = arrow({"x"}, {"y"}, {{"x", ConvexSet::of(Q, {fs({{"y", Scalar(1)}}), fs({{"y", Scalar(2)}})})}});
  auto g = arrow({"y"}, {"z"}, {{"y", interval(3, 4, "z")}});
  auto h = kleisli_compose(f, g);
  CHECK(h("x") == interval(3, 8, "z"));
  CHECK(kleisli_compose_via_mult(f, g) == h);
  CHECK(kleisli_compose(kleisli_identity(Q, {"x"}), f) == f);
  CHECK(kleisli_compose(f, kleisli_identity(Q, {"y"})) == f);
  auto empty = arrow({"x"}, {"y"}, {{"x", cs_empty<Symbol>(Q)}});
  CHECK(kleisli_compose(empty, g)("x").empty());
  CHECK_THROWS_WITH(kleisli_compose(g, g), "kleisli arrows do not compose: variable mismatch");
}

TEST_CASE("bottom after an arrow") {
  auto bot = kleisli_bottom(Q, {"y"}, {"z"});
  auto f = arrow({"x", "w"}, {"y"}, {{"x", interval(1, 2, "y")}, {"w", cs_join(interval(1, 1, "y"), cs_zero<Symbol>(Q))}});
  auto h = kleisli_compose(f, bot);
  CHECK(h("x").empty());
  // The zero function contributes an empty sum, so ε survives.
  CHECK(h("w") == cs_zero<Symbol>(Q));
}

TEST_CASE("monad laws on random qplus instances") {
  oracle::Gen g(21);
  std::vector<Symbol> xs{"x", "y", "z"};
  auto family = [&](std::size_t max_sets) {
    std::vector<std::pair<ConvexSet, Scalar>> e;
    std::size_t n = g.below(max_sets + 1);
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(g.convex(Q, xs, 2), g.scalar(Q));
    return ConvexFamilyWeighting(Q, std::move(e));
  };
  for (int t = 0; t < 40; ++t) {
    auto a = g.convex(Q, xs, 3);
    CHECK(pc_mult(pc_unit(Q, a)) == a);
    CHECK(pc_mult(pc_map([](const Symbol& x) { return pc_unit(Q, x); }, a)) == a);

    std::vector<Weighting<Hull<ConvexSet>>> outer_gens;
    for (std::size_t i = 0, n = 1 + g.below(2); i < n; ++i) {
      std::vector<FamilyWeighting<Symbol>> mids;
      for (std::size_t j = 0, m = 1 + g.below(2); j < m; ++j) mids.push_back(family(2));
      outer_gens.emplace_back(Q, std::vector<std::pair<Hull<ConvexSet>, Scalar>>{
                                     {Hull<ConvexSet>::of(Q, mids), g.scalar(Q)}});
    }
    auto big = Hull<Hull<ConvexSet>>::of(Q, outer_gens);
    auto lhs = pc_mult(pc_mult(big));
    auto rhs = pc_mult(pc_map([](const Hull<ConvexSet>& s) { return pc_mult(s); }, big));
    CHECK(cs_equal(lhs, rhs));
  }
}

TEST_CASE("join distributes over composition") {
  oracle::Gen g(22);
  std::vector<Symbol> ys{"p", "q"};
  auto random_arrow = [&](std::vector<Symbol> in, std::vector<Symbol> out) {
    std::map<Symbol, ConvexSet> t;
    for (auto& x : in) t.emplace(x, g.convex(Q, out, 2));
    return arrow(in, out, t);
  };
  for (int t = 0; t < 30; ++t) {
    auto f = random_arrow({"x"}, ys), g1 = random_arrow(ys, {"u", "v"}), g2 = random_arrow(ys, {"u", "v"});
    auto f2 = random_arrow({"x"}, ys);
    CHECK(kleisli_compose(kleisli_join(f, f2), g1) == kleisli_join(kleisli_compose(f, g1), kleisli_compose(f2, g1)));
    // Joining the second arrow only gives an inclusion: sums pick from g1 and
    // g2 independently at each point of the support.
    auto wide = kleisli_compose(f, kleisli_join(g1, g2));
    auto narrow = kleisli_join(kleisli_compose(f, g1), kleisli_compose(f, g2));
    CHECK(cs_subset(narrow("x"), wide("x")));
    CHECK(kleisli_compose_via_mult(f, g1) == kleisli_compose(f, g1));
  }
}

TEST_CASE("joining the second arrow can enlarge the composite") {
  auto unit = [](const Symbol& y) { return ConvexSet::of(Q, {fs({{y, Scalar(1)}})}); };
  auto f = arrow({"x"}, {"p", "q"}, {{"x", ConvexSet::of(Q, {fs({{"p", Scalar(1)}, {"q", Scalar(1)}})})}});
  auto g1 = arrow({"p", "q"}, {"u", "v", "w"}, {{"p", unit("u")}, {"q", unit("u")}});
  auto g2 = arrow({"p", "q"}, {"u", "v", "w"}, {{"p", unit("v")}, {"q", unit("w")}});
  auto wide = kleisli_compose(f, kleisli_join(g1, g2));
  auto narrow = kleisli_join(kleisli_compose(f, g1), kleisli_compose(f, g2));
  auto mixed = fs({{"u", Scalar(1)}, {"w", Scalar(1)}});
  CHECK(member(wide("x"), mixed));
  CHECK_FALSE(member(narrow("x"), mixed));
}
