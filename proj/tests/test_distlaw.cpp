#include "doctest.h"

#include "convexmod/distlaw.hpp"
#include "oracles.hpp"

using namespace convexmod;

namespace {

FinSupp fs(std::vector<std::pair<Symbol, Scalar>> e, Semiring sr = Semiring::qplus()) {
  return FinSupp(sr, std::move(e));
}

SetWeighting example_phi(Semiring sr) {
  return SetWeighting(sr, {{{"x", "y"}, Scalar(5)}, {{"y", "z"}, Scalar(9)}, {{"a", "b"}, Scalar(13)}});
}

MembershipWeighting example_psi(Semiring sr) {
  return MembershipWeighting(sr, {{{{"x", "y"}, "x"}, Scalar(2)},
                                  {{{"x", "y"}, "y"}, Scalar(3)},
                                  {{{"y", "z"}, "y"}, Scalar(4)},
                                  {{{"y", "z"}, "z"}, Scalar(5)},
                                  {{{"a", "b"}, "a"}, Scalar(6)},
                                  {{{"a", "b"}, "b"}, Scalar(7)}});
}

FinSupp example_point(Semiring sr) {
  return fs({{"x", Scalar(2)}, {"y", Scalar(7)}, {"z", Scalar(5)}, {"a", Scalar(6)}, {"b", Scalar(7)}}, sr);
}

// All subsets of xs, as SymbolSets.
std::vector<SymbolSet> subsets(const std::vector<Symbol>& xs) {
  std::vector<SymbolSet> out;
  for (std::size_t m = 0; m < (std::size_t{1} << xs.size()); ++m) {
    SymbolSet s;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (m >> i & 1) s.insert(xs[i]);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("choice set of the four-function example") {
  auto q = Semiring::qplus();
  SetWeighting phi(q, {{{"x", "y"}, Scalar(1)}, {{"y", "z"}, Scalar(2)}});
  auto c = choice_set(phi);
  std::vector<FinSupp> expect{fs({{"x", Scalar(1)}, {"y", Scalar(2)}}), fs({{"x", Scalar(1)}, {"z", Scalar(2)}}),
                              fs({{"y", Scalar(3)}}), fs({{"y", Scalar(1)}, {"z", Scalar(2)}})};
  std::sort(expect.begin(), expect.end());
  CHECK(c == expect);
  auto mid = fs({{"x", Scalar(1)}, {"y", Scalar(1)}, {"z", Scalar(1)}});
  CHECK(member(delta_hull(phi), mid));
  CHECK_FALSE(std::binary_search(c.begin(), c.end(), mid));

  CHECK(choice_set(SetWeighting(q, {{{}, Scalar(1)}, {{"x"}, Scalar(1)}})).empty());
  CHECK(choice_set(SetWeighting(q, {})) == std::vector<FinSupp>{fs({})});
}

TEST_CASE("delta over qplus") {
  auto q = Semiring::qplus();
  auto phi = example_phi(q);
  CHECK(member(delta_hull(phi), example_point(q)));
  CHECK(delta_witness_check(phi, example_point(q), example_psi(q)));
  // δ(Δ_A) is the simplex on A.
  auto simplex = delta_hull(SetWeighting(q, {{{"x", "y", "z"}, Scalar(1)}}));
  CHECK(simplex == ConvexSet::of(q, {fs({{"x", Scalar(1)}}), fs({{"y", Scalar(1)}}), fs({{"z", Scalar(1)}})}));
  CHECK(delta_hull(SetWeighting(q, {})) == cs_zero<Symbol>(q));
  CHECK(delta_hull(SetWeighting(q, {{{}, Scalar(2)}})).empty());
  CHECK_THROWS_WITH(delta_hull(SetWeighting(Semiring::nat(), {})), "not a semifield; use brute force");
  CHECK_THROWS(delta_bruteforce(phi));
}

TEST_CASE("witness check rejects perturbations") {
  auto q = Semiring::qplus();
  auto phi = example_phi(q);
  auto psi = example_psi(q);
  auto e = psi.entries();
  e[0].second = Scalar(3);
  CHECK_FALSE(delta_witness_check(phi, example_point(q), MembershipWeighting(q, e)));
  // Wrong point for a valid ψ.
  CHECK_FALSE(delta_witness_check(phi, fs({{"x", Scalar(2)}}), psi));
  // A pair (A, x) with x ∉ A.
  auto bad = psi.entries();
  bad.push_back({{{"x", "y"}, "z"}, Scalar(1)});
  CHECK_FALSE(delta_witness_check(phi, example_point(q), MembershipWeighting(q, bad)));
  CHECK(delta_witness_check(SetWeighting(q, {}), fs({}), MembershipWeighting(q, {})));
}

TEST_CASE("convex decomposition") {
  auto q = Semiring::qplus();
  auto phi = example_phi(q);
  auto big = convex_decomposition(phi, example_psi(q));
  CHECK(fs_mult(big) == example_point(q));
  Rational total = 0;
  auto c = choice_set(phi);
  for (auto& [chi, w] : big) {
    total += w.value();
    CHECK(std::binary_search(c.begin(), c.end(), chi));
  }
  CHECK(total == 1);
  // One of the eight coefficients, by hand: u = (x, y, a) has 2·4·6/(5·9·13).
  auto u = fs({{"x", Scalar(5)}, {"y", Scalar(9)}, {"a", Scalar(13)}});
  CHECK(big(u) == Scalar(48, 585));
}

TEST_CASE("brute force over bool") {
  auto b = Semiring::boolean();
  SetWeighting phi(b, {{{"p", "q"}, Scalar(1)}});
  std::vector<FinSupp> expect{oracle::bool_point({"p"}), oracle::bool_point({"p", "q"}), oracle::bool_point({"q"})};
  std::sort(expect.begin(), expect.end());
  CHECK(delta_bruteforce(phi) == expect);
  CHECK(delta_bruteforce(SetWeighting(b, {{{}, Scalar(1)}})).empty());
}

TEST_CASE("hull form agrees with the definition over bool") {
  auto b = Semiring::boolean();
  std::vector<Symbol> xs{"p", "q", "r"};
  auto sets = subsets(xs);
  int n = 0;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i; j < sets.size(); ++j) {
      SetWeighting phi(b, {{sets[i], Scalar(1)}, {sets[j], Scalar(1)}});
      auto hull = delta_hull(phi);
      auto bf = delta_bruteforce(phi);
      for (auto& s : sets) {
        bool in_bf = std::binary_search(bf.begin(), bf.end(), oracle::bool_point(s));
        CHECK(member(hull, oracle::bool_point(s)) == in_bf);
      }
      ++n;
    }
  CHECK(n == 36);
}

TEST_CASE("brute force over nat is larger than the choice set") {
  auto n = Semiring::nat();
  auto phi = example_phi(n);
  auto bf = delta_bruteforce(phi);
  auto c = choice_set(phi);
  CHECK(bf.size() == 6 * 10 * 14 - 0);
  CHECK(c.size() == 8);
  CHECK(std::includes(bf.begin(), bf.end(), c.begin(), c.end()));
  CHECK(std::binary_search(bf.begin(), bf.end(), example_point(n)));
  CHECK_FALSE(std::binary_search(c.begin(), c.end(), example_point(n)));
  CHECK(delta_witness_check(phi, example_point(n), example_psi(n)));
  CHECK_THROWS(delta_bruteforce(phi, 10));
}

TEST_CASE("relations") {
  Relation r{{"0"}, {"1", "2"}, {{"0", "1"}}};
  Relation s{{"0"}, {"1", "2"}, {{"0", "1"}, {"0", "2"}}};
  CHECK(trivialE_extend(r)({"0"}) == SymbolSet{"1"});
  CHECK(trivialE_extend(s)({"0"}) == SymbolSet{"1", "2"});
  CHECK(r.is_function());
  CHECK_FALSE(s.is_function());
  CHECK_THROWS((Relation{{"0"}, {"1"}, {{"0", "3"}}}.validate()));

  auto q = Semiring::nat();
  auto g = Relation::graph({"a", "b"}, {"u"}, {{"a", "u"}, {"b", "u"}});
  auto ext = barr_extend(g, q, 2);
  for (auto& [l, rr] : ext) CHECK(fs_map(SymbolMap{{"a", "u"}, {"b", "u"}}, l) == rr);
  CHECK(ext.size() == 9);
  CHECK(powerset_delta({{"p"}, {"q", "r"}}) == std::set<SymbolSet>{{"p", "q", "r"}});
  CHECK(powerset_delta({}) == std::set<SymbolSet>{{}});
}
