#include "doctest.h"

#include "convexmod/terms.hpp"
#include "oracles.hpp"

using namespace convexmod;

namespace {

const Semiring Q = Semiring::qplus();

FinSupp fs(std::vector<std::pair<Symbol, Scalar>> e, Semiring sr = Q) { return FinSupp(sr, std::move(e)); }

ConvexSet ev(const std::string& t, const SymbolSet& vars, Semiring sr = Q) {
  return eval(parse_term(t, sr), sr, vars);
}

bool eq(const std::string& a, const std::string& b, const SymbolSet& vars, Semiring sr = Q) {
  return term_equal(parse_term(a, sr), parse_term(b, sr), sr, vars);
}

}  // namespace

TEST_CASE("parsing") {
  using K = Term::Kind;
  auto t = parse_term("x | y", Q);
  CHECK(t->kind == K::join);
  CHECK(t->lhs->name == "x");
  auto s = parse_term("1/2.x + 1/2.y", Q);
  CHECK(s->kind == K::add);
  CHECK(s->lhs->kind == K::scale);
  CHECK(s->lhs->scalar == Scalar(1, 2));
  auto tri = parse_term("x1 | x2 | (x1 + 3.x2)", Q);
  CHECK(tri->kind == K::join);
  CHECK(tri->lhs->kind == K::join);
  CHECK(tri->rhs->kind == K::add);
  CHECK(tri->rhs->rhs->scalar == Scalar(3));
  CHECK(parse_term("a + b + c", Q)->lhs->kind == K::add);
  CHECK(parse_term("2.3.x", Q)->lhs->kind == K::scale);
  CHECK(parse_term("bot", Q)->kind == K::bot);
  CHECK(parse_term("0", Q)->kind == K::zero);
  CHECK(parse_term("0.x", Q)->kind == K::scale);
  CHECK(parse_term("bot_1", Q)->kind == K::var);
  CHECK(parse_term("1.x", Semiring::boolean())->scalar == Scalar(1));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_term("x |", Q), ParseError);
  CHECK_THROWS_AS(parse_term("(x", Q), ParseError);
  CHECK_THROWS_AS(parse_term("3", Q), ParseError);
  CHECK_THROWS_AS(parse_term("x y", Q), ParseError);
  CHECK_THROWS_AS(parse_term("2.x", Semiring::boolean()), Error);
  CHECK_THROWS_AS(parse_term("1/2.x", Semiring::nat()), Error);
  CHECK_THROWS_WITH(parse_term("x + ", Q), doctest::Contains("position 4"));
}

TEST_CASE("printing round-trips") {
  for (auto s : {"x | y", "1/2.x + 1/2.y", "x1 | x2 | (x1 + 3.x2)", "(x | y) + z", "2.(x | y)", "2.3.x", "bot | 0",
                 "x | (y | z)", "x + (y + z)"}) {
    auto t = parse_term(s, Q);
    CHECK(structurally_equal(parse_term(print_term(t), Q), t));
  }
  CHECK(print_term(parse_term("(x|y)|z", Q)) == "x | y | z");
  CHECK(print_term(parse_term("x|(y|z)", Q)) == "x | (y | z)");
  CHECK(print_term(parse_term("4/2.x", Q)) == "2.x");
  oracle::Gen g(31);
  for (int i = 0; i < 300; ++i) {
    auto t = g.term(Q, {"x", "y"}, 4);
    CHECK(structurally_equal(parse_term(print_term(t), Q), t));
  }
}

TEST_CASE("evaluation") {
  CHECK(ev("2.x | 5.x", {"x"}).generators() == std::vector<FinSupp>{fs({{"x", Scalar(2)}}), fs({{"x", Scalar(5)}})});
  CHECK(ev("bot", {}).empty());
  CHECK(ev("0", {}) == cs_zero<Symbol>(Q));
  CHECK(ev("0.bot", {}) == cs_zero<Symbol>(Q));
  auto tri = ev("x | y | (x + 3.y)", {"x", "y"});
  std::vector<FinSupp> expect{fs({{"x", Scalar(1)}}), fs({{"y", Scalar(1)}}), fs({{"x", Scalar(1)}, {"y", Scalar(3)}})};
  std::sort(expect.begin(), expect.end());
  CHECK(tri.generators() == expect);
  CHECK_THROWS_WITH(ev("x | z", {"x"}), "unbound variable 'z'");
  CHECK(free_variables(parse_term("x | 2.(y + x)", Q)) == SymbolSet{"x", "y"});
}

TEST_CASE("term equality") {
  CHECK(eq("x | y", "x | y | (1/2.x + 1/2.y)", {"x", "y"}));
  CHECK(eq("x + bot", "bot", {"x"}));
  CHECK_FALSE(eq("x", "y", {"x", "y"}));
  CHECK(eq("x | y", "y | x", {"x", "y"}, Semiring::boolean()));
  CHECK(eq("x | y", "x | y | (x + y)", {"x", "y"}, Semiring::boolean()));
  CHECK_FALSE(eq("x | y", "x | y | (x + y)", {"x", "y"}, Semiring::nat()));
}

TEST_CASE("axioms are sound") {
  // Each schema as a pair of templates in a, b, c, with scalars l, m.
  struct Axiom {
    const char* lhs;
    const char* rhs;
    bool nonzero = false;
  };
  std::vector<Axiom> axioms{
      {"(A | B) | C", "A | (B | C)"}, {"A | B", "B | A"},         {"A | bot", "A"},
      {"A | A", "A"},                 {"(A + B) + C", "A + (B + C)"}, {"A + B", "B + A"},
      {"A + 0", "A"},                 {"L.0", "0"},               {"0.A", "0"},
      {"1.A", "A"},                   {"LM.A", "L.(M.A)"},        {"L.(A + B)", "L.A + L.B"},
      {"LPM.A", "L.A + M.A"},         {"L.bot", "bot", true},     {"A + bot", "bot"},
      {"L.(A | B)", "L.A | L.B"},     {"A + (B | C)", "(A + B) | (A + C)"},
  };
  oracle::Gen g(41);
  std::vector<Symbol> xs{"x", "y"};
  auto subst = [&](std::string s, const std::map<char, std::string>& env) {
    std::string out;
    for (char ch : s) {
      auto it = env.find(ch);
      out += it == env.end() ? std::string(1, ch) : it->second;
    }
    return out;
  };
  for (auto& ax : axioms) {
    for (int t = 0; t < 25; ++t) {
      Scalar l = g.coin(15) && !ax.nonzero ? Scalar(0) : g.scalar(Q), m = g.scalar(Q);
      std::map<char, std::string> env{
          {'A', "(" + print_term(g.term(Q, xs, 3)) + ")"},
          {'B', "(" + print_term(g.term(Q, xs, 3)) + ")"},
          {'C', "(" + print_term(g.term(Q, xs, 3)) + ")"},
          {'L', l.str()},
          {'M', m.str()},
      };
      std::string lhs = ax.lhs, rhs = ax.rhs;
      if (lhs == "LM.A") lhs = Q.mul(l, m).str() + ".A";
      if (lhs == "LPM.A") lhs = Q.add(l, m).str() + ".A";
      auto a = subst(lhs, env), b = subst(rhs, env);
      INFO(a, "  =  ", b);
      CHECK(eq(a, b, {"x", "y"}));
    }
  }
}

TEST_CASE("every canonical set is denoted by a term") {
  oracle::Gen g(51);
  std::vector<Symbol> xs{"x", "y", "z"};
  for (auto sr : {Semiring::qplus(), Semiring::boolean()}) {
    for (int t = 0; t < 80; ++t) {
      auto a = g.convex(sr, xs, 4);
      auto term = synthesize(a);
      CHECK(eval(term, sr, {"x", "y", "z"}) == a);
      CHECK(eval(parse_term(print_term(term), sr), sr, {"x", "y", "z"}) == a);
    }
  }
  CHECK(print_term(synthesize(cs_empty<Symbol>(Q))) == "bot");
  CHECK(print_term(synthesize(cs_zero<Symbol>(Q))) == "0");
}

TEST_CASE("intervals follow the case analysis") {
  CHECK(render_interval(ev("1.x | 5.x", {"x"}), "x") == Interval{false, Scalar(1), Scalar(5)});
  CHECK(render_interval(ev("(1.x | 2.x) + (5.x | 6.x)", {"x"}), "x") == Interval{false, Scalar(6), Scalar(8)});
  CHECK(to_string(render_interval(ev("bot", {"x"}), "x")) == "empty");
  CHECK(to_string(render_interval(ev("0 | 3.x", {"x"}), "x")) == "[0, 3]");
  oracle::Gen g(61);
  for (int t = 0; t < 400; ++t) {
    auto term = g.term(Q, {"x"}, 4);
    auto expect = oracle::interval_of(term);
    auto got = render_interval(eval(term, Q, {"x"}), "x");
    INFO(print_term(term));
    CHECK(got.empty == !expect.has_value());
    if (expect) {
      CHECK(got.lo.value() == expect->first);
      CHECK(got.hi.value() == expect->second);
    }
  }
  CHECK_THROWS_WITH(render_interval(ev("x | y", {"x", "y"}), "x"), doctest::Contains("wrong dimension"));
  CHECK_THROWS_WITH(render_interval(ev("x", {"x"}, Semiring::boolean()), "x"), "rendering needs the qplus semiring");
}

TEST_CASE("polygons") {
  auto seg = render_polygon(ev("x1 | x2", {"x1", "x2"}), "x1", "x2");
  CHECK(seg == std::vector<Vertex>{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}});
  auto tri = render_polygon(ev("x | y | (x + 3.y)", {"x", "y"}), "x", "y");
  REQUIRE(tri.size() == 3);
  // Counterclockwise: positive signed area.
  Rational area = 0;
  for (std::size_t i = 0; i < tri.size(); ++i) {
    auto& [x0, y0] = tri[i];
    auto& [x1, y1] = tri[(i + 1) % tri.size()];
    area += x0.value() * y1.value() - x1.value() * y0.value();
  }
  CHECK(area > 0);
  auto square = render_polygon(ev("0 | x | y | (x + y) | (1/2.x + 1/2.y)", {"x", "y"}), "x", "y");
  CHECK(square.size() == 4);
  CHECK_THROWS_WITH(render_polygon(ev("x | z", {"x", "z"}), "x", "y"), doctest::Contains("wrong dimension"));
}
