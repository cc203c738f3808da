#include "doctest.h"

#include "convexmod/json_io.hpp"

using namespace convexmod;

TEST_CASE("scalars") {
  CHECK(scalar_to_json(Semiring::boolean(), Scalar(1)) == json(true));
  CHECK(scalar_to_json(Semiring::nat(), Scalar(4)) == json(4));
  CHECK(scalar_to_json(Semiring::qplus(), Scalar(2, 6)) == json("1/3"));
  CHECK(scalar_from_json(Semiring::qplus(), json("5")) == Scalar(5));
  CHECK(scalar_from_json(Semiring::qplus(), json(3)) == Scalar(3));
  CHECK(scalar_from_json(Semiring::boolean(), json(false)) == Scalar(0));
  CHECK_THROWS(scalar_from_json(Semiring::nat(), json(-1)));
  CHECK_THROWS(scalar_from_json(Semiring::nat(), json(1.5)));
}

TEST_CASE("round trips") {
  auto q = Semiring::qplus();
  auto a = ConvexSet::of(q, {FinSupp(q, {{"x", Scalar(1, 2)}}), FinSupp(q, {{"y", Scalar(2)}})});
  CHECK(convex_from_json(convex_to_json(a)) == a);
  CHECK(convex_to_json(a).dump() == R"({"generators":[{"x":"1/2"},{"y":"2"}],"semiring":"qplus"})");
  SetWeighting phi(q, {{{"x", "y"}, Scalar(5)}, {{"y", "z"}, Scalar(9)}});
  CHECK(set_weighting_from_json(q, set_weighting_to_json(phi)) == phi);
  auto parsed = set_weighting_from_json(q, json::parse(R"({"weights": [{"set": ["x","y"], "value": "5"}]})"));
  CHECK(parsed(SymbolSet{"x", "y"}) == Scalar(5));
  KleisliArrow f{q, {"x"}, {"y"}, {{"x", ConvexSet::of(q, {FinSupp(q, {{"y", Scalar(1)}})})}}};
  CHECK(arrow_from_json(arrow_to_json(f)) == f);
  CHECK_THROWS(convex_from_json(json::parse("[]")));
  CHECK_THROWS(set_weighting_from_json(q, json::parse("{}")));
}

TEST_CASE("csv") {
  auto q = Semiring::qplus();
  auto a = ConvexSet::of(q, {FinSupp(q, {{"x", Scalar(1, 2)}}), FinSupp(q, {{"y", Scalar(2)}})});
  CHECK(convex_to_csv(a, {"y", "x"}) == "x,y\n1/2,0\n0,2\n");
  CHECK_THROWS(convex_to_csv(a, {"x"}));
}
