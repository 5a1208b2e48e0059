#include <doctest.h>

#include <functional>

#include "klsc/errors.hpp"
#include "klsc/io.hpp"

using namespace klsc;
using io::Json;

namespace {

std::string where_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.where();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(io::parse_rational(Json(3), "x") == Rational(3));
  CHECK(io::parse_rational(Json("6/-4"), "x") == Rational(-3, 2));
  CHECK(where_of([] { io::parse_rational(Json("1/0"), "m[0]"); }) == "m[0]");
  CHECK(where_of([] { io::parse_rational(Json(1.5), "m[1]"); }) == "m[1]");
}

TEST_CASE("matroid documents") {
  Matroid a = io::matroid_from_json(Json::parse(R"({"ground_set": 4, "bases": [[0,1,2],[0,1,3],[0,2,3],[1,2,3]]})"));
  Matroid b = io::matroid_from_json(Json::parse(R"({"uniform": [3, 4]})"));
  Matroid c = io::matroid_from_json(Json::parse(R"({"matrix": [[1,0,0,1],[0,1,0,"1/2"],[0,0,1,-1]]})"));
  Matroid d = io::matroid_from_json(Json::parse(
      R"({"flats": [{"set": [], "rank": 0}, {"set": [0], "rank": 1}, {"set": [1], "rank": 1}, {"set": [0,1], "rank": 2}]})"));
  for (const Matroid* m : {&b, &c}) {
    REQUIRE(m->flats().size() == a.flats().size());
    for (std::size_t i = 0; i < a.flats().size(); ++i) CHECK(m->flats()[i].set == a.flats()[i].set);
  }
  CHECK(d.flats().size() == 4);
  CHECK(where_of([] { io::matroid_from_json(Json::parse(R"({"ground_set": 2, "bases": [[0], [3]]})")); }) == "bases[1][0]");
  CHECK(where_of([] { io::matroid_from_json(Json::parse(R"({"bases": [[0]]})")); }) == "ground_set");
  CHECK(where_of([] { io::matroid_from_json(Json::parse(R"({"flats": [{"set": [0]}]})")); }) == "flats[0].rank");
  CHECK(where_of([] { io::matroid_from_json(Json::parse(R"({"matrix": [[1, 2], [3]]})")); }) == "matrix[1]");
}

TEST_CASE("fan documents") {
  Fan p = io::fan_from_json(Json::parse(R"({"polytope_vertices": [[]]})"));
  CHECK(p.max_cone_count() == 1);
  Fan q = io::fan_from_json(Json::parse(R"({"dim": 2, "rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[2,0]]})"));
  CHECK(q.size() == 7);
  CHECK(where_of([] { io::fan_from_json(Json::parse(R"({"dim": 2, "rays": [[1,0,0]], "max_cones": [[0]]})")); }) ==
        "rays[0]");
  CHECK(where_of([] { io::fan_from_json(Json::parse(R"({"dim": 2, "rays": [[1,0]], "max_cones": [[1]]})")); }) ==
        "max_cones[0][0]");
}

TEST_CASE("poset documents") {
  auto P = io::poset_from_json(
      Json::parse(R"({"elements": ["0","a","b","1"], "rank": [0,1,1,2], "covers": [["0","a"],[0,2],["a","1"],["b","1"]]})"));
  CHECK(P->size() == 4);
  CHECK(P->leq(0, 3));
  CHECK(!P->leq(1, 2));
  CHECK(where_of([] { io::poset_from_json(Json::parse(R"({"elements": ["x"], "rank": [0], "covers": [["x","y"]]})")); }) ==
        "covers[0][1]");
}

TEST_CASE("group elements") {
  CoxeterGroup W(CartanDatum::named("A3"));
  const CoxElement x = io::parse_element(W, "3412", "w");
  CHECK(W.to_permutation(x) == std::vector<int>{3, 4, 1, 2});
  CHECK(io::parse_element(W, "s2s1s3s2", "w") == x);
  CHECK(io::parse_element(W, "2,1,3,2", "w") == x);
  CHECK(io::element_from_json(W, Json::parse("[2,1,3,2]"), "w") == x);
  CHECK(io::parse_element(W, "e", "w") == W.identity());
  CHECK(where_of([&] { io::parse_element(W, "1,5", "v"); }) == "v");
  CHECK(where_of([&] { io::parse_element(W, "3411", "w"); }) == "w");
  CHECK(where_of([&] { io::parse_element(W, "s1x", "w"); }) == "w");
  CHECK(where_of([&] { io::element_from_json(W, Json::parse("[0]"), "w"); }) == "w[0]");
  CoxeterGroup B(CartanDatum::named("B2"));
  CHECK(where_of([&] { io::parse_element(B, "12", "w"); }) == "w");
  CHECK(where_of([] { io::cartan_from_json(Json::parse(R"({"cartan": [[2,-1],[0,2]]})")); }) == "cartan");
}

TEST_CASE("serialization") {
  CHECK(io::poly_json(UniPoly{1, 2}).dump() == R"({"coeffs":[1,2],"convention":"half-degree"})");
  CHECK(io::fnv1a("") == 0xcbf29ce484222325ull);
  CHECK(io::fnv1a("a") == 0xaf63dc4c8601ec8cull);
  CHECK(io::digest(Json::parse(R"({"a": [1, 2]})")) == io::digest(Json::parse(R"({ "a" : [1,2] })")));
}
