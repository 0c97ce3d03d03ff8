#include <doctest.h>

#include "hinv/json_io.hpp"
#include "support.hpp"

using namespace hinv;

namespace {

std::string where_of(const std::string& text) {
  try {
    lie_from_json(parse_json_text(text));
  } catch (const SchemaError& e) {
    return e.where();
  }
  return "no error";
}

}  // namespace

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_json_text("{\n  \"dim\": 2,\n  \"brackets\": {,}\n}");
    FAIL("expected a SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.where() == "line 3, column 16");
  }
}

TEST_CASE("schema errors carry field paths") {
  CHECK(where_of(R"({"brackets": {}})") == "$");
  CHECK(where_of(R"({"dim": -1})") == "$.dim");
  CHECK(where_of(R"({"dim": 2, "colour": 1})") == "$.colour");
  CHECK(where_of(R"({"dim": 2, "basis": ["a"]})") == "$.basis");
  CHECK(where_of(R"({"dim": 2, "basis": ["a", "a"]})") == "$.basis.1");
  CHECK(where_of(R"({"dim": 2, "brackets": {"0;1": {}}})") == "$.brackets.0;1");
  CHECK(where_of(R"({"dim": 2, "brackets": {"0,2": {}}})") == "$.brackets.0,2");
  CHECK(where_of(R"({"dim": 2, "brackets": {"0,1": {"5": 1}}})") == "$.brackets.0,1.5");
  CHECK(where_of(R"({"dim": 2, "brackets": {"0,1": {"1": "1/0"}}})") == "$.brackets.0,1.1");
  CHECK(where_of(R"({"dim": 2, "brackets": {"0,1": {"1": 0.5}}})") == "$.brackets.0,1.1");
  CHECK(where_of(R"({"dim": 2, "brackets": {"1,1": {"0": 1}}})") == "$.brackets.1,1");
  CHECK(where_of(R"({"dim": 2, "unipotent_ideal": [3]})") == "$.unipotent_ideal.0");
  CHECK(where_of(R"({"dim": 2, "brackets": {"0,1": {"1": "-3/6"}}})") == "no error");
}

TEST_CASE("rationals") {
  CHECK(rational_from_json(Json(-4), "$") == -4);
  CHECK(rational_from_json(Json("2/6"), "$") == Rational(1, 3));
  CHECK(rational_to_json(parse_rational("-3/9")) == "-1/3");
  CHECK_THROWS_AS(rational_from_json(Json(true), "$"), SchemaError);
}

TEST_CASE("Lie algebra round trip and antisymmetric fill") {
  LieAlgebra g = lie_from_json(parse_json_text(R"({"dim": 3, "basis": ["a", "b", "c"], "brackets": {"0,1": {"2": 1}}})"));
  CHECK(g.structure(1, 0) == SparseVector{{2, Rational(-1)}});
  CHECK(lie_from_json(lie_to_json(g)) == g);

  LieAlgebra gu = load_lie(testing::fixture("groups/gm_x_h3.json"));
  CHECK(gu.unipotent_indices() == std::vector<std::size_t>{1, 2, 3});
  CHECK(lie_from_json(lie_to_json(gu)) == gu);

  // an explicit inconsistent partner is kept so validation can report it
  LieAlgebra bad = lie_from_json(parse_json_text(R"({"dim": 2, "brackets": {"0,1": {"1": 1}, "1,0": {"1": 1}}})"));
  CHECK_FALSE(validate(bad).valid());
}

TEST_CASE("wedge arguments") {
  CHECK(parse_wedge_argument("0,2", 3) == WedgeElement::single(3, 0, 2));
  CHECK(parse_wedge_argument(" 2 , 0 ", 3) == WedgeElement::single(3, 0, 2) * Rational(-1));
  WedgeElement r = parse_wedge_argument(R"({"terms": {"0,2": "1/2", "1,2": -1}})", 3);
  CHECK(r == WedgeElement::single(3, 0, 2) * Rational(1, 2) - WedgeElement::single(3, 1, 2));
  CHECK(wedge_from_json(wedge_to_json(r), 3) == r);
  CHECK_THROWS_AS(parse_wedge_argument("1,1", 3), SchemaError);
  CHECK_THROWS_AS(parse_wedge_argument("0,3", 3), SchemaError);
  CHECK_THROWS_AS(parse_wedge_argument("x", 3), SchemaError);

  LieAlgebra h = algebras::heisenberg3();
  CHECK(format_wedge(r, h) == "1/2 a^c - b^c");
  CHECK(format_wedge(WedgeElement(3), h) == "0");
}

TEST_CASE("group documents") {
  GroupInput in = load_group(testing::fixture("groups/gm2_x_sl2.json"));
  CHECK(in.z_r_lattice == testing::group(2, {2}));
  CHECK(in.connected);
  CHECK(group_from_json(group_to_json(in)).lie == in.lie);

  Json lat = parse_json_text(R"({"free_rank": 0, "invariant_factors": [2, 3]})");
  CHECK(lattice_from_json(lat) == testing::group(0, {6}));
  CHECK_THROWS_AS(lattice_from_json(parse_json_text(R"({"free_rank": 0, "invariant_factors": [0]})")), SchemaError);

  try {
    load_group(testing::fixture("lie/heisenberg3.json"));
    FAIL("expected a SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.where().find("heisenberg3.json") != std::string::npos);
  }
  CHECK_THROWS_AS(load_lie("/nonexistent/file.json"), IoError);
}
