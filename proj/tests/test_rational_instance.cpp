#include <doctest.h>

#include <sstream>

#include "kconn/errors.hpp"
#include "kconn/instance.hpp"
#include "kconn/rational.hpp"

using namespace kconn;

TEST_CASE("rational literals") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("7/2") == Rational(7, 2));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("3.5") == Rational(7, 2));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("10.") == 10);

  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
}

TEST_CASE("rational formatting") {
  CHECK(to_fraction_string(Rational(5)) == "5/1");
  CHECK(to_fraction_string(ratio(6, 4)) == "3/2");
  CHECK(to_compact_string(Rational(5)) == "5");
  CHECK(to_compact_string(Rational(1, 3)) == "1/3");
  CHECK(to_decimal_string(Rational(2, 3)) == "0.666667");
  CHECK(to_decimal_string(Rational(-1, 8), 3) == "-0.125");
  CHECK(floor_of(Rational(7, 3)) == 2);
  CHECK(floor_of(Rational(-1, 3)) == -1);
  CHECK(is_integer(ratio(4, 2)));
  CHECK_FALSE(is_integer(Rational(1, 2)));
}

TEST_CASE("instance file parses") {
  const char* text =
      "c a triangle with one doubled edge\n"
      "p kecss 3 3 2\n"
      "e 0 1 1\n"
      "c comments may appear anywhere\n"
      "e 1 2 7/2 2\n"
      "\n"
      "e 0 2 0.5\n";
  Instance inst = parse_instance_text(text);
  CHECK(inst.k == 2);
  CHECK(inst.graph.node_count() == 3);
  REQUIRE(inst.graph.edge_count() == 3);
  const Edge& e1 = inst.graph.edge(EdgeId{1});
  CHECK(e1.u == 1);
  CHECK(e1.v == 2);
  CHECK(e1.cost == Rational(7, 2));
  CHECK(e1.multiplicity == 2);
  CHECK(inst.graph.edge(EdgeId{2}).cost == Rational(1, 2));
}

TEST_CASE("instance round trip through the writer") {
  MultiGraph g(4);
  g.add_edge(0, 1, Rational(3, 2));
  g.add_edge(1, 2, 4, 3);
  g.add_edge(2, 3, 1);
  g.add_edge(3, 0, Rational(1, 7));
  Instance inst{g, 2};
  std::string text = format_instance(inst, "round trip");
  CHECK(text.rfind("c round trip\n", 0) == 0);
  Instance back = parse_instance_text(text);
  CHECK(format_instance(back, "round trip") == text);
  REQUIRE(back.graph.edge_count() == 4);
  for (const Edge& e : g.edges()) {
    const Edge& f = back.graph.edge(e.id);
    CHECK(f.u == e.u);
    CHECK(f.v == e.v);
    CHECK(f.cost == e.cost);
    CHECK(f.multiplicity == e.multiplicity);
  }
}

TEST_CASE("malformed instances are rejected") {
  auto rejects = [](const char* text) {
    CHECK_THROWS_AS(parse_instance_text(text), ParseError);
  };
  rejects("");
  rejects("e 0 1 1\n");
  rejects("p kecss 2 1\ne 0 1 1\n");
  rejects("p foo 2 1 2\ne 0 1 1\n");
  rejects("p kecss 2 2 2\ne 0 1 1\n");
  rejects("p kecss 2 1 2\ne 0 0 1\n");
  rejects("p kecss 2 1 2\ne 0 2 1\n");
  rejects("p kecss 2 1 2\ne 0 1 -1\n");
  rejects("p kecss 2 1 2\ne 0 1 x\n");
  rejects("p kecss 2 1 2\ne 0 1 1 0\n");
  rejects("p kecss 2 1 2\np kecss 2 1 2\ne 0 1 1\n");
  rejects("p kecss 2 1 2\nq 0 1 1\n");
}

TEST_CASE("parse errors carry the line number") {
  try {
    parse_instance_text("p kecss 3 2 2\ne 0 1 1\ne 1 1 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(load_instance("/nonexistent/instance.gr"), ParseError);
}
