#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "jnd/errors.hpp"
#include "jnd/grp_io.hpp"
#include "jnd/perm.hpp"

using namespace jnd;

TEST_CASE("permutation algebra") {
  Perm id = Perm::identity(5);
  Perm c = parse_cycles("(0 1 2 3 4)", 5);
  CHECK(c * c.inverse() == id);
  CHECK(c.inverse() * c == id);
  // b-first composition: (a*b)(p) = a[b[p]]
  Perm a = parse_cycles("(0 1)", 3);
  Perm b = parse_cycles("(1 2)", 3);
  CHECK((a * b)[2] == 0);  // 2 -b-> 1 -a-> 0
  CHECK((b * a)[2] == 1);  // 2 -a-> 2 -b-> 1
}

TEST_CASE("perm validation") {
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Perm(std::vector<Point>{2, 0}), std::invalid_argument);
}

TEST_CASE("cycle parsing round trip") {
  Perm p = parse_cycles("(0 1)(2 3 4)", 6);
  CHECK(p[0] == 1);
  CHECK(p[4] == 2);
  CHECK(parse_cycles(format_cycles(p), 6) == p);
  CHECK(format_cycles(Perm::identity(4)) == "()");
  CHECK(parse_cycles("()", 4) == Perm::identity(4));
}

TEST_CASE("cycle parse errors") {
  CHECK_THROWS_AS(parse_cycles("(0 5)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(0 0)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(0 1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("0 1)", 3), std::invalid_argument);
}

TEST_CASE("grp parsing") {
  std::istringstream in(
      "# a comment\n"
      "degree 3\n"
      "\n"
      "gen (0 1 2)\n"
      "gen (0 1)\n");
  GrpFile f = parse_grp(in);
  CHECK(f.degree == 3);
  REQUIRE(f.generators.size() == 2);
  CHECK(f.generators[0] == parse_cycles("(0 1 2)", 3));
  GroupPtr g = group_from_grp(f);
  CHECK(g->order() == 6);
}

TEST_CASE("grp parse errors carry line numbers") {
  std::istringstream noline("gen (0 1)\n");
  CHECK_THROWS_AS(parse_grp(noline), ParseError);

  std::istringstream bad("degree 3\ngen (0 1 2)\ngen (0 9)\n");
  try {
    parse_grp(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line_no == 3);
  }
}

TEST_CASE("grp format round trip is bit exact") {
  GrpFile f;
  f.degree = 4;
  f.generators = {parse_cycles("(0 1 2 3)", 4), parse_cycles("(0 1)", 4)};
  std::string text = format_grp(f);
  std::istringstream in(text);
  GrpFile g = parse_grp(in);
  CHECK(format_grp(g) == text);
  CHECK(g.degree == f.degree);
  CHECK(g.generators == f.generators);
}
