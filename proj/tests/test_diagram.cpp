#include <doctest.h>

#include "sl3/diagram.hpp"
#include "sl3/web.hpp"

using namespace sl3;

namespace {

const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

Flattening bits(unsigned m, int n) {
  Flattening f(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) f[static_cast<std::size_t>(c)] = (m >> c) & 1u;
  return f;
}

}  // namespace

TEST_CASE("parse the trefoil") {
  LinkDiagram d = parse_pd(kTrefoil);
  CHECK(d.size() == 3);
  CHECK(d.components() == 1);
  CHECK(crossing_signs(d) == std::vector<int>{1, 1, 1});
  CHECK(d.writhe() == 3);
  CHECK(crossing_signs(mirror(d)) == std::vector<int>{-1, -1, -1});
  CHECK(parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]").to_pd() == d.to_pd());
}

TEST_CASE("empty and crossingless diagrams") {
  LinkDiagram e = parse_pd("");
  CHECK(e.size() == 0);
  CHECK(e.components() == 0);
  CHECK(crossing_signs(e).empty());
  CHECK(link_bracket(e) == LaurentPoly(1));
  LinkDiagram u = parse_pd("Loop(1)");
  CHECK(u.components() == 1);
  CHECK(link_bracket(u) == LaurentPoly::quantum(3));
  CHECK(parse_pd("Loop(1) Loop(2)").components() == 2);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_pd("X(1,2,3)"), DiagramError);
  CHECK_THROWS_AS(parse_pd("X(1,2,3,4)"), DiagramError);
  CHECK_THROWS_AS(parse_pd("X(1,1,2,3)"), DiagramError);
  CHECK_THROWS_AS(parse_pd("Y(1,1,2,2)"), DiagramError);
  CHECK_THROWS_AS(parse_pd("X(1,2,3"), DiagramError);
  CHECK_THROWS_AS(parse_pd_json("{\"pd\": [[1,2,3]]}"), DiagramError);
  CHECK_THROWS_AS(parse_pd_json("not json"), DiagramError);
  // Both over-strand ends incoming along the same arc.
  CHECK_THROWS_AS(make_diagram({{1, 2, 2, 1}}, 0, {3}), DiagramError);
}

TEST_CASE("kinks close up into unknots of both signs") {
  CHECK(crossing_signs(parse_pd("X(1,2,2,1)")) == std::vector<int>{1});
  CHECK(crossing_signs(parse_pd("X(2,1,1,2)")) == std::vector<int>{1});
  CHECK(crossing_signs(parse_pd("X(1,1,2,2)")) == std::vector<int>{-1});
  CHECK(crossing_signs(parse_pd("X(2,2,1,1)")) == std::vector<int>{-1});
  for (const char* k : {"X(1,2,2,1)", "X(2,1,1,2)", "X(1,1,2,2)", "X(2,2,1,1)"})
    CHECK(link_bracket(parse_pd(k)) == LaurentPoly::quantum(3));
}

TEST_CASE("JSON diagram form") {
  LinkDiagram d = parse_pd_json("{\"pd\": [[1,4,2,5],[3,6,4,1],[5,2,6,3]], \"over_in\": [1,1,1]}");
  CHECK(d.to_pd() == parse_pd(kTrefoil).to_pd());
  CHECK(parse_pd_json("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]").size() == 3);
  CHECK(parse_pd_json("{\"pd\": [], \"loops\": 2}").components() == 2);
}

TEST_CASE("flattenings of the positive kink") {
  LinkDiagram d = parse_pd("X(1,2,2,1)");
  Web w0 = flatten(d, {false});
  CHECK(w0.vertices().empty());
  CHECK(w0.loops().size() == 2);
  Web w1 = flatten(d, {true});
  CHECK(w1.vertices().size() == 2);
  CHECK(w1.edges().size() == 3);
  CHECK(kuperberg_bracket(w1) == LaurentPoly::quantum(3) * LaurentPoly::quantum(2));
}

TEST_CASE("negative crossings use the web piece on their 0-flattening") {
  LinkDiagram d = parse_pd("X(1,1,2,2)");
  CHECK(flatten(d, {false}).vertices().size() == 2);
  CHECK(flatten(d, {true}).vertices().empty());
  CHECK(uses_web_piece(d, {false}, 0));
}

TEST_CASE("every flattening of small diagrams is a valid web") {
  for (const char* pd : {kTrefoil, "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)", "X(1,3,2,4) X(3,1,4,2)"}) {
    LinkDiagram d = parse_pd(pd);
    CHECK(d.positive() + d.negative() == d.size());
    for (unsigned m = 0; m < (1u << d.size()); ++m) {
      Web w = flatten(d, bits(m, d.size()));
      CHECK_NOTHROW(w.validate());
      LaurentPoly b = kuperberg_bracket(w);
      CHECK(b.is_palindromic());
      CHECK(b.has_nonnegative_coefficients());
    }
  }
}

TEST_CASE("link brackets") {
  LaurentPoly trefoil = LaurentPoly::parse("-q^-14 - q^-12 + q^-8 + 2*q^-6 + q^-4 + q^-2");
  CHECK(link_bracket(parse_pd(kTrefoil)) == trefoil);
  CHECK(link_bracket(mirror(parse_pd(kTrefoil))) == trefoil.bar());
  CHECK(link_bracket(braid_closure(2, {1, 1, 1})) == trefoil);
  LaurentPoly fig8 = link_bracket(parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"));
  CHECK(fig8.is_palindromic());
  CHECK(fig8 == link_bracket(braid_closure(3, {1, -2, 1, -2})));
}

TEST_CASE("braid closures") {
  CHECK(braid_closure(1, {}).components() == 1);
  CHECK(braid_closure(3, {}).components() == 3);
  CHECK(braid_closure(2, {1, 1}).components() == 2);
  CHECK(crossing_signs(braid_closure(3, {1, -2})) == std::vector<int>{1, -1});
  CHECK(link_bracket(braid_closure(3, {1, 2, 1})) == link_bracket(braid_closure(3, {2, 1, 2})));
  CHECK_THROWS_AS(braid_closure(2, {2}), DiagramError);
}
