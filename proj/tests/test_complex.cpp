#include <doctest.h>

#include "sl3/chain_complex.hpp"

using namespace sl3;

namespace {

const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

BigradedHomology unknot_table() {
  return {{{0, -2}, {1, {}}}, {{0, 0}, {1, {}}}, {{0, 2}, {1, {}}}};
}

BigradedHomology homology_of(const LinkDiagram& d) {
  Cube c = build_cube(d);
  check_anticommutativity(c);
  GradedChainComplex t = totalize(c);
  t.check_d_squared();
  return homology(t);
}

}  // namespace

TEST_CASE("unknot homology") {
  GradedChainComplex c = build_complex(parse_pd("Loop(1)"));
  CHECK(c.imin == 0);
  CHECK(c.imax == 0);
  CHECK(homology(c) == unknot_table());
  CHECK(euler_characteristic(homology(c)) == LaurentPoly::quantum(3));
}

TEST_CASE("positive kink cube") {
  LinkDiagram d = parse_pd("X(1,2,2,1)");
  Cube c = build_cube(d);
  REQUIRE(c.bases.size() == 2);
  CHECK(c.bases[0].size() == 9);
  CHECK(c.bases[1].size() == 6);
  CHECK(c.bases[0].graded_rank().shifted(c.shift(0)) == (LaurentPoly::quantum(3) * LaurentPoly::quantum(3)).shifted(-2));
  CHECK(c.bases[1].graded_rank().shifted(c.shift(1)) == (LaurentPoly::quantum(2) * LaurentPoly::quantum(3)).shifted(-3));
  CHECK(homology_of(d) == unknot_table());
}

TEST_CASE("kinked unknots of every shape have unknot homology") {
  for (const char* k : {"X(1,2,2,1)", "X(2,1,1,2)", "X(1,1,2,2)", "X(2,2,1,1)", "X(2,1,3,2) X(3,1,4,4)"})
    CHECK(homology_of(parse_pd(k)) == unknot_table());
  CHECK(homology_of(braid_closure(3, {1, 2})) == unknot_table());
  CHECK(homology_of(braid_closure(3, {1, -2})) == unknot_table());
}

TEST_CASE("trefoil complex") {
  LinkDiagram d = parse_pd(kTrefoil);
  Cube c = build_cube(d);
  CHECK(c.bases.size() == 8);
  CHECK(c.edges.size() == 12);
  CHECK(check_anticommutativity(c) == 6);
  GradedChainComplex t = totalize(c);
  CHECK_NOTHROW(t.check_d_squared());
  CHECK(t.euler_characteristic() == link_bracket(d));
  BigradedHomology h = homology(t);
  CHECK(euler_characteristic(h) == link_bracket(d));
  // The table carries 3-torsion.
  bool torsion = false;
  for (const auto& [ij, g] : h)
    for (const auto& o : g.torsion) torsion = torsion || o == 3;
  CHECK(torsion);
}

TEST_CASE("torsion orders divide each other") {
  for (const char* pd : {kTrefoil, "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"})
    for (const auto& [ij, g] : homology_of(parse_pd(pd))) {
      for (std::size_t k = 0; k < g.torsion.size(); ++k) {
        CHECK(g.torsion[k] > 1);
        if (k + 1 < g.torsion.size()) CHECK(g.torsion[k + 1] % g.torsion[k] == 0);
      }
    }
}

TEST_CASE("mirror transposes free ranks") {
  for (const char* pd : {kTrefoil, "X(1,2,2,1)"}) {
    LinkDiagram d = parse_pd(pd);
    BigradedHomology h = homology_of(d), m = homology_of(mirror(d));
    std::map<std::pair<int, int>, int> a, b;
    for (const auto& [ij, g] : h)
      if (g.rank) a[{-ij.first, -ij.second}] = g.rank;
    for (const auto& [ij, g] : m)
      if (g.rank) b[ij] = g.rank;
    CHECK(a == b);
  }
}

TEST_CASE("cube edge foams land on the next flattening") {
  LinkDiagram d = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)");
  for (unsigned j = 0; j < 16; ++j)
    for (int b = 0; b < 4; ++b)
      if (!((j >> b) & 1u)) {
        FoamMovie u = cube_edge_foam(d, j, b);
        CHECK(u.target() == flatten(d, mask_to_flattening(j | (1u << b), 4)));
        CHECK(u.degree() == 1);
      }
  CHECK_THROWS_AS(cube_edge_foam(d, 1, 0), std::invalid_argument);
}

TEST_CASE("invariance reports") {
  InvarianceReport ok = check_invariance(parse_pd("Loop(1)"), parse_pd("X(1,2,2,1)"));
  CHECK(ok.pass);
  CHECK(ok.differences.empty());
  InvarianceReport bad = check_invariance(parse_pd("Loop(1)"), parse_pd(kTrefoil));
  CHECK_FALSE(bad.pass);
  CHECK(!bad.differences.empty());
}

TEST_CASE("empty link") {
  BigradedHomology h = homology(build_complex(parse_pd("")));
  CHECK(h == BigradedHomology{{{0, 0}, {1, {}}}});
}
