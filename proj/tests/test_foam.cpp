#include <doctest.h>

#include "sl3/foam.hpp"
#include "sl3/selftest.hpp"
#include "sl3/standard_foams.hpp"

using namespace sl3;

namespace {

FoamMovie cup_with_dots(int dots) {
  FoamMovie u;
  u.push(make_birth(u.target()));
  int l = u.target().loops().front();
  for (int i = 0; i < dots; ++i) u.push(make_dot(u.target(), l));
  return u;
}

}  // namespace

TEST_CASE("move degrees") {
  FoamMovie birth;
  birth.push(make_birth(birth.target()));
  CHECK(birth.degree() == -2);
  int l = birth.target().loops().front();
  FoamMovie dot(birth.target());
  dot.push(make_dot(dot.source(), l));
  CHECK(dot.degree() == 2);
  Web two = disjoint_union(webs::circle(), webs::circle());
  auto loops = two.loops();
  FoamMovie merge(two);
  merge.push(make_saddle_merge(two, loops[0], loops[1]));
  CHECK(merge.degree() == 2);
  CHECK(merge.target().loops().size() == 1);
  CHECK(merge.reflect().degree() == 2);
  FoamMovie zip(webs::theta());
  zip.push(make_unzip(webs::theta(), webs::theta().edges().begin()->first));
  CHECK(zip.degree() == 1);
}

TEST_CASE("composition and reflection") {
  FoamMovie u = cup_with_dots(1);
  CHECK(reflect(reflect(u)) == u);
  CHECK(compose(identity(Web{}), u).target() == u.target());
  FoamMovie sphere = compose(u, reflect(u));
  CHECK(sphere.closed());
  CHECK(evaluate_closed(sphere) == -1);
  CHECK(degree(sphere) == degree(u) + degree(reflect(u)));
  CHECK(reflect(cup_with_dots(0)).moves().back().kind == MoveKind::Death);
  CHECK_THROWS_AS(u.then(identity(webs::theta())), std::invalid_argument);
}

TEST_CASE("pre-foam extraction") {
  FoamMovie bd = compose(cup_with_dots(0), reflect(cup_with_dots(0)));
  PreFoam p = extract_prefoam(bd);
  REQUIRE(p.facets.size() == 1);
  CHECK(p.facets[0] == PreFoamFacet{0, 0, 0});
  CHECK(p.circles.empty());
  CHECK(evaluate_closed(bd) == 0);

  PreFoam p2 = extract_prefoam(compose(cup_with_dots(2), reflect(cup_with_dots(0))));
  CHECK(p2.facets[0].dots == 2);

  // Digon cup then cap on a born circle is theta(0,0,0).
  FoamMovie t = cup_with_dots(0);
  t.push(make_digon_cup(t.target(), t.target().loops().front()));
  FoamMovie closed = compose(t, reflect(t));
  PreFoam th = extract_prefoam(closed);
  CHECK(th.facets.size() == 3);
  CHECK(th.circles.size() == 1);
  CHECK(th.euler_characteristic() == 3);
  CHECK(evaluate(th) == 0);
  CHECK_THROWS_AS(extract_prefoam(cup_with_dots(0)), std::invalid_argument);
  CHECK(evaluate_closed(FoamMovie{}) == 1);
}

TEST_CASE("theta foams from movies") {
  // Cup, digon, dots on the two digon facets, then close: theta(a, b, 0) up to cyclic order.
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      FoamMovie t = cup_with_dots(0);
      t.push(make_digon_cup(t.target(), t.target().loops().front()));
      const auto& d = std::get<DigonData>(t.moves().back().data);
      FoamMovie dots(t.target());
      for (int i = 0; i < a; ++i) dots.push(make_dot(dots.target(), d.d1));
      for (int i = 0; i < b; ++i) dots.push(make_dot(dots.target(), d.d2));
      FoamMovie closed = compose(compose(t, dots), reflect(t));
      PreFoam p = extract_prefoam(closed);
      CHECK(evaluate(p) == evaluate(p, {false}));
      // The cup disc carries no dots, so only a + b = 3 survives.
      if (a + b != 3) CHECK(evaluate(p) == 0);
      else CHECK((evaluate(p) == 1 || evaluate(p) == -1));
    }
}

TEST_CASE("move preconditions are enforced") {
  Web c = webs::circle();
  CHECK_THROWS_AS(make_death(c, 12345), std::logic_error);
  CHECK_THROWS_AS(make_unzip(c, c.loops().front()), std::invalid_argument);
  CHECK_THROWS_AS(make_digon_cap(webs::cube(), 0, 1), std::invalid_argument);
  FoamMovie u(c);
  CHECK_THROWS_AS(u.push(Move{MoveKind::Death, LoopData{999, {}}}), std::logic_error);
}

TEST_CASE("local relations under generated closures") {
  for (const auto& r : check_local_relations(150, 42)) {
    INFO(r.name << (r.failures.empty() ? std::string() : ": " + r.failures.front()));
    CHECK(r.checks == 150);
    CHECK(r.ok());
    CHECK(r.nonzero > 0);
  }
}

TEST_CASE("theta table and closed surfaces suites") {
  CHECK(check_theta_table().ok());
  CHECK(check_closed_surfaces().ok());
}
