#include <doctest.h>

#include <random>

#include "sl3/diagram.hpp"
#include "sl3/moves.hpp"
#include "sl3/standard_foams.hpp"
#include "sl3/web.hpp"

using namespace sl3;

namespace {

// Bracket by a random choice among all loops, digon faces and square faces.
LaurentPoly random_bracket(const Web& w, std::mt19937& rng) {
  if (w.empty()) return LaurentPoly(1);
  std::vector<int> loops = w.loops();
  std::vector<Face> small;
  for (const auto& f : faces(w).faces)
    if (f.darts.size() == 2 || f.darts.size() == 4) small.push_back(f);
  std::size_t options = loops.size() + small.size();
  REQUIRE(options > 0);
  std::size_t pick = rng() % options;
  if (pick < loops.size()) {
    Web r = w;
    apply_to_web(r, make_death(w, loops[pick]));
    return LaurentPoly::quantum(3) * random_bracket(r, rng);
  }
  const Face& f = small[pick - loops.size()];
  if (f.darts.size() == 2) {
    Web r = w;
    apply_to_web(r, make_digon_cap(w, f.darts[0].edge, f.darts[1].edge));
    return LaurentPoly::quantum(2) * random_bracket(r, rng);
  }
  auto [a, b] = square_resolutions(w, f.edge_ids());
  return random_bracket(a, rng) + random_bracket(b, rng);
}

Flattening bits(unsigned m, int n) {
  Flattening f(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) f[static_cast<std::size_t>(c)] = (m >> c) & 1u;
  return f;
}

}  // namespace

TEST_CASE("face counts") {
  CHECK(faces(webs::circle()).total() == 2);
  CHECK(faces(webs::theta()).total() == 3);
  CHECK(faces(webs::cube()).total() == 6);
  for (const auto& f : faces(webs::cube()).faces) CHECK(f.darts.size() == 4);
}

TEST_CASE("reduction priority") {
  CHECK(find_reduction(Web{}).kind == ReductionKind::Empty);
  CHECK(find_reduction(webs::circle()).kind == ReductionKind::FreeLoop);
  Reduction t = find_reduction(webs::theta());
  CHECK(t.kind == ReductionKind::DigonFace);
  auto ids = t.face.edge_ids();
  CHECK(ids.front() == *std::min_element(ids.begin(), ids.end()));
  CHECK(find_reduction(webs::cube()).kind == ReductionKind::SquareFace);
  CHECK(find_reduction(disjoint_union(webs::cube(), webs::circle())).kind == ReductionKind::FreeLoop);
}

TEST_CASE("Kuperberg brackets of named webs") {
  CHECK(kuperberg_bracket(Web{}) == LaurentPoly(1));
  CHECK(kuperberg_bracket(webs::circle()).to_string() == "q^-2 + 1 + q^2");
  CHECK(kuperberg_bracket(webs::theta()).to_string() == "q^-3 + 2*q^-1 + 2*q + q^3");
  LaurentPoly cube = kuperberg_bracket(webs::cube());
  CHECK(cube.is_palindromic());
  CHECK(cube.has_nonnegative_coefficients());
  auto [a, b] = square_resolutions(webs::cube(), faces(webs::cube()).faces[0].edge_ids());
  CHECK(cube == kuperberg_bracket(a) + kuperberg_bracket(b));
}

TEST_CASE("bracket is independent of the reduction order") {
  std::mt19937 rng(3);
  std::vector<Web> ws{webs::theta(), webs::digon_chain(3), webs::cube(), disjoint_union(webs::cube(), webs::theta())};
  LinkDiagram d = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)");
  for (unsigned m = 0; m < 16; ++m) ws.push_back(flatten(d, bits(m, 4)));
  for (const Web& w : ws) {
    LaurentPoly expected = kuperberg_bracket(w);
    for (int t = 0; t < 5; ++t) CHECK(random_bracket(w, rng) == expected);
  }
}

TEST_CASE("disjoint union multiplies brackets") {
  CHECK(kuperberg_bracket(disjoint_union(webs::theta(), webs::cube())) ==
        kuperberg_bracket(webs::theta()) * kuperberg_bracket(webs::cube()));
  CHECK(kuperberg_bracket(disjoint_union(webs::circle(), webs::circle())) ==
        LaurentPoly::quantum(3) * LaurentPoly::quantum(3));
}

TEST_CASE("canonical form ignores labels") {
  LinkDiagram tre = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  LinkDiagram rot = parse_pd("X(3,6,4,1) X(5,2,6,3) X(1,4,2,5)");
  // Same diagram with crossings listed in another order: the webs differ in labels only.
  Web a = flatten(tre, {true, false, false}), b = flatten(rot, {false, false, true});
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(canonical_form(webs::theta()) != canonical_form(webs::circle()));
  CHECK(canonical_form(webs::cube()) == canonical_form(webs::cube()));
}

TEST_CASE("bracket cache can be disabled") {
  set_bracket_cache_enabled(false);
  LaurentPoly v = kuperberg_bracket(webs::cube());
  set_bracket_cache_enabled(true);
  CHECK(v == kuperberg_bracket(webs::cube()));
  CHECK(!bracket_cache_snapshot().empty());
}

TEST_CASE("web validation rejects malformed webs") {
  Web w = webs::theta();
  Web bad = w;
  bad.remove_vertex(w.vertices().begin()->first);
  CHECK_THROWS(bad.validate());
  CHECK_NOTHROW(webs::cube().validate());
}
