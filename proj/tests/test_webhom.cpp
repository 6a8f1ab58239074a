#include <doctest.h>

#include <random>

#include "sl3/selftest.hpp"
#include "sl3/standard_foams.hpp"
#include "sl3/web_basis.hpp"

using namespace sl3;

TEST_CASE("bases of small webs") {
  WebBasis e = basis(Web{});
  CHECK(e.size() == 1);
  CHECK(e.degrees == std::vector<int>{0});
  CHECK(gram_matrix(e) == IntMatrix::identity(1));

  WebBasis c = basis(webs::circle());
  CHECK(c.degrees == std::vector<int>{-2, 0, 2});
  IntMatrix g = gram_matrix(c);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(g(i, j) == (i + j == 2 ? -1 : 0));

  WebBasis t = basis(webs::theta());
  CHECK(t.size() == 6);
  CHECK(t.graded_rank().to_string() == "q^-3 + 2*q^-1 + 2*q + q^3");
  Integer det = determinant(gram_matrix(t));
  CHECK((det == 1 || det == -1));
}

TEST_CASE("graded rank and unimodularity on named webs") {
  for (const Web& w : {webs::circle(), webs::theta(), webs::digon_chain(2), webs::digon_chain(3), webs::cube()}) {
    CheckReport r = check_graded_rank(w);
    INFO((r.failures.empty() ? std::string() : r.failures.front()));
    CHECK(r.ok());
  }
}

TEST_CASE("basis foams start from the empty web and have the recorded degrees") {
  WebBasis b = basis(webs::cube());
  for (int k = 0; k < b.size(); ++k) {
    CHECK(b.foams[static_cast<std::size_t>(k)].source().empty());
    CHECK(b.foams[static_cast<std::size_t>(k)].target() == b.web);
    CHECK(b.foams[static_cast<std::size_t>(k)].degree() == b.degrees[static_cast<std::size_t>(k)]);
  }
  CHECK(b.trace.front().find("square") != std::string::npos);
}

TEST_CASE("induced maps of identity and dots") {
  Web c = webs::circle();
  WebBasis b = basis(c);
  CHECK(induced_map(identity(c), b, b) == IntMatrix::identity(3));
  IntMatrix x = edge_dot_action(c, c.loops().front(), b);
  IntMatrix expected(3, 3);
  expected(1, 0) = 1;
  expected(2, 1) = 1;
  CHECK(x == expected);
  CHECK((x * x * x).is_zero());
}

TEST_CASE("functoriality on composable movies") {
  std::mt19937 rng(5);
  for (const Web& w : {webs::theta(), webs::digon_chain(2), webs::cube()}) {
    WebBasis b = basis(w);
    std::vector<int> edges;
    for (const auto& [id, e] : w.edges()) edges.push_back(id);
    for (int t = 0; t < 6; ++t) {
      int e0 = edges[rng() % edges.size()], e1 = edges[rng() % edges.size()];
      FoamMovie u = dot_on(w, e0), v = dot_on(w, e1);
      CHECK(induced_map(compose(u, v), b, b) == induced_map(v, b, b) * induced_map(u, b, b));
    }
    // Through another web: unzip an edge, then zip back.
    for (const auto& [id, e] : w.edges()) {
      if (e.is_loop()) continue;
      Move un = make_unzip(w, id);
      FoamMovie u(w);
      u.push(un);
      WebBasis b1 = basis(u.target());
      FoamMovie v(u.target());
      v.push(inverse(un));
      CHECK(induced_map(compose(u, v), b, b) == induced_map(v, b1, b) * induced_map(u, b, b1));
      break;
    }
  }
}

TEST_CASE("zip then unzip is a difference of dots") {
  Web w = webs::cube();
  for (const auto& [id, e] : w.edges()) {
    Move un = make_unzip(w, id);
    Web open = w;
    apply_to_web(open, un);
    WebBasis b = basis(open);
    FoamMovie u(open);
    u.push(inverse(un));
    u.push(un);
    const auto& d = std::get<ZipData>(un.data);
    CHECK(induced_map(u, b, b) == edge_dot_action(open, d.b, b) - edge_dot_action(open, d.a, b));
  }
}

TEST_CASE("digon identities") {
  for (const Web& w : {webs::theta(), webs::digon_chain(2), webs::cube()}) {
    CheckReport r = check_digon_suite(w);
    INFO((r.failures.empty() ? std::string() : r.failures.front()));
    CHECK(r.ok());
  }
}

TEST_CASE("square identities") {
  for (const Web& w : {webs::digon_chain(2), webs::cube()}) {
    CheckReport r = check_square_suite(w);
    INFO((r.failures.empty() ? std::string() : r.failures.front()));
    CHECK(r.ok());
  }
}

TEST_CASE("ring relations") {
  for (const Web& w : {webs::circle(), webs::theta(), webs::digon_chain(3), webs::cube()}) {
    CheckReport r = check_ring_relations(w);
    INFO((r.failures.empty() ? std::string() : r.failures.front()));
    CHECK(r.ok());
  }
}

TEST_CASE("disjoint union tensors bases") {
  WebBasis a = basis(webs::theta()), c = basis(webs::circle());
  WebBasis u = basis(disjoint_union(webs::theta(), webs::circle()));
  CHECK(u.size() == a.size() * c.size());
  CHECK(u.graded_rank() == a.graded_rank() * c.graded_rank());
}
