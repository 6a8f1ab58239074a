#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "sl3/frobenius.hpp"
#include "sl3/int_matrix.hpp"
#include "sl3/laurent.hpp"
#include "sl3/prefoam.hpp"

using namespace sl3;

namespace {

FrobeniusElement elem(int a0, int a1, int a2) { return FrobeniusElement{{a0, a1, a2}}; }

// Trace on H*(Fl_3) = Z[x1,x2,x3]/(e1,e2,e3) via the top divided difference,
// normalized so that Tr(x1 x2^2) = 1.
using Poly3 = std::map<std::array<int, 3>, Integer>;

Poly3 divided_difference(const Poly3& f, int i) {
  Poly3 out;
  for (const auto& [m, c] : f) {
    int a = m[static_cast<std::size_t>(i)], b = m[static_cast<std::size_t>(i + 1)];
    if (a == b) continue;
    int lo = std::min(a, b), span = std::abs(a - b);
    Integer s = a > b ? c : Integer(-c);
    for (int k = 0; k < span; ++k) {
      auto t = m;
      t[static_cast<std::size_t>(i)] = lo + k;
      t[static_cast<std::size_t>(i + 1)] = lo + span - 1 - k;
      out[t] += s;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Integer flag_trace(int a, int b, int c) {
  if (a + b + c != 3) return 0;
  Poly3 f{{{a, b, c}, 1}};
  f = divided_difference(divided_difference(divided_difference(f, 0), 1), 0);
  Integer top = f.count({0, 0, 0}) ? f.at({0, 0, 0}) : Integer(0);
  return -top;
}

}  // namespace

TEST_CASE("trace values") {
  CHECK(trace(elem(0, 0, 1)) == -1);
  CHECK(trace(elem(1, 0, 0)) == 0);
  CHECK(trace(elem(0, 1, 0)) == 0);
  CHECK(trace(elem(5, 1, 2)) == -2);
}

TEST_CASE("multiplication in A") {
  CHECK(multiply(elem(0, 1, 0), elem(0, 1, 0)) == elem(0, 0, 1));
  CHECK(multiply(elem(0, 0, 1), elem(0, 1, 0)) == elem(0, 0, 0));
  CHECK(multiply(elem(1, 1, 0), elem(0, 0, 1)) == elem(0, 0, 1));
  CHECK(FrobeniusElement::degree_of_basis(0) == -2);
  CHECK(FrobeniusElement::degree_of_basis(1) == 0);
  CHECK(FrobeniusElement::degree_of_basis(2) == 2);
}

TEST_CASE("comultiplication formulas") {
  FrobeniusTensor d1 = comultiply(elem(1, 0, 0));
  FrobeniusTensor e1{};
  e1[0][2] = -1;
  e1[1][1] = -1;
  e1[2][0] = -1;
  CHECK(d1 == e1);
  FrobeniusTensor dx = comultiply(elem(0, 1, 0));
  FrobeniusTensor ex{};
  ex[1][2] = -1;
  ex[2][1] = -1;
  CHECK(dx == ex);
  FrobeniusTensor dx2 = comultiply(elem(0, 0, 1));
  FrobeniusTensor ex2{};
  ex2[2][2] = -1;
  CHECK(dx2 == ex2);
}

TEST_CASE("trace pairing is perfect and the dual basis identity holds") {
  IntMatrix p(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p(i, j) = trace(multiply(FrobeniusElement::basis(i), FrobeniusElement::basis(j)));
  Integer det = determinant(p);
  CHECK((det == 1 || det == -1));
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    FrobeniusElement x = elem(static_cast<int>(rng() % 11) - 5, static_cast<int>(rng() % 11) - 5, static_cast<int>(rng() % 11) - 5);
    FrobeniusElement rhs = trace(x) * FrobeniusElement::basis(2) + trace(multiply(FrobeniusElement::basis(1), x)) * FrobeniusElement::basis(1) +
                           trace(multiply(FrobeniusElement::basis(2), x)) * FrobeniusElement::basis(0);
    CHECK(Integer(-1) * x == rhs);
  }
}

TEST_CASE("closed surface values in A") {
  CHECK(closed_surface_value(0, 2) == -1);
  CHECK(closed_surface_value(0, 0) == 0);
  CHECK(closed_surface_value(0, 1) == 0);
  CHECK(closed_surface_value(1, 0) == 3);
  CHECK(closed_surface_value(1, 1) == 0);
  CHECK(closed_surface_value(2, 0) == 0);
}

TEST_CASE("Laurent polynomials") {
  LaurentPoly q2 = LaurentPoly::quantum(2), q3 = LaurentPoly::quantum(3);
  CHECK(q2.to_string() == "q^-1 + q");
  CHECK(q3.to_string() == "q^-2 + 1 + q^2");
  CHECK((q2 * q3).to_string() == "q^-3 + 2*q^-1 + 2*q + q^3");
  CHECK(LaurentPoly::parse("q^-3 + 2*q^-1 - q + 5") == LaurentPoly::parse((LaurentPoly::parse("q^-3 + 2*q^-1 - q + 5")).to_string()));
  CHECK(LaurentPoly::parse("-q^-14 - q^-12 + q^-8 + 2*q^-6 + q^-4 + q^-2").coefficient(-6) == 2);
  CHECK((q3 - q3).is_zero());
  CHECK(q3.shifted(2).min_degree() == 0);
  CHECK(q3.is_palindromic());
  CHECK(LaurentPoly().to_string() == "0");
  LaurentPoly big = LaurentPoly::monomial(Integer("123456789012345678901234567890"), 4);
  CHECK((big * big).coefficient(8) == Integer("15241578753238836750495351562536198787501905199875019052100"));
  // Commutative ring laws on a few samples.
  LaurentPoly a = LaurentPoly::parse("q^-2 - 3*q + 7"), b = LaurentPoly::parse("2*q^3 + q^-1"), c = q2;
  CHECK(a * b == b * a);
  CHECK(a * (b + c) == a * b + a * c);
  CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("integer matrices") {
  IntMatrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 1;
  CHECK(determinant(m) == 1);
  CHECK(m * unimodular_inverse(m) == IntMatrix::identity(2));
  m(0, 0) = 2;
  m(1, 1) = 2;
  CHECK(determinant(m) == 3);
  CHECK_THROWS_AS(unimodular_inverse(m), NotUnimodular);
  CHECK(smith_invariants(m) == std::vector<Integer>{1, 3});
  IntMatrix z(3, 2);
  CHECK(rank(z) == 0);
  CHECK(smith_invariants(z).empty());

  std::mt19937 rng(1);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + static_cast<int>(rng() % 6);
    IntMatrix u = IntMatrix::identity(n);
    for (int s = 0; s < 20; ++s) {
      int i = static_cast<int>(rng() % static_cast<unsigned>(n)), j = static_cast<int>(rng() % static_cast<unsigned>(n));
      if (i == j) continue;
      int f = static_cast<int>(rng() % 5) - 2;
      for (int col = 0; col < n; ++col) u(i, col) += f * u(j, col);
    }
    CHECK(u * unimodular_inverse(u) == IntMatrix::identity(n));
  }
}

TEST_CASE("Smith invariants of a diagonal-equivalent matrix") {
  // diag(2, 6, 0) scrambled by unimodular operations.
  IntMatrix d(3, 3);
  d(0, 0) = 2;
  d(1, 1) = 6;
  IntMatrix l = IntMatrix::identity(3), r = IntMatrix::identity(3);
  l(1, 0) = 3;
  l(2, 1) = -2;
  r(0, 2) = 5;
  r(1, 0) = 1;
  CHECK(smith_invariants(l * d * r) == std::vector<Integer>{2, 6});
  CHECK(rank(l * d * r) == 2);
}

TEST_CASE("theta foam evaluation") {
  CHECK(evaluate(theta_foam(0, 1, 2)) == 1);
  CHECK(evaluate(theta_foam(0, 2, 1)) == -1);
  CHECK(evaluate(theta_foam(1, 1, 1)) == 0);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        Integer v = evaluate(theta_foam(a, b, c));
        if (a + b + c != 3) CHECK(v == 0);
        CHECK(v == evaluate(theta_foam(b, c, a)));
        CHECK(v == evaluate(theta_foam(c, a, b)));
        CHECK(v == -evaluate(reverse_circle(theta_foam(a, b, c), 0)));
      }
}

TEST_CASE("theta values match the flag variety trace") {
  CHECK(flag_trace(1, 2, 0) == 1);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (int c = 0; a + b + c <= 4; ++c) CHECK(evaluate(theta_foam(a, b, c)) == flag_trace(a, b, c));
}

TEST_CASE("closed surfaces as pre-foams") {
  CHECK(evaluate(closed_surface(0, 2)) == -1);
  CHECK(evaluate(closed_surface(0, 0)) == 0);
  CHECK(evaluate(closed_surface(0, 1)) == 0);
  CHECK(evaluate(closed_surface(1, 0)) == 3);
  CHECK(evaluate(closed_surface(2, 0)) == 0);
  CHECK(evaluate(PreFoam{}) == 1);
}

namespace {

PreFoam random_prefoam(std::mt19937& rng) {
  PreFoam p;
  int nf = 3 + static_cast<int>(rng() % 4);
  for (int f = 0; f < nf; ++f) p.facets.push_back({rng() % 6 == 0 ? 1 : 0, static_cast<int>(rng() % 3), 0});
  int nc = static_cast<int>(rng() % 3);
  for (int c = 0; c < nc; ++c) {
    std::vector<int> fs(static_cast<std::size_t>(nf));
    std::iota(fs.begin(), fs.end(), 0);
    std::shuffle(fs.begin(), fs.end(), rng);
    // Occasionally two annuli on the same facet.
    if (rng() % 8 == 0) fs[1] = fs[0];
    p.circles.push_back({{fs[0], fs[1], fs[2]}});
    for (int s = 0; s < 3; ++s) ++p.facets[static_cast<std::size_t>(fs[static_cast<std::size_t>(s)])].slots;
  }
  return p;
}

}  // namespace

TEST_CASE("evaluation properties on generated pre-foams") {
  std::mt19937 rng(11);
  int nonzero = 0;
  for (int t = 0; t < 300; ++t) {
    PreFoam p = random_prefoam(rng), q = random_prefoam(rng);
    Integer v = evaluate(p);
    if (v != 0) ++nonzero;
    CHECK(v == evaluate(p, {false}));
    CHECK(evaluate(disjoint_union(p, q)) == v * evaluate(q));
    if (p.euler_characteristic() != 0) CHECK(v == 0);
    for (std::size_t c = 0; c < p.circles.size(); ++c) CHECK(evaluate(reverse_circle(p, c)) == -v);
    bool vanishes = false;
    for (const auto& f : p.facets) vanishes = vanishes || f.genus >= 2 || (f.genus == 1 && f.dots > 0) || f.dots >= 3;
    for (const auto& c : p.circles) {
      const auto& fs = c.facets;
      if (fs[0] == fs[1] || fs[1] == fs[2] || fs[0] == fs[2]) vanishes = true;
      for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        if (fs[static_cast<std::size_t>(i)] != fs[static_cast<std::size_t>(j)] &&
            p.facets[static_cast<std::size_t>(fs[static_cast<std::size_t>(i)])].dots +
                    p.facets[static_cast<std::size_t>(fs[static_cast<std::size_t>(j)])].dots >=
                4)
          vanishes = true;
      }
    }
    if (vanishes) CHECK(v == 0);
  }
  CHECK(nonzero > 0);
}
