#include "sl3/selftest.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "sl3/diagram.hpp"
#include "sl3/frobenius.hpp"
#include "sl3/prefoam.hpp"
#include "sl3/standard_foams.hpp"
#include "sl3/web_basis.hpp"

namespace sl3 {

void CheckReport::expect(bool condition, const std::string& what) {
  ++checks;
  if (!condition) failures.push_back(what);
}

namespace {

// +1 on cyclic rotations of (0,1,2), -1 on those of (0,2,1), 0 otherwise.
int theta_sign(int a, int b, int c) {
  if (a == 0 && b == 1 && c == 2) return 1;
  if (a == 1 && b == 2 && c == 0) return 1;
  if (a == 2 && b == 0 && c == 1) return 1;
  if (a == 0 && b == 2 && c == 1) return -1;
  if (a == 2 && b == 1 && c == 0) return -1;
  if (a == 1 && b == 0 && c == 2) return -1;
  return 0;
}

using Terms = std::vector<std::pair<int, PreFoam>>;

struct Instance {
  Terms lhs;
  Terms rhs;
};

Integer value(const Terms& t) {
  Integer s = 0;
  for (const auto& [c, p] : t) s += c * evaluate(p);
  return s;
}

int add_facet(PreFoam& p, int genus, int dots) {
  p.facets.push_back({genus, dots, 0});
  return static_cast<int>(p.facets.size()) - 1;
}

void add_circle(PreFoam& p, int a, int b, int c) {
  p.circles.push_back({{a, b, c}});
  for (int f : {a, b, c}) ++p.facets[static_cast<std::size_t>(f)].slots;
}

PreFoam with_dots(PreFoam p, int facet, int dots) {
  p.facets[static_cast<std::size_t>(facet)].dots += dots;
  return p;
}

class ClosureGenerator {
 public:
  explicit ClosureGenerator(unsigned seed) : rng_(seed) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  // Random context with at least `min_facets` facets and `min_circles` circles.
  PreFoam context(int min_facets, int min_circles) {
    PreFoam p;
    int nf = pick(std::max(min_facets, 3), std::max(min_facets, 3) + 3);
    for (int f = 0; f < nf; ++f) add_facet(p, pick(0, 6) == 0 ? 1 : 0, pick(0, 2));
    int nc = pick(min_circles, min_circles + 2);
    for (int c = 0; c < nc; ++c) {
      std::vector<int> fs(static_cast<std::size_t>(nf));
      for (int f = 0; f < nf; ++f) fs[static_cast<std::size_t>(f)] = f;
      std::shuffle(fs.begin(), fs.end(), rng_);
      add_circle(p, fs[0], fs[1], fs[2]);
    }
    return p;
  }

  // Moves dots on context facets until the left side has Euler characteristic 0, when possible.
  void balance(PreFoam& ctx, int chi) {
    for (int guard = 0; chi != 0 && guard < 64; ++guard) {
      auto& f = ctx.facets[static_cast<std::size_t>(pick(0, static_cast<int>(ctx.facets.size()) - 1))];
      if (chi > 0 && f.dots < 2) {
        ++f.dots;
        --chi;
      } else if (chi < 0 && f.dots > 0) {
        --f.dots;
        ++chi;
      }
    }
  }

  // Builds the instance twice: once to measure chi, once after balancing.
  template <class Build>
  Instance instance(PreFoam ctx, Build build) {
    Instance first = build(ctx);
    balance(ctx, first.lhs.front().second.euler_characteristic());
    return build(ctx);
  }

 private:
  std::mt19937 rng_;
};

void run_family(CheckReport& r, int closures, const std::function<Instance()>& next) {
  for (int k = 0; k < closures; ++k) {
    Instance in = next();
    Integer l = value(in.lhs), rv = value(in.rhs);
    bool shortcut_ok = true, any = false;
    for (const auto& [c, p] : in.lhs) {
      Integer v = evaluate(p);
      shortcut_ok = shortcut_ok && evaluate(p, {false}) == v;
      any = any || v != 0;
    }
    for (const auto& [c, p] : in.rhs) any = any || evaluate(p) != 0;
    if (any) ++r.nonzero;
    std::ostringstream os;
    os << r.name << " closure " << k << ": " << l << " vs " << rv << " on " << in.lhs.front().second.to_string();
    r.expect(l == rv && shortcut_ok, os.str());
  }
}

}  // namespace

CheckReport check_theta_table() {
  CheckReport r{"theta table", 0, 0, {}};
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        Integer v = evaluate(theta_foam(a, b, c));
        r.expect(v == theta_sign(a, b, c), "theta(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                               std::to_string(c) + ") = " + v.str());
      }
  return r;
}

CheckReport check_closed_surfaces() {
  CheckReport r{"closed surfaces", 0, 0, {}};
  for (int g = 0; g <= 3; ++g)
    for (int d = 0; d <= 4; ++d) {
      int expected = g == 0 ? (d == 2 ? -1 : 0) : g == 1 ? (d == 0 ? 3 : 0) : 0;
      std::string tag = "genus " + std::to_string(g) + " dots " + std::to_string(d);
      r.expect(closed_surface_value(g, d) == expected, tag + " (algebra)");
      r.expect(evaluate(closed_surface(g, d)) == expected, tag + " (pre-foam)");
      r.expect(evaluate(closed_surface(g, d), {false}) == expected, tag + " (no shortcut)");
    }
  return r;
}

std::vector<CheckReport> check_local_relations(int closures, unsigned seed) {
  ClosureGenerator gen(seed);
  std::vector<CheckReport> out;

  // A tube joining two facets equals minus the sum of its three neck cuttings.
  CheckReport surgery{"surgery formula", 0, 0, {}};
  run_family(surgery, closures, [&] {
    PreFoam ctx = gen.context(3, 1);
    int f = gen.pick(0, static_cast<int>(ctx.facets.size()) - 1);
    // Split of f: which circle slots, genus and dots go to the new piece.
    std::vector<int> moved;
    for (std::size_t c = 0; c < ctx.circles.size(); ++c)
      for (int s = 0; s < 3; ++s)
        if (ctx.circles[c].facets[static_cast<std::size_t>(s)] == f && gen.pick(0, 1)) moved.push_back(static_cast<int>(c) * 3 + s);
    int genus_moved = gen.pick(0, ctx.facets[static_cast<std::size_t>(f)].genus);
    int dots_moved = gen.pick(0, ctx.facets[static_cast<std::size_t>(f)].dots);
    return gen.instance(ctx, [&](const PreFoam& base) {
      PreFoam split = base;
      int g = add_facet(split, genus_moved, std::min(dots_moved, base.facets[static_cast<std::size_t>(f)].dots));
      auto& ff = split.facets[static_cast<std::size_t>(f)];
      ff.genus -= genus_moved;
      ff.dots -= split.facets[static_cast<std::size_t>(g)].dots;
      for (int m : moved) {
        split.circles[static_cast<std::size_t>(m / 3)].facets[static_cast<std::size_t>(m % 3)] = g;
        --ff.slots;
        ++split.facets[static_cast<std::size_t>(g)].slots;
      }
      Instance in;
      in.lhs.push_back({1, base});
      for (int i = 0; i <= 2; ++i) in.rhs.push_back({-1, with_dots(with_dots(split, f, i), g, 2 - i)});
      return in;
    });
  });
  out.push_back(std::move(surgery));

  // A handle on a facet equals -3 times two dots on it.
  CheckReport genus{"genus reduction", 0, 0, {}};
  run_family(genus, closures, [&] {
    PreFoam ctx = gen.context(3, 1);
    int f = gen.pick(0, static_cast<int>(ctx.facets.size()) - 1);
    return gen.instance(ctx, [&](const PreFoam& base) {
      PreFoam handle = base;
      ++handle.facets[static_cast<std::size_t>(f)].genus;
      return Instance{{{1, handle}}, {{-3, with_dots(base, f, 2)}}};
    });
  });
  out.push_back(std::move(genus));

  // Elementary symmetric functions of the three dots around a singular circle vanish.
  CheckReport dots{"dot relations", 0, 0, {}};
  run_family(dots, closures, [&] {
    PreFoam ctx = gen.context(3, 1);
    int c = gen.pick(0, static_cast<int>(ctx.circles.size()) - 1);
    int e = gen.pick(1, 3);
    auto fs = ctx.circles[static_cast<std::size_t>(c)].facets;
    return gen.instance(ctx, [&](const PreFoam& base) {
      Instance in;
      if (e == 1)
        for (int f : fs) in.lhs.push_back({1, with_dots(base, f, 1)});
      else if (e == 2)
        for (int s = 0; s < 3; ++s)
          in.lhs.push_back({1, with_dots(with_dots(base, fs[static_cast<std::size_t>(s)], 1), fs[static_cast<std::size_t>((s + 1) % 3)], 1)});
      else
        in.lhs.push_back({1, with_dots(with_dots(with_dots(base, fs[0], 1), fs[1], 1), fs[2], 1)});
      return in;
    });
  });
  out.push_back(std::move(dots));

  // A bubble with dots (a, b) on its two discs bursts to a multiple of X^{a+b-1}.
  CheckReport bubble{"bubble bursting", 0, 0, {}};
  run_family(bubble, closures, [&] {
    PreFoam ctx = gen.context(3, 0);
    int f = gen.pick(0, static_cast<int>(ctx.facets.size()) - 1);
    int a = gen.pick(0, 2), b = gen.pick(0, 2);
    return gen.instance(ctx, [&](const PreFoam& base) {
      PreFoam lhs = base;
      int d1 = add_facet(lhs, 0, a), d2 = add_facet(lhs, 0, b);
      add_circle(lhs, d1, d2, f);
      Instance in{{{1, lhs}}, {}};
      int s = theta_sign(a, b, 3 - a - b);
      if (s != 0) in.rhs.push_back({-s, with_dots(base, f, a + b - 1)});
      return in;
    });
  });
  out.push_back(std::move(bubble));

  // A dotted disc spanning a singular circle between two facets is removed by capping both.
  CheckReport disc{"disc removal", 0, 0, {}};
  run_family(disc, closures, [&] {
    PreFoam ctx = gen.context(3, 0);
    int n = static_cast<int>(ctx.facets.size());
    int f1 = gen.pick(0, n - 1);
    int f2 = (f1 + gen.pick(1, n - 1)) % n;
    int d = gen.pick(0, 2);
    return gen.instance(ctx, [&](const PreFoam& base) {
      PreFoam lhs = base;
      int disc_facet = add_facet(lhs, 0, d);
      add_circle(lhs, disc_facet, f1, f2);
      Instance in{{{1, lhs}}, {}};
      for (int i1 = 0; i1 <= 2; ++i1) {
        int i2 = 3 - d - i1;
        int s = theta_sign(d, i1, i2);
        if (s != 0) in.rhs.push_back({s, with_dots(with_dots(base, f1, 2 - i1), f2, 2 - i2)});
      }
      return in;
    });
  });
  out.push_back(std::move(disc));
  return out;
}

CheckReport check_digon_identities(const Web& w, int p, int q) {
  CheckReport r{"digon identities", 0, 0, {}};
  std::string at = " at digon (" + std::to_string(p) + "," + std::to_string(q) + ")";
  Move cap = make_digon_cap(w, p, q);
  Web reduced = w;
  apply_to_web(reduced, cap);
  Move cup = inverse(cap);
  WebBasis b = basis(w), b1 = basis(reduced);
  FoamMovie t1 = tau(reduced, 1, cup), t2 = tau(reduced, 2, cup);
  FoamMovie r1 = rho(w, 1, cap), r2 = rho(w, 2, cap);
  IntMatrix id1 = IntMatrix::identity(b1.size()), id = IntMatrix::identity(b.size());
  r.expect(induced_map(t1.then(r1), b1, b1) == id1, "rho1 tau1 = Id" + at);
  r.expect(induced_map(t2.then(r2), b1, b1) == -id1, "rho2 tau2 = -Id" + at);
  r.expect(induced_map(t2.then(r1), b1, b1).is_zero(), "rho1 tau2 = 0" + at);
  r.expect(induced_map(t1.then(r2), b1, b1).is_zero(), "rho2 tau1 = 0" + at);
  r.expect(induced_map(r1.then(t1), b, b) - induced_map(r2.then(t2), b, b) == id, "tau1 rho1 - tau2 rho2 = Id" + at);
  return r;
}

CheckReport check_square_identities(const Web& w, const std::vector<int>& square_edges) {
  CheckReport r{"square identities", 0, 0, {}};
  std::string at = " at square (";
  for (std::size_t i = 0; i < square_edges.size(); ++i) at += (i ? "," : "") + std::to_string(square_edges[i]);
  at += ")";
  SquareMaps m = square_maps(w, square_edges);
  WebBasis b = basis(w), b1 = basis(m.psi[0].target()), b2 = basis(m.psi[1].target());
  r.expect(induced_map(m.nu[0].then(m.psi[0]), b1, b1) == -IntMatrix::identity(b1.size()), "psi1 nu1 = -Id" + at);
  r.expect(induced_map(m.nu[1].then(m.psi[1]), b2, b2) == -IntMatrix::identity(b2.size()), "psi2 nu2 = -Id" + at);
  r.expect(induced_map(m.nu[0].then(m.psi[1]), b1, b2).is_zero(), "psi2 nu1 = 0" + at);
  r.expect(induced_map(m.nu[1].then(m.psi[0]), b2, b1).is_zero(), "psi1 nu2 = 0" + at);
  r.expect(induced_map(m.psi[0].then(m.nu[0]), b, b) + induced_map(m.psi[1].then(m.nu[1]), b, b) ==
               -IntMatrix::identity(b.size()),
           "nu1 psi1 + nu2 psi2 = -Id" + at);
  return r;
}

namespace {

void merge(CheckReport& into, const CheckReport& r) {
  into.checks += r.checks;
  into.nonzero += r.nonzero;
  into.failures.insert(into.failures.end(), r.failures.begin(), r.failures.end());
}

}  // namespace

CheckReport check_digon_suite(const Web& w) {
  CheckReport r{"digon identities", 0, 0, {}};
  for (const auto& f : faces(w).faces)
    if (f.darts.size() == 2) merge(r, check_digon_identities(w, f.darts[0].edge, f.darts[1].edge));
  for (const auto& [id, e] : w.edges()) {
    Move cup = make_digon_cup(w, id, 0);
    Web g = w;
    apply_to_web(g, cup);
    const auto& d = std::get<DigonData>(cup.data);
    merge(r, check_digon_identities(g, d.d1, d.d2));
  }
  return r;
}

CheckReport check_square_suite(const Web& w) {
  CheckReport r{"square identities", 0, 0, {}};
  for (const auto& f : faces(w).faces)
    if (f.darts.size() == 4) merge(r, check_square_identities(w, f.edge_ids()));
  return r;
}

CheckReport check_graded_rank(const Web& w) {
  CheckReport r{"graded rank", 0, 0, {}};
  try {
    WebBasis b = basis(w);
    LaurentPoly rank = b.graded_rank(), bracket = kuperberg_bracket(w);
    r.expect(rank == bracket, "graded rank " + rank.to_string() + " vs bracket " + bracket.to_string());
    Integer det = determinant(gram_matrix(b));
    r.expect(det == 1 || det == -1, "Gram determinant " + det.str());
  } catch (const NotUnimodular& e) {
    r.expect(false, std::string("not unimodular: ") + e.what());
  }
  return r;
}

CheckReport check_ring_relations(const Web& w) {
  CheckReport r{"ring relations", 0, 0, {}};
  WebBasis b = basis(w);
  std::map<int, IntMatrix> x;
  for (const auto& [id, e] : w.edges()) x.emplace(id, edge_dot_action(w, id, b));
  for (const auto& [id, e] : w.edges()) r.expect((x[id] * x[id] * x[id]).is_zero(), "X^3 = 0 on edge " + std::to_string(id));
  for (const auto& [id, v] : w.vertices()) {
    const IntMatrix &i = x[v.ccw[0]], &j = x[v.ccw[1]], &k = x[v.ccw[2]];
    std::string at = " at vertex " + std::to_string(id);
    r.expect((i + j + k).is_zero(), "e1 = 0" + at);
    r.expect((i * j + i * k + j * k).is_zero(), "e2 = 0" + at);
    r.expect((i * j * k).is_zero(), "e3 = 0" + at);
  }
  return r;
}

std::vector<CheckReport> run_selftest(unsigned seed) {
  std::vector<CheckReport> out{check_theta_table(), check_closed_surfaces()};
  for (auto& r : check_local_relations(100, seed)) out.push_back(std::move(r));
  CheckReport digons{"digon identities", 0, 0, {}}, squares{"square identities", 0, 0, {}}, ranks{"graded rank", 0, 0, {}}, rings{"ring relations", 0, 0, {}};
  for (const Web& w : {webs::theta(), webs::digon_chain(2), webs::cube()}) merge(digons, check_digon_suite(w));
  for (const Web& w : {webs::digon_chain(2), webs::cube()}) merge(squares, check_square_suite(w));
  std::vector<Web> corpus{webs::circle(), webs::theta(), webs::digon_chain(2), webs::digon_chain(3), webs::cube()};
  for (const char* pd : {"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"}) {
    LinkDiagram d = parse_pd(pd);
    for (unsigned m = 0; m < (1u << d.size()); ++m) {
      Flattening j(static_cast<std::size_t>(d.size()));
      for (int c = 0; c < d.size(); ++c) j[static_cast<std::size_t>(c)] = (m >> c) & 1u;
      corpus.push_back(flatten(d, j));
    }
  }
  for (const Web& w : corpus) {
    merge(ranks, check_graded_rank(w));
    merge(rings, check_ring_relations(w));
  }
  out.push_back(std::move(digons));
  out.push_back(std::move(squares));
  out.push_back(std::move(ranks));
  out.push_back(std::move(rings));
  return out;
}

}  // namespace sl3
