#include "sl3/chain_complex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "sl3/parallel.hpp"
#include "sl3/standard_foams.hpp"

namespace sl3 {

namespace {

int popcount(unsigned j) { return std::popcount(j); }

// Edge holding segment s, with the index of s in its segment list.
std::pair<int, int> locate(const Web& w, int s) {
  for (const auto& [id, e] : w.edges()) {
    auto it = std::find(e.segments.begin(), e.segments.end(), s);
    if (it != e.segments.end()) return {id, static_cast<int>(it - e.segments.begin())};
  }
  throw std::logic_error("segment " + std::to_string(s) + " not found in web");
}

}  // namespace

int Cube::sign(unsigned j, int b) { return popcount(j & ((1u << b) - 1u)) % 2 == 0 ? 1 : -1; }

int Cube::shift(unsigned j) const { return 3 * diagram.negative() - 2 * diagram.positive() - popcount(j); }

Flattening mask_to_flattening(unsigned mask, int n) {
  Flattening f(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) f[static_cast<std::size_t>(c)] = (mask >> c) & 1u;
  return f;
}

FoamMovie cube_edge_foam(const LinkDiagram& d, unsigned j, int b) {
  const int n = d.size();
  if ((j >> b) & 1u) throw std::invalid_argument("crossing already in the flattening");
  Web from = flatten(d, mask_to_flattening(j, n));
  Web to = flatten(d, mask_to_flattening(j | (1u << b), n));
  const auto& cr = d.crossings[static_cast<std::size_t>(b)];
  FoamMovie u;
  if (cr.sign() > 0) {
    auto in = in_positions(cr);
    auto out = out_positions(cr);
    auto arc = [&](int p) { return cr.arcs[static_cast<std::size_t>(p)]; };
    auto [a, ai] = locate(from, arc(in[0]));
    auto [bb, bi] = locate(from, arc(in[1]));
    int a_pos = locate(from, arc(out[1])).second;
    int b_pos = locate(from, arc(out[0])).second;
    (void)ai;
    (void)bi;
    u = basic_zip(from, a, a_pos, bb, b_pos, 2 * b, 2 * b + 1, {2 * n + b});
  } else {
    u = basic_unzip(from, 2 * n + b);
  }
  if (!(u.target() == to)) throw std::logic_error("cube edge foam does not end on the expected flattening");
  return u;
}

Cube build_cube(const LinkDiagram& d) {
  const int n = d.size();
  if (n > 20) throw std::invalid_argument("too many crossings for the cube");
  Cube c;
  c.diagram = d;
  const unsigned count = 1u << n;
  c.bases.resize(count);
  parallel_for(static_cast<int>(count), [&](int m) {
    c.bases[static_cast<std::size_t>(m)] = basis(flatten(d, mask_to_flattening(static_cast<unsigned>(m), n)));
  });
  std::vector<std::pair<unsigned, int>> keys;
  for (unsigned j = 0; j < count; ++j)
    for (int b = 0; b < n; ++b)
      if (!((j >> b) & 1u)) keys.emplace_back(j, b);
  std::vector<IntMatrix> maps(keys.size());
  parallel_for(static_cast<int>(keys.size()), [&](int k) {
    auto [j, b] = keys[static_cast<std::size_t>(k)];
    maps[static_cast<std::size_t>(k)] =
        induced_map(cube_edge_foam(d, j, b), c.bases[j], c.bases[j | (1u << b)]);
  });
  for (std::size_t k = 0; k < keys.size(); ++k) c.edges.emplace(keys[k], std::move(maps[k]));
  return c;
}

int check_anticommutativity(const Cube& c) {
  const int n = c.crossings();
  int squares = 0;
  for (unsigned j = 0; j < (1u << n); ++j)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (((j >> a) & 1u) || ((j >> b) & 1u)) continue;
        unsigned ja = j | (1u << a), jb = j | (1u << b);
        IntMatrix p = c.edges.at({ja, b}) * c.edges.at({j, a});
        IntMatrix q = c.edges.at({jb, a}) * c.edges.at({j, b});
        IntMatrix s = Integer(Cube::sign(ja, b) * Cube::sign(j, a)) * p + Integer(Cube::sign(jb, a) * Cube::sign(j, b)) * q;
        if (!s.is_zero())
          throw std::logic_error("cube square does not anticommute at J=" + std::to_string(j) + " crossings " +
                                 std::to_string(a) + "," + std::to_string(b));
        ++squares;
      }
  return squares;
}

GradedChainComplex totalize(const Cube& c) {
  const int n = c.crossings();
  const int pm = c.diagram.negative();
  GradedChainComplex out;
  out.imin = -pm;
  out.imax = n - pm;
  const int levels = n + 1;
  const unsigned count = 1u << n;
  // Index of each generator (J, k) inside its (i, q) group.
  std::vector<std::vector<int>> pos(count);
  for (unsigned j = 0; j < count; ++j) {
    const auto& bs = c.bases[j];
    pos[j].resize(static_cast<std::size_t>(bs.size()));
    for (int k = 0; k < bs.size(); ++k) {
      int q = bs.degrees[static_cast<std::size_t>(k)] + c.shift(j);
      auto& slice = out.slices[q];
      if (slice.dims.empty()) slice.dims.assign(static_cast<std::size_t>(levels), 0);
      pos[j][static_cast<std::size_t>(k)] = slice.dims[static_cast<std::size_t>(popcount(j))]++;
    }
  }
  for (auto& [q, slice] : out.slices)
    for (int l = 0; l + 1 < levels; ++l)
      slice.d.emplace_back(slice.dims[static_cast<std::size_t>(l + 1)], slice.dims[static_cast<std::size_t>(l)]);
  for (unsigned j = 0; j < count; ++j) {
    const auto& bs = c.bases[j];
    for (int b = 0; b < n; ++b) {
      if ((j >> b) & 1u) continue;
      unsigned jb = j | (1u << b);
      const auto& m = c.edges.at({j, b});
      const int s = Cube::sign(j, b);
      for (int k = 0; k < bs.size(); ++k) {
        int q = bs.degrees[static_cast<std::size_t>(k)] + c.shift(j);
        for (int l = 0; l < m.rows(); ++l) {
          if (m(l, k) == 0) continue;
          int q2 = c.bases[jb].degrees[static_cast<std::size_t>(l)] + c.shift(jb);
          if (q2 != q) throw std::logic_error("cube edge map does not preserve the q-grading");
          auto& entry = out.slices.at(q).d[static_cast<std::size_t>(popcount(j))](
              pos[jb][static_cast<std::size_t>(l)], pos[j][static_cast<std::size_t>(k)]);
          entry += s * m(l, k);
        }
      }
    }
  }
  return out;
}

GradedChainComplex build_complex(const LinkDiagram& d) { return totalize(build_cube(d)); }

void GradedChainComplex::check_d_squared() const {
  for (const auto& [q, slice] : slices)
    for (std::size_t l = 0; l + 1 < slice.d.size(); ++l)
      if (!(slice.d[l + 1] * slice.d[l]).is_zero())
        throw std::logic_error("d^2 != 0 at i=" + std::to_string(imin + static_cast<int>(l)) + " q=" + std::to_string(q));
}

LaurentPoly GradedChainComplex::euler_characteristic() const {
  LaurentPoly chi;
  for (const auto& [q, slice] : slices)
    for (std::size_t l = 0; l < slice.dims.size(); ++l) {
      int i = imin + static_cast<int>(l);
      int sgn = i % 2 == 0 ? 1 : -1;
      chi += LaurentPoly::monomial(Integer(sgn * slice.dims[l]), q);
    }
  return chi;
}

BigradedHomology homology(const GradedChainComplex& c) {
  BigradedHomology h;
  for (const auto& [q, slice] : c.slices) {
    const std::size_t levels = slice.dims.size();
    std::vector<std::vector<Integer>> inv(slice.d.size());
    parallel_for(static_cast<int>(slice.d.size()),
                 [&](int l) { inv[static_cast<std::size_t>(l)] = smith_invariants(slice.d[static_cast<std::size_t>(l)]); });
    for (std::size_t l = 0; l < levels; ++l) {
      HomologyGroup g;
      int out_rank = l < inv.size() ? static_cast<int>(inv[l].size()) : 0;
      int in_rank = l > 0 ? static_cast<int>(inv[l - 1].size()) : 0;
      g.rank = slice.dims[l] - out_rank - in_rank;
      if (l > 0)
        for (const auto& t : inv[l - 1]) {
          Integer a = abs(t);
          if (a > 1) g.torsion.push_back(a);
        }
      if (g.rank < 0) throw std::logic_error("negative homology rank");
      if (g.rank > 0 || !g.torsion.empty()) h[{c.imin + static_cast<int>(l), q}] = std::move(g);
    }
  }
  return h;
}

LaurentPoly euler_characteristic(const BigradedHomology& h) {
  LaurentPoly chi;
  for (const auto& [ij, g] : h) chi += LaurentPoly::monomial(Integer(ij.first % 2 == 0 ? g.rank : -g.rank), ij.second);
  return chi;
}

std::string to_string(const BigradedHomology& h) {
  std::ostringstream os;
  for (const auto& [ij, g] : h) {
    os << ij.first << ' ' << ij.second << ' ' << g.rank;
    for (const auto& t : g.torsion) os << " Z/" << t;
    os << '\n';
  }
  return os.str();
}

namespace {

std::string describe(std::pair<int, int> ij, const HomologyGroup* g) {
  std::ostringstream os;
  if (!g) return "0";
  os << "Z^" << g->rank;
  for (const auto& t : g->torsion) os << "+Z/" << t;
  (void)ij;
  return os.str();
}

}  // namespace

InvarianceReport check_invariance(const LinkDiagram& d1, const LinkDiagram& d2) {
  InvarianceReport r;
  r.first = homology(build_complex(d1));
  r.second = homology(build_complex(d2));
  std::map<std::pair<int, int>, bool> keys;
  for (const auto& [k, g] : r.first) keys[k] = true;
  for (const auto& [k, g] : r.second) keys[k] = true;
  for (const auto& [k, unused] : keys) {
    auto a = r.first.find(k);
    auto b = r.second.find(k);
    const HomologyGroup* ga = a == r.first.end() ? nullptr : &a->second;
    const HomologyGroup* gb = b == r.second.end() ? nullptr : &b->second;
    if (ga && gb && *ga == *gb) continue;
    r.differences.push_back("(" + std::to_string(k.first) + "," + std::to_string(k.second) + "): " + describe(k, ga) +
                            " vs " + describe(k, gb));
  }
  r.pass = r.differences.empty();
  return r;
}

}  // namespace sl3
