#include "sl3/web_basis.hpp"

#include <sstream>
#include <stdexcept>

#include "sl3/parallel.hpp"
#include "sl3/standard_foams.hpp"

namespace sl3 {

LaurentPoly WebBasis::graded_rank() const {
  LaurentPoly r;
  for (int d : degrees) r += LaurentPoly::q(d);
  return r;
}

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// Appends `ext` (which starts on sub.web) to every basis foam of `sub`.
void extend(WebBasis& out, const WebBasis& sub, const FoamMovie& ext) {
  int deg = ext.degree();
  for (int i = 0; i < sub.size(); ++i) {
    out.foams.push_back(sub.foams[static_cast<std::size_t>(i)].then(ext));
    out.degrees.push_back(sub.degrees[static_cast<std::size_t>(i)] + deg);
    out.states.push_back(run(sub.states[static_cast<std::size_t>(i)], ext));
  }
}

}  // namespace

WebBasis basis_foams(const Web& w) {
  WebBasis out;
  out.web = w;
  Reduction r = find_reduction(w);
  switch (r.kind) {
    case ReductionKind::Empty: {
      out.foams.emplace_back(w);
      out.degrees.push_back(0);
      out.states.emplace_back();
      break;
    }
    case ReductionKind::FreeLoop: {
      Web rest = w;
      rest.remove_edge(r.loop);
      WebBasis sub = basis_foams(rest);
      out.trace.push_back("loop " + std::to_string(r.loop));
      for (int d = 0; d < 3; ++d) extend(out, sub, alpha(rest, d, r.loop, w.edge(r.loop).segments));
      out.trace.insert(out.trace.end(), sub.trace.begin(), sub.trace.end());
      break;
    }
    case ReductionKind::DigonFace: {
      auto e = r.face.edge_ids();
      Move cap = make_digon_cap(w, e[0], e[1]);
      Web rest = w;
      apply_to_web(rest, cap);
      WebBasis sub = basis_foams(rest);
      out.trace.push_back("digon " + join(e));
      Move cup = inverse(cap);
      for (int k = 1; k <= 2; ++k) extend(out, sub, tau(rest, k, cup));
      out.trace.insert(out.trace.end(), sub.trace.begin(), sub.trace.end());
      break;
    }
    case ReductionKind::SquareFace: {
      auto e = r.face.edge_ids();
      SquareMaps maps = square_maps(w, e);
      out.trace.push_back("square " + join(e));
      for (int k = 0; k < 2; ++k) {
        WebBasis sub = basis_foams(maps.psi[k].target());
        extend(out, sub, maps.nu[k]);
        out.trace.insert(out.trace.end(), sub.trace.begin(), sub.trace.end());
      }
      break;
    }
  }
  return out;
}

Integer pairing(const FoamState& a, const FoamState& b) { return evaluate(FoamState::glue(a, b)); }

WebBasis basis(const Web& w) {
  WebBasis b = basis_foams(w);
  std::map<int, std::vector<int>> by_degree;
  for (int i = 0; i < b.size(); ++i) by_degree[b.degrees[static_cast<std::size_t>(i)]].push_back(i);
  std::vector<int> degs;
  for (const auto& [d, idx] : by_degree) degs.push_back(d);
  std::vector<PairingBlock> blocks(degs.size());
  parallel_for(static_cast<int>(degs.size()), [&](int t) {
    int d = degs[static_cast<std::size_t>(t)];
    PairingBlock& pb = blocks[static_cast<std::size_t>(t)];
    pb.cols = by_degree.at(d);
    auto it = by_degree.find(-d);
    if (it == by_degree.end()) throw NotUnimodular("no basis elements of opposite degree " + std::to_string(-d));
    pb.rows = it->second;
    if (pb.rows.size() != pb.cols.size()) throw NotUnimodular("pairing block is not square");
    const int n = static_cast<int>(pb.rows.size());
    IntMatrix m(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        m(j, k) = pairing(b.states[static_cast<std::size_t>(pb.cols[static_cast<std::size_t>(k)])],
                          b.states[static_cast<std::size_t>(pb.rows[static_cast<std::size_t>(j)])]);
    pb.inverse = unimodular_inverse(m);
  });
  for (std::size_t t = 0; t < degs.size(); ++t) b.blocks.emplace(degs[t], std::move(blocks[t]));
  return b;
}

IntMatrix gram_matrix(const WebBasis& b) {
  const int n = b.size();
  IntMatrix g(n, n);
  parallel_for(n, [&](int j) {
    for (int k = 0; k < n; ++k)
      if (b.degrees[static_cast<std::size_t>(j)] + b.degrees[static_cast<std::size_t>(k)] == 0)
        g(j, k) = pairing(b.states[static_cast<std::size_t>(k)], b.states[static_cast<std::size_t>(j)]);
  });
  return g;
}

IntMatrix induced_map(const FoamMovie& u, const WebBasis& from, const WebBasis& to) {
  if (!(u.source() == from.web)) throw std::invalid_argument("foam does not start on the source basis web");
  if (!(u.target() == to.web)) throw std::invalid_argument("foam does not end on the target basis web");
  const int du = u.degree();
  IntMatrix out(to.size(), from.size());
  parallel_for(from.size(), [&](int i) {
    FoamState s = run(from.states[static_cast<std::size_t>(i)], u);
    int e = from.degrees[static_cast<std::size_t>(i)] + du;
    auto it = to.blocks.find(e);
    if (it == to.blocks.end()) return;
    const PairingBlock& pb = it->second;
    const int n = static_cast<int>(pb.rows.size());
    std::vector<Integer> v(static_cast<std::size_t>(n));
    bool any = false;
    for (int j = 0; j < n; ++j) {
      v[static_cast<std::size_t>(j)] = pairing(s, to.states[static_cast<std::size_t>(pb.rows[static_cast<std::size_t>(j)])]);
      any = any || v[static_cast<std::size_t>(j)] != 0;
    }
    if (!any) return;
    for (int k = 0; k < n; ++k) {
      Integer c = 0;
      for (int j = 0; j < n; ++j)
        if (v[static_cast<std::size_t>(j)] != 0) c += pb.inverse(k, j) * v[static_cast<std::size_t>(j)];
      out(pb.cols[static_cast<std::size_t>(k)], i) = c;
    }
  });
  return out;
}

IntMatrix edge_dot_action(const Web& w, int edge, const WebBasis& b) { return induced_map(dot_on(w, edge), b, b); }

}  // namespace sl3
