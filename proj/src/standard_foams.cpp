#include "sl3/standard_foams.hpp"

#include <stdexcept>

namespace sl3 {

const DigonSide kTau2DotSide = DigonSide::Right;
const DigonSide kRho1DotSide = DigonSide::Left;

namespace {

int side_edge(const DigonData& d, DigonSide s) { return s == DigonSide::Left ? d.d1 : d.d2; }

std::vector<Move> square_moves(const Web& w, const std::vector<int>& s, int k) {
  if (s.size() != 4) throw std::invalid_argument("a square face has four edges");
  if (k != 0 && k != 1) throw std::invalid_argument("square resolution index must be 1 or 2");
  int cut = k == 0 ? s[1] : s[0];
  int opposite = k == 0 ? s[3] : s[2];
  Move unzip = make_unzip(w, cut);
  Web mid = w;
  apply_to_web(mid, unzip);
  const auto& zd = std::get<ZipData>(unzip.data);
  // The partner is the strand that absorbed the square's sides next to the cut.
  int side = k == 0 ? s[0] : s[1];
  int partner = -1;
  if (zd.a_low == side || zd.a_high == side) partner = zd.a;
  if (zd.b_low == side || zd.b_high == side) partner = zd.b;
  if (partner < 0 || partner == opposite) throw std::invalid_argument("edges do not bound a square face");
  return {unzip, make_digon_cap(mid, opposite, partner)};
}

}  // namespace

FoamMovie tau(const Web& w, int index, int e, int pos) { return tau(w, index, make_digon_cup(w, e, pos)); }

FoamMovie tau(const Web& w, int index, const Move& cup) {
  if (index != 1 && index != 2) throw std::invalid_argument("tau index must be 1 or 2");
  if (cup.kind != MoveKind::DigonCup) throw std::invalid_argument("tau needs a digon cup");
  FoamMovie u(w);
  u.push(cup);
  if (index == 2) u.push(make_dot(u.target(), side_edge(std::get<DigonData>(cup.data), kTau2DotSide)));
  return u;
}

FoamMovie rho(const Web& w, int index, int p, int q) { return rho(w, index, make_digon_cap(w, p, q)); }

FoamMovie rho(const Web& w, int index, const Move& cap) {
  if (index != 1 && index != 2) throw std::invalid_argument("rho index must be 1 or 2");
  if (cap.kind != MoveKind::DigonCap) throw std::invalid_argument("rho needs a digon cap");
  FoamMovie u(w);
  if (index == 1) u.push(make_dot(w, side_edge(std::get<DigonData>(cap.data), kRho1DotSide)));
  u.push(cap);
  return u;
}

SquareMaps square_maps(const Web& w, const std::vector<int>& square_edges) {
  SquareMaps out;
  for (int k = 0; k < 2; ++k) {
    FoamMovie psi(w);
    for (const auto& m : square_moves(w, square_edges, k)) psi.push(m);
    out.nu[k] = psi.reflect();
    out.psi[k] = std::move(psi);
  }
  return out;
}

std::pair<Web, Web> square_resolutions(const Web& w, const std::vector<int>& square_edges) {
  Web r[2] = {w, w};
  for (int k = 0; k < 2; ++k)
    for (const auto& m : square_moves(w, square_edges, k)) apply_to_web(r[k], m);
  return {std::move(r[0]), std::move(r[1])};
}

FoamMovie basic_zip(const Web& w, int a, int a_pos, int b, int b_pos, int v_id, int w_id,
                    std::vector<int> m_segments) {
  FoamMovie u(w);
  u.push(make_zip(w, a, a_pos, b, b_pos, v_id, w_id, std::move(m_segments)));
  u.push(make_segment_frame(u.target()));
  return u;
}

FoamMovie basic_unzip(const Web& w, int m) {
  FoamMovie u(w);
  u.push(make_unzip(w, m));
  u.push(make_segment_frame(u.target()));
  return u;
}

FoamMovie alpha(const Web& w, int dots, int loop, std::vector<int> segments) {
  FoamMovie u(w);
  u.push(Move{MoveKind::Birth, LoopData{loop, std::move(segments)}});
  for (int i = 0; i < dots; ++i) u.push(make_dot(u.target(), loop));
  return u;
}

FoamMovie beta(const Web& w, int loop, int dots) {
  FoamMovie u(w);
  for (int i = 0; i < dots; ++i) u.push(make_dot(w, loop));
  u.push(make_death(w, loop));
  return u;
}

FoamMovie identity(const Web& w) { return FoamMovie(w); }

FoamMovie dot_on(const Web& w, int e) {
  FoamMovie u(w);
  u.push(make_dot(w, e));
  return u;
}

}  // namespace sl3
