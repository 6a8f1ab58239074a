#include "sl3/foam.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace sl3 {

int FoamState::new_facet(int k) {
  int id = static_cast<int>(parent_.size());
  parent_.push_back(id);
  k_.push_back(k);
  dots_.push_back(0);
  return id;
}

int FoamState::find(int f) const {
  while (parent_[static_cast<std::size_t>(f)] != f) f = parent_[static_cast<std::size_t>(f)];
  return f;
}

int FoamState::unite(int f, int g) {
  f = find(f);
  g = find(g);
  if (f == g) return f;
  if (g < f) std::swap(f, g);
  parent_[static_cast<std::size_t>(g)] = f;
  k_[static_cast<std::size_t>(f)] += k_[static_cast<std::size_t>(g)];
  dots_[static_cast<std::size_t>(f)] += dots_[static_cast<std::size_t>(g)];
  return f;
}

int FoamState::facet_of(int edge) const {
  auto it = edge_facet_.find(edge);
  if (it == edge_facet_.end()) throw std::logic_error("edge " + std::to_string(edge) + " has no facet");
  return find(it->second);
}

std::array<int, 3> FoamState::vertex_triple(int v) const {
  const Vertex& vx = web_.vertex(v);
  std::array<int, 3> t{facet_of(vx.ccw[0]), facet_of(vx.ccw[1]), facet_of(vx.ccw[2])};
  if (!vx.source) std::swap(t[1], t[2]);
  return t;
}

void FoamState::apply(const Move& m) {
  Web next = web_;
  apply_to_web(next, m);
  auto add_k = [&](int f, int dk) { k_[static_cast<std::size_t>(find(f))] += dk; };
  switch (m.kind) {
    case MoveKind::Birth: {
      const auto& d = std::get<LoopData>(m.data);
      edge_facet_[d.loop] = new_facet(1);
      break;
    }
    case MoveKind::Death: {
      const auto& d = std::get<LoopData>(m.data);
      add_k(facet_of(d.loop), 1);
      edge_facet_.erase(d.loop);
      break;
    }
    case MoveKind::Saddle: {
      const auto& d = std::get<SaddleData>(m.data);
      if (d.merging) {
        int f = unite(facet_of(d.first), facet_of(d.second));
        add_k(f, -1);
        edge_facet_.erase(d.first);
        edge_facet_.erase(d.second);
        edge_facet_[d.merged] = f;
      } else {
        int f = facet_of(d.merged);
        add_k(f, -1);
        edge_facet_.erase(d.merged);
        edge_facet_[d.first] = f;
        edge_facet_[d.second] = f;
      }
      break;
    }
    case MoveKind::Dot: {
      ++dots_[static_cast<std::size_t>(facet_of(std::get<DotData>(m.data).edge))];
      break;
    }
    case MoveKind::Zip: {
      const auto& d = std::get<ZipData>(m.data);
      int fa = facet_of(d.a), fb = facet_of(d.b);
      add_k(fa, -1);
      add_k(fb, -1);
      edge_facet_.erase(d.a);
      edge_facet_.erase(d.b);
      edge_facet_[d.a_low] = fa;
      edge_facet_[d.a_high] = fa;
      edge_facet_[d.b_low] = fb;
      edge_facet_[d.b_high] = fb;
      edge_facet_[d.m] = new_facet(0);
      partner_[d.v] = d.w;
      partner_[d.w] = d.v;
      break;
    }
    case MoveKind::Unzip: {
      const auto& d = std::get<ZipData>(m.data);
      auto triple = vertex_triple(d.v);
      add_k(facet_of(d.m), 1);
      int fa = unite(facet_of(d.a_low), facet_of(d.a_high));
      int fb = unite(facet_of(d.b_low), facet_of(d.b_high));
      for (int id : {d.a_low, d.a_high, d.b_low, d.b_high, d.m}) edge_facet_.erase(id);
      edge_facet_[d.a] = find(fa);
      edge_facet_[d.b] = find(fb);
      int pv = partner_.at(d.v), pw = partner_.at(d.w);
      partner_.erase(d.v);
      partner_.erase(d.w);
      if (pv == d.w) {
        circles_.push_back(triple);
      } else {
        partner_[pv] = pw;
        partner_[pw] = pv;
      }
      break;
    }
    case MoveKind::DigonCup: {
      const auto& d = std::get<DigonData>(m.data);
      int fe = facet_of(d.e);
      add_k(fe, -1);
      edge_facet_.erase(d.e);
      edge_facet_[d.e_a] = fe;
      edge_facet_[d.e_b] = fe;
      edge_facet_[d.d1] = new_facet(0);
      edge_facet_[d.d2] = new_facet(0);
      partner_[d.x] = d.y;
      partner_[d.y] = d.x;
      break;
    }
    case MoveKind::DigonCap: {
      const auto& d = std::get<DigonData>(m.data);
      auto triple = vertex_triple(d.x);
      add_k(facet_of(d.d1), 1);
      add_k(facet_of(d.d2), 1);
      int fe = unite(facet_of(d.e_a), facet_of(d.e_b));
      for (int id : {d.e_a, d.e_b, d.d1, d.d2}) edge_facet_.erase(id);
      edge_facet_[d.e] = fe;
      int px = partner_.at(d.x), py = partner_.at(d.y);
      partner_.erase(d.x);
      partner_.erase(d.y);
      if (px == d.y) {
        circles_.push_back(triple);
      } else {
        partner_[px] = py;
        partner_[py] = px;
      }
      break;
    }
    case MoveKind::Frame: {
      const auto& f = std::get<FrameData>(m.data);
      auto emap = [&](int id) {
        auto it = f.edge_map.find(id);
        return it == f.edge_map.end() ? id : it->second;
      };
      auto vmap = [&](int id) {
        auto it = f.vertex_map.find(id);
        return it == f.vertex_map.end() ? id : it->second;
      };
      std::map<int, int> ef, pr;
      for (auto [e, fc] : edge_facet_) ef[emap(e)] = fc;
      for (auto [v, w] : partner_) pr[vmap(v)] = vmap(w);
      edge_facet_ = std::move(ef);
      partner_ = std::move(pr);
      break;
    }
  }
  web_ = std::move(next);
}

PreFoam FoamState::glue(const FoamState& a, const FoamState& b) {
  if (!(a.web_ == b.web_)) throw std::invalid_argument("glued foams end on different webs");
  const int off = static_cast<int>(a.parent_.size());
  const std::size_t n = a.parent_.size() + b.parent_.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int f) {
    while (parent[static_cast<std::size_t>(f)] != f) {
      parent[static_cast<std::size_t>(f)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(f)])];
      f = parent[static_cast<std::size_t>(f)];
    }
    return f;
  };
  auto unite = [&](int f, int g) {
    f = find(f);
    g = find(g);
    if (f != g) parent[static_cast<std::size_t>(std::max(f, g))] = std::min(f, g);
  };
  for (std::size_t i = 0; i < a.parent_.size(); ++i) unite(static_cast<int>(i), a.parent_[i]);
  for (std::size_t i = 0; i < b.parent_.size(); ++i) unite(static_cast<int>(i) + off, b.parent_[i] + off);
  for (const auto& [e, f] : a.edge_facet_) unite(f, b.edge_facet_.at(e) + off);

  std::map<int, int> index;
  PreFoam p;
  auto slot = [&](int raw) {
    int r = find(raw);
    auto [it, fresh] = index.emplace(r, static_cast<int>(index.size()));
    if (fresh) p.facets.emplace_back();
    return it->second;
  };
  std::vector<int> chi;
  auto grow = [&]() {
    if (chi.size() < p.facets.size()) chi.resize(p.facets.size(), 0);
  };
  for (std::size_t i = 0; i < a.parent_.size(); ++i) {
    if (a.parent_[i] != static_cast<int>(i)) continue;
    int s = slot(static_cast<int>(i));
    grow();
    chi[static_cast<std::size_t>(s)] += a.k_[i];
    p.facets[static_cast<std::size_t>(s)].dots += a.dots_[i];
  }
  for (std::size_t i = 0; i < b.parent_.size(); ++i) {
    if (b.parent_[i] != static_cast<int>(i)) continue;
    int s = slot(static_cast<int>(i) + off);
    grow();
    chi[static_cast<std::size_t>(s)] += b.k_[i];
    p.facets[static_cast<std::size_t>(s)].dots += b.dots_[i];
  }
  for (const auto& [id, e] : a.web_.edges())
    if (!e.is_loop()) ++chi[static_cast<std::size_t>(slot(a.edge_facet_.at(id)))];

  auto add_circle = [&](std::array<int, 3> t, int shift) {
    SingularCircle c;
    for (int k = 0; k < 3; ++k) {
      c.facets[static_cast<std::size_t>(k)] = slot(t[static_cast<std::size_t>(k)] + shift);
      ++p.facets[static_cast<std::size_t>(c.facets[static_cast<std::size_t>(k)])].slots;
    }
    p.circles.push_back(c);
  };
  for (const auto& t : a.circles_) add_circle(t, 0);
  for (const auto& t : b.circles_) add_circle(t, off);
  std::set<int> seen;
  for (const auto& [v, vx] : a.web_.vertices()) {
    if (seen.count(v)) continue;
    int cur = v;
    while (true) {
      seen.insert(cur);
      int x = a.partner_.at(cur);
      seen.insert(x);
      int y = b.partner_.at(x);
      if (y == v) break;
      if (seen.count(y)) throw std::logic_error("singular arcs do not close into circles");
      cur = y;
    }
    add_circle(a.vertex_triple(v), 0);
  }
  grow();
  for (std::size_t i = 0; i < p.facets.size(); ++i) {
    auto& f = p.facets[i];
    int twice_genus = 2 - chi[i] - f.slots;
    if (twice_genus < 0 || twice_genus % 2 != 0)
      throw std::logic_error("facet Euler characteristic violates the genus parity");
    f.genus = twice_genus / 2;
  }
  return p;
}

PreFoam FoamState::close() const {
  if (!web_.empty()) throw std::invalid_argument("foam is not closed");
  return glue(*this, FoamState{});
}

FoamMovie::FoamMovie(Web source) { frames_.push_back(std::move(source)); }

FoamMovie& FoamMovie::push(const Move& m) {
  Web next = frames_.back();
  apply_to_web(next, m);
  next.validate();
  frames_.push_back(std::move(next));
  moves_.push_back(m);
  return *this;
}

FoamMovie FoamMovie::then(const FoamMovie& next) const {
  if (!(target() == next.source())) throw std::invalid_argument("composed movies do not share a frame");
  FoamMovie out = *this;
  out.frames_.insert(out.frames_.end(), next.frames_.begin() + 1, next.frames_.end());
  out.moves_.insert(out.moves_.end(), next.moves_.begin(), next.moves_.end());
  return out;
}

FoamMovie FoamMovie::reflect() const {
  FoamMovie out;
  out.frames_.assign(frames_.rbegin(), frames_.rend());
  for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) out.moves_.push_back(inverse(*it));
  return out;
}

int FoamMovie::degree() const {
  int d = 0;
  for (const auto& m : moves_) d += move_degree(m);
  return d;
}

FoamMovie compose(const FoamMovie& u, const FoamMovie& v) { return u.then(v); }
FoamMovie reflect(const FoamMovie& u) { return u.reflect(); }
int degree(const FoamMovie& u) { return u.degree(); }

FoamState run(FoamState s, const FoamMovie& u) {
  if (!(s.web() == u.source())) throw std::invalid_argument("movie does not start on the state's frame");
  for (const auto& m : u.moves()) s.apply(m);
  return s;
}

FoamState run_from_empty(const FoamMovie& u) { return run(FoamState{}, u); }

PreFoam extract_prefoam(const FoamMovie& u) {
  if (!u.closed()) throw std::invalid_argument("movie is not closed");
  return run_from_empty(u).close();
}

Integer evaluate_closed(const FoamMovie& u, EvalOptions opt) { return evaluate(extract_prefoam(u), opt); }

}  // namespace sl3
