#include "sl3/moves.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace sl3 {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

void require_fresh_edge(const Web& w, int id) {
  if (w.has_edge(id)) fail("edge id " + std::to_string(id) + " already in use");
}

void require_fresh_vertex(const Web& w, int id) {
  if (w.has_vertex(id)) fail("vertex id " + std::to_string(id) + " already in use");
}

bool same_rotation(const std::array<int, 3>& ccw, int p, int q, int r) {
  for (int k = 0; k < 3; ++k)
    if (ccw[k] == p && ccw[(k + 1) % 3] == q && ccw[(k + 2) % 3] == r) return true;
  return false;
}

std::vector<int> rotated(const std::vector<int>& s, std::size_t start) {
  std::vector<int> out(s.begin() + static_cast<long>(start), s.end());
  out.insert(out.end(), s.begin(), s.begin() + static_cast<long>(start));
  return out;
}

// Index of the smallest label (loop normalization offset).
std::size_t min_offset(const std::vector<int>& s) {
  if (s.empty()) return 0;
  return static_cast<std::size_t>(std::min_element(s.begin(), s.end()) - s.begin());
}

std::vector<int> loop_normal(const std::vector<int>& s) { return rotated(s, min_offset(s)); }

// ---- zip planning ------------------------------------------------------

enum Strand { kNone = -1, kA = 0, kB = 1 };

struct Piece {
  int parent = 0;
  std::vector<int> segments;
  Strand starts_at = kNone;  // begins at w on this strand's high side
  Strand ends_at = kNone;    // ends at v on this strand's low side
};

std::vector<Piece> plan_cuts(const Web& w, int a, int a_pos, int b, int b_pos) {
  if (a == b && a_pos == b_pos) fail("zip strands coincide");
  std::vector<Piece> pieces;
  std::vector<int> parents = {a};
  if (b != a) parents.push_back(b);
  for (int eid : parents) {
    const Edge& e = w.edge(eid);
    std::vector<std::pair<int, Strand>> cuts;
    if (eid == a) cuts.emplace_back(a_pos, kA);
    if (eid == b) cuts.emplace_back(b_pos, kB);
    std::sort(cuts.begin(), cuts.end());
    int len = static_cast<int>(e.segments.size());
    for (auto [p, s] : cuts) {
      if (p < 0 || p > len || (e.is_loop() && len > 0 && p == len))
        fail("cut position out of range on edge " + std::to_string(eid));
    }
    if (!e.is_loop()) {
      int prev = 0;
      Strand prev_strand = kNone;
      for (auto [p, s] : cuts) {
        Piece pc{eid, {e.segments.begin() + prev, e.segments.begin() + p}, prev_strand, s};
        pieces.push_back(std::move(pc));
        prev = p;
        prev_strand = s;
      }
      pieces.push_back(Piece{eid, {e.segments.begin() + prev, e.segments.end()}, prev_strand, kNone});
    } else {
      for (std::size_t i = 0; i < cuts.size(); ++i) {
        auto [p, s] = cuts[i];
        auto [q, t] = cuts[(i + 1) % cuts.size()];
        std::vector<int> segs;
        if (len > 0) {
          int k = p;
          do {
            segs.push_back(e.segments[static_cast<std::size_t>(k)]);
            k = (k + 1) % len;
          } while (k != q);
        }
        pieces.push_back(Piece{eid, std::move(segs), s, t});
      }
    }
  }
  return pieces;
}

// Names each piece from the zip data; checks that doubly named pieces agree.
std::vector<int> name_pieces(const std::vector<Piece>& pieces, const ZipData& d) {
  std::vector<int> names;
  for (const auto& pc : pieces) {
    std::optional<int> name;
    auto assign = [&](int id) {
      if (name && *name != id) fail("inconsistent zip piece names");
      name = id;
    };
    if (pc.ends_at == kA) assign(d.a_low);
    if (pc.ends_at == kB) assign(d.b_low);
    if (pc.starts_at == kA) assign(d.a_high);
    if (pc.starts_at == kB) assign(d.b_high);
    if (!name) fail("zip piece without a name");
    names.push_back(*name);
  }
  return names;
}

void apply_zip(Web& w, const ZipData& d) {
  auto pieces = plan_cuts(w, d.a, d.a_pos, d.b, d.b_pos);
  auto names = name_pieces(pieces, d);
  std::map<int, Edge> originals;
  for (int id : {d.a, d.b}) originals.emplace(id, w.edge(id));
  for (auto& [id, e] : originals) w.remove_edge(id);
  require_fresh_vertex(w, d.v);
  require_fresh_vertex(w, d.w);
  require_fresh_edge(w, d.m);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& pc = pieces[i];
    const Edge& parent = originals.at(pc.parent);
    Edge ne;
    ne.id = names[i];
    ne.segments = pc.segments;
    ne.tail = pc.starts_at == kNone ? parent.tail : d.w;
    ne.head = pc.ends_at == kNone ? parent.head : d.v;
    require_fresh_edge(w, ne.id);
    if (pc.starts_at == kNone && parent.tail >= 0) w.replace_in_rotation(parent.tail, parent.id, ne.id);
    if (pc.ends_at == kNone && parent.head >= 0) w.replace_in_rotation(parent.head, parent.id, ne.id);
    w.add_edge(std::move(ne));
  }
  w.add_edge(Edge{d.m, d.w, d.v, d.m_segments});
  w.add_vertex(Vertex{d.v, false, {d.m, d.a_low, d.b_low}});
  w.add_vertex(Vertex{d.w, true, {d.b_high, d.a_high, d.m}});
  w.normalize();
}

struct UnzipResult {
  int a_pos = 0, b_pos = 0;
  bool same_edge = false;
};

UnzipResult apply_unzip_impl(Web& w, const ZipData& d, bool check_positions) {
  const Edge& m = w.edge(d.m);
  if (m.tail != d.w || m.head != d.v) fail("unzip edge does not run from w to v");
  const Vertex& v = w.vertex(d.v);
  const Vertex& wv = w.vertex(d.w);
  if (v.source || !wv.source) fail("unzip endpoints have wrong types");
  if (!same_rotation(v.ccw, d.m, d.a_low, d.b_low)) fail("unzip sink rotation mismatch");
  if (!same_rotation(wv.ccw, d.b_high, d.a_high, d.m)) fail("unzip source rotation mismatch");
  if (d.m_segments != m.segments) fail("unzip middle segments mismatch");

  std::map<int, Edge> piece;
  for (int id : {d.a_low, d.a_high, d.b_low, d.b_high}) piece.emplace(id, w.edge(id));
  auto next_of = [&](int id) { return id == d.a_low ? d.a_high : d.b_high; };
  auto is_low = [&](int id) { return id == d.a_low || id == d.b_low; };
  auto is_high = [&](int id) { return id == d.a_high || id == d.b_high; };

  struct Chain {
    std::vector<int> members;
    std::vector<int> segments;
    std::map<int, int> cut_at;  // low piece id -> segment offset of the glue point
    bool loop = false;
  };
  std::vector<Chain> chains;
  std::set<int> used;
  auto walk = [&](int start, bool loop) {
    Chain c;
    c.loop = loop;
    int cur = start;
    while (true) {
      used.insert(cur);
      c.members.push_back(cur);
      const auto& segs = piece.at(cur).segments;
      c.segments.insert(c.segments.end(), segs.begin(), segs.end());
      if (!is_low(cur)) break;
      c.cut_at[cur] = static_cast<int>(c.segments.size());
      cur = next_of(cur);
      if (loop && cur == start) break;
    }
    chains.push_back(std::move(c));
  };
  for (int id : {d.a_low, d.b_low, d.a_high, d.b_high})
    if (!used.count(id) && !is_high(id)) walk(id, false);
  for (int id : {d.a_low, d.b_low})
    if (!used.count(id)) walk(id, true);

  UnzipResult res;
  std::map<int, int> chain_name;
  for (std::size_t ci = 0; ci < chains.size(); ++ci) {
    auto& c = chains[ci];
    bool has_a = c.cut_at.count(d.a_low) != 0;
    bool has_b = c.cut_at.count(d.b_low) != 0;
    int name = has_a ? d.a : d.b;
    if (has_a && has_b) {
      if (d.a != d.b) fail("unzip merges both strands into one edge but names differ");
      res.same_edge = true;
    }
    if (c.loop) {
      std::size_t off = min_offset(c.segments);
      int len = static_cast<int>(c.segments.size());
      for (auto& [id, pos] : c.cut_at) pos = len == 0 ? 0 : ((pos - static_cast<int>(off)) % len + len) % len;
      c.segments = rotated(c.segments, off);
    }
    if (has_a) res.a_pos = c.cut_at.at(d.a_low);
    if (has_b) res.b_pos = c.cut_at.at(d.b_low);
    chain_name[static_cast<int>(ci)] = name;
  }
  if (!res.same_edge && d.a == d.b) fail("unzip strands name the same edge but stay separate");
  if (check_positions && (res.a_pos != d.a_pos || res.b_pos != d.b_pos)) fail("unzip cut positions mismatch");

  // rebuild
  std::map<int, std::pair<int, int>> ends;  // chain -> (tail, head)
  for (std::size_t ci = 0; ci < chains.size(); ++ci) {
    const auto& c = chains[ci];
    if (c.loop) {
      ends[static_cast<int>(ci)] = {-1, -1};
    } else {
      ends[static_cast<int>(ci)] = {piece.at(c.members.front()).tail, piece.at(c.members.back()).head};
    }
  }
  for (auto& [id, e] : piece) w.remove_edge(id);
  w.remove_edge(d.m);
  w.remove_vertex(d.v);
  w.remove_vertex(d.w);
  for (std::size_t ci = 0; ci < chains.size(); ++ci) {
    const auto& c = chains[ci];
    int name = chain_name[static_cast<int>(ci)];
    auto [t, h] = ends[static_cast<int>(ci)];
    require_fresh_edge(w, name);
    if (t >= 0) w.replace_in_rotation(t, c.members.front(), name);
    if (h >= 0) w.replace_in_rotation(h, c.members.back(), name);
    w.add_edge(Edge{name, t, h, c.segments});
  }
  w.normalize();
  return res;
}

void apply_cup(Web& w, const DigonData& d) {
  Edge e = w.edge(d.e);
  int len = static_cast<int>(e.segments.size());
  if (d.e_pos < 0 || d.e_pos > len || (e.is_loop() && len > 0 && d.e_pos == len))
    fail("digon position out of range");
  w.remove_edge(d.e);
  require_fresh_vertex(w, d.x);
  require_fresh_vertex(w, d.y);
  for (int id : {d.d1, d.d2}) require_fresh_edge(w, id);
  if (d.d1 == d.d2) fail("digon edges must differ");
  auto pos = static_cast<std::size_t>(d.e_pos);
  if (e.is_loop()) {
    if (d.e_a != d.e_b) fail("digon on a loop leaves a single outer edge");
    require_fresh_edge(w, d.e_a);
    w.add_edge(Edge{d.e_a, d.y, d.x, rotated(e.segments, pos)});
  } else {
    if (d.e_a == d.e_b) fail("digon outer pieces must differ");
    require_fresh_edge(w, d.e_a);
    w.add_edge(Edge{d.e_a, e.tail, d.x, {e.segments.begin(), e.segments.begin() + d.e_pos}});
    require_fresh_edge(w, d.e_b);
    w.add_edge(Edge{d.e_b, d.y, e.head, {e.segments.begin() + d.e_pos, e.segments.end()}});
    w.replace_in_rotation(e.tail, e.id, d.e_a);
    w.replace_in_rotation(e.head, e.id, d.e_b);
  }
  w.add_edge(Edge{d.d1, d.y, d.x, d.d1_segments});
  w.add_edge(Edge{d.d2, d.y, d.x, d.d2_segments});
  w.add_vertex(Vertex{d.x, false, {d.d2, d.d1, d.e_a}});
  w.add_vertex(Vertex{d.y, true, {d.e_b, d.d1, d.d2}});
  w.normalize();
}

struct CapResult {
  Edge merged;
  int e_pos = 0;
};

CapResult plan_cap(const Web& w, const DigonData& d) {
  const Vertex& x = w.vertex(d.x);
  const Vertex& y = w.vertex(d.y);
  if (x.source || !y.source) fail("digon cap endpoints have wrong types");
  if (!same_rotation(x.ccw, d.d2, d.d1, d.e_a)) fail("digon cap sink rotation mismatch");
  if (!same_rotation(y.ccw, d.e_b, d.d1, d.d2)) fail("digon cap source rotation mismatch");
  const Edge& ea = w.edge(d.e_a);
  const Edge& eb = w.edge(d.e_b);
  CapResult r;
  r.merged.id = d.e;
  if (d.e_a == d.e_b) {
    std::size_t off = min_offset(ea.segments);
    int len = static_cast<int>(ea.segments.size());
    r.merged.segments = rotated(ea.segments, off);
    r.e_pos = len == 0 ? 0 : (len - static_cast<int>(off)) % len;
  } else {
    r.merged.tail = ea.tail;
    r.merged.head = eb.head;
    r.merged.segments = ea.segments;
    r.merged.segments.insert(r.merged.segments.end(), eb.segments.begin(), eb.segments.end());
    r.e_pos = static_cast<int>(ea.segments.size());
  }
  return r;
}

void apply_cap(Web& w, const DigonData& d) {
  CapResult r = plan_cap(w, d);
  if (r.e_pos != d.e_pos) fail("digon cap position mismatch");
  if (w.edge(d.d1).segments != d.d1_segments || w.edge(d.d2).segments != d.d2_segments)
    fail("digon cap edge segments mismatch");
  int tail = w.edge(d.e_a).tail;
  int head = w.edge(d.e_b).head;
  bool loop = d.e_a == d.e_b;
  for (int id : std::set<int>{d.e_a, d.e_b, d.d1, d.d2}) w.remove_edge(id);
  w.remove_vertex(d.x);
  w.remove_vertex(d.y);
  require_fresh_edge(w, d.e);
  if (!loop) {
    w.replace_in_rotation(tail, d.e_a, d.e);
    w.replace_in_rotation(head, d.e_b, d.e);
  }
  w.add_edge(r.merged);
  w.normalize();
}

void apply_frame(Web& w, const FrameData& f) {
  auto emap = [&](int id) {
    auto it = f.edge_map.find(id);
    return it == f.edge_map.end() ? id : it->second;
  };
  auto vmap = [&](int id) {
    if (id < 0) return id;
    auto it = f.vertex_map.find(id);
    return it == f.vertex_map.end() ? id : it->second;
  };
  Web out;
  for (const auto& [id, e] : w.edges()) {
    Edge ne = e;
    ne.id = emap(id);
    ne.tail = vmap(e.tail);
    ne.head = vmap(e.head);
    if (out.has_edge(ne.id)) fail("frame relabeling is not injective on edges");
    out.add_edge(std::move(ne));
  }
  for (const auto& [id, v] : w.vertices()) {
    Vertex nv = v;
    nv.id = vmap(id);
    for (auto& e : nv.ccw) e = emap(e);
    if (out.has_vertex(nv.id)) fail("frame relabeling is not injective on vertices");
    out.add_vertex(nv);
  }
  out.normalize();
  w = std::move(out);
}

}  // namespace

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::Birth: return "BIRTH";
    case MoveKind::Death: return "DEATH";
    case MoveKind::Saddle: return "SADDLE";
    case MoveKind::Zip: return "ZIP";
    case MoveKind::Unzip: return "UNZIP";
    case MoveKind::DigonCup: return "DIGON_CUP";
    case MoveKind::DigonCap: return "DIGON_CAP";
    case MoveKind::Dot: return "DOT";
    case MoveKind::Frame: return "FRAME";
  }
  return "?";
}

MoveKind move_kind_from_string(const std::string& s) {
  for (auto k : {MoveKind::Birth, MoveKind::Death, MoveKind::Saddle, MoveKind::Zip, MoveKind::Unzip,
                 MoveKind::DigonCup, MoveKind::DigonCap, MoveKind::Dot, MoveKind::Frame})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown move kind " + s);
}

void apply_to_web(Web& w, const Move& m) {
  switch (m.kind) {
    case MoveKind::Birth: {
      const auto& d = std::get<LoopData>(m.data);
      require_fresh_edge(w, d.loop);
      Edge e{d.loop, -1, -1, d.segments};
      w.add_edge(e);
      w.normalize();
      return;
    }
    case MoveKind::Death: {
      const auto& d = std::get<LoopData>(m.data);
      const Edge& e = w.edge(d.loop);
      if (!e.is_loop()) fail("death needs a free loop");
      if (e.segments != loop_normal(d.segments)) fail("death loop segments mismatch");
      w.remove_edge(d.loop);
      return;
    }
    case MoveKind::Saddle: {
      const auto& d = std::get<SaddleData>(m.data);
      if (d.merging) {
        for (int id : {d.first, d.second})
          if (!w.edge(id).is_loop()) fail("saddle acts on free loops");
        if (w.edge(d.first).segments != loop_normal(d.first_segments) ||
            w.edge(d.second).segments != loop_normal(d.second_segments))
          fail("saddle segments mismatch");
        w.remove_edge(d.first);
        w.remove_edge(d.second);
        std::vector<int> segs = d.first_segments;
        segs.insert(segs.end(), d.second_segments.begin(), d.second_segments.end());
        require_fresh_edge(w, d.merged);
        w.add_edge(Edge{d.merged, -1, -1, segs});
      } else {
        if (!w.edge(d.merged).is_loop()) fail("saddle acts on free loops");
        std::vector<int> segs = d.first_segments;
        segs.insert(segs.end(), d.second_segments.begin(), d.second_segments.end());
        std::vector<int> have = w.edge(d.merged).segments;
        std::vector<int> want = rotated(segs, min_offset(segs));
        if (have != want) fail("saddle split segments mismatch");
        w.remove_edge(d.merged);
        require_fresh_edge(w, d.first);
        w.add_edge(Edge{d.first, -1, -1, d.first_segments});
        require_fresh_edge(w, d.second);
        w.add_edge(Edge{d.second, -1, -1, d.second_segments});
      }
      w.normalize();
      return;
    }
    case MoveKind::Dot: {
      w.edge(std::get<DotData>(m.data).edge);
      return;
    }
    case MoveKind::Zip: apply_zip(w, std::get<ZipData>(m.data)); return;
    case MoveKind::Unzip: apply_unzip_impl(w, std::get<ZipData>(m.data), true); return;
    case MoveKind::DigonCup: apply_cup(w, std::get<DigonData>(m.data)); return;
    case MoveKind::DigonCap: apply_cap(w, std::get<DigonData>(m.data)); return;
    case MoveKind::Frame: apply_frame(w, std::get<FrameData>(m.data)); return;
  }
}

Move inverse(const Move& m) {
  Move out = m;
  switch (m.kind) {
    case MoveKind::Birth: out.kind = MoveKind::Death; break;
    case MoveKind::Death: out.kind = MoveKind::Birth; break;
    case MoveKind::Saddle: std::get<SaddleData>(out.data).merging = !std::get<SaddleData>(m.data).merging; break;
    case MoveKind::Zip: out.kind = MoveKind::Unzip; break;
    case MoveKind::Unzip: out.kind = MoveKind::Zip; break;
    case MoveKind::DigonCup: out.kind = MoveKind::DigonCap; break;
    case MoveKind::DigonCap: out.kind = MoveKind::DigonCup; break;
    case MoveKind::Dot: break;
    case MoveKind::Frame: {
      const auto& f = std::get<FrameData>(m.data);
      FrameData inv;
      for (auto [a, b] : f.edge_map) inv.edge_map[b] = a;
      for (auto [a, b] : f.vertex_map) inv.vertex_map[b] = a;
      out.data = inv;
      break;
    }
  }
  return out;
}

int move_degree(const Move& m) {
  // (change of chi of the frame, chi change of the critical level, dots)
  int dchi = 0, dlocal = 0, dots = 0;
  switch (m.kind) {
    case MoveKind::Birth: dlocal = 1; break;
    case MoveKind::Death: dlocal = 1; break;
    case MoveKind::Saddle: dlocal = -1; break;
    case MoveKind::Zip: dchi = -1; dlocal = -1; break;
    case MoveKind::Unzip: dchi = 1; break;
    case MoveKind::DigonCup: dchi = -1; break;
    case MoveKind::DigonCap: dchi = 1; dlocal = 1; break;
    case MoveKind::Dot: dots = 1; break;
    case MoveKind::Frame: break;
  }
  return dchi - 2 * dlocal + 2 * dots;
}

Move make_birth(const Web& w, std::vector<int> segments) {
  return Move{MoveKind::Birth, LoopData{w.next_edge_id(), std::move(segments)}};
}

Move make_death(const Web& w, int loop) {
  const Edge& e = w.edge(loop);
  if (!e.is_loop()) fail("death needs a free loop");
  return Move{MoveKind::Death, LoopData{loop, e.segments}};
}

Move make_dot(const Web& w, int edge) {
  w.edge(edge);
  return Move{MoveKind::Dot, DotData{edge}};
}

Move make_saddle_merge(const Web& w, int first, int second) {
  const Edge& a = w.edge(first);
  const Edge& b = w.edge(second);
  if (!a.is_loop() || !b.is_loop() || first == second) fail("saddle merge needs two free loops");
  return Move{MoveKind::Saddle, SaddleData{true, first, second, w.next_edge_id(), a.segments, b.segments}};
}

Move make_saddle_split(const Web& w, int loop, std::size_t cut) {
  const Edge& e = w.edge(loop);
  if (!e.is_loop()) fail("saddle split needs a free loop");
  if (cut > e.segments.size()) fail("saddle split position out of range");
  SaddleData d;
  d.merging = false;
  d.merged = loop;
  d.first = w.next_edge_id();
  d.second = d.first + 1;
  d.first_segments.assign(e.segments.begin(), e.segments.begin() + static_cast<long>(cut));
  d.second_segments.assign(e.segments.begin() + static_cast<long>(cut), e.segments.end());
  return Move{MoveKind::Saddle, d};
}

Move make_zip(const Web& w, int a, int a_pos, int b, int b_pos, int v_id, int w_id,
              std::vector<int> m_segments) {
  auto pieces = plan_cuts(w, a, a_pos, b, b_pos);
  ZipData d;
  d.a = a;
  d.b = b;
  d.a_pos = a_pos;
  d.b_pos = b_pos;
  d.v = v_id;
  d.w = w_id;
  int next = w.next_edge_id();
  d.m = next++;
  d.m_segments = std::move(m_segments);
  for (const auto& pc : pieces) {
    int id = next++;
    if (pc.ends_at == kA) d.a_low = id;
    if (pc.ends_at == kB) d.b_low = id;
    if (pc.starts_at == kA) d.a_high = id;
    if (pc.starts_at == kB) d.b_high = id;
  }
  Web probe = w;
  apply_zip(probe, d);
  return Move{MoveKind::Zip, d};
}

Move make_unzip(const Web& w, int m) {
  const Edge& me = w.edge(m);
  if (me.is_loop()) fail("unzip needs an edge between two vertices");
  ZipData d;
  d.m = m;
  d.v = me.head;
  d.w = me.tail;
  d.m_segments = me.segments;
  const Vertex& v = w.vertex(d.v);
  const Vertex& wv = w.vertex(d.w);
  d.a_low = v.succ(m);
  d.b_low = v.succ(d.a_low);
  d.a_high = wv.pred(m);
  d.b_high = wv.pred(d.a_high);
  d.a = w.next_edge_id();
  d.b = d.a + 1;
  Web probe = w;
  UnzipResult r;
  try {
    r = apply_unzip_impl(probe, d, false);
  } catch (const std::invalid_argument&) {
    d.b = d.a;  // both strands close into a single edge
    probe = w;
    r = apply_unzip_impl(probe, d, false);
  }
  d.a_pos = r.a_pos;
  d.b_pos = r.b_pos;
  return Move{MoveKind::Unzip, d};
}

Move make_digon_cup(const Web& w, int e, int e_pos) {
  const Edge& ed = w.edge(e);
  DigonData d;
  d.e = e;
  d.e_pos = e_pos;
  d.x = w.next_vertex_id();
  d.y = d.x + 1;
  int next = w.next_edge_id();
  d.d1 = next++;
  d.d2 = next++;
  d.e_a = next++;
  d.e_b = ed.is_loop() ? d.e_a : next++;
  Web probe = w;
  apply_cup(probe, d);
  return Move{MoveKind::DigonCup, d};
}

Move make_digon_cap(const Web& w, int p, int q) {
  const Edge& ep = w.edge(p);
  const Edge& eq = w.edge(q);
  if (ep.is_loop() || eq.is_loop() || ep.tail != eq.tail || ep.head != eq.head)
    fail("digon cap needs two edges with common endpoints");
  DigonData d;
  d.x = ep.head;
  d.y = ep.tail;
  const Vertex& x = w.vertex(d.x);
  const Vertex& y = w.vertex(d.y);
  if (x.succ(p) == q) {
    d.d2 = p;
    d.d1 = q;
  } else {
    d.d2 = q;
    d.d1 = p;
  }
  d.e_a = x.succ(d.d1);
  d.e_b = y.pred(d.d1);
  if (y.succ(d.d1) != d.d2) fail("edges do not bound a digon face");
  d.d1_segments = w.edge(d.d1).segments;
  d.d2_segments = w.edge(d.d2).segments;
  d.e = w.next_edge_id();
  d.e_pos = plan_cap(w, d).e_pos;
  return Move{MoveKind::DigonCap, d};
}

Move make_frame(const Web& w, FrameData relabel) {
  Web probe = w;
  apply_frame(probe, relabel);
  return Move{MoveKind::Frame, std::move(relabel)};
}

Move make_segment_frame(const Web& w) {
  FrameData f;
  for (const auto& [id, e] : w.edges()) {
    if (e.segments.empty()) fail("edge " + std::to_string(id) + " carries no segment label");
    f.edge_map[id] = *std::min_element(e.segments.begin(), e.segments.end());
  }
  return make_frame(w, std::move(f));
}

}  // namespace sl3
