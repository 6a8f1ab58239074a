#include "sl3/web.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sl3 {

int Vertex::succ(int edge) const {
  for (int i = 0; i < 3; ++i)
    if (ccw[i] == edge) return ccw[(i + 1) % 3];
  throw std::logic_error("edge " + std::to_string(edge) + " not at vertex " + std::to_string(id));
}

int Vertex::pred(int edge) const {
  for (int i = 0; i < 3; ++i)
    if (ccw[i] == edge) return ccw[(i + 2) % 3];
  throw std::logic_error("edge " + std::to_string(edge) + " not at vertex " + std::to_string(id));
}

const Edge& Web::edge(int id) const {
  auto it = edges_.find(id);
  if (it == edges_.end()) throw std::out_of_range("no edge " + std::to_string(id));
  return it->second;
}

const Vertex& Web::vertex(int id) const {
  auto it = vertices_.find(id);
  if (it == vertices_.end()) throw std::out_of_range("no vertex " + std::to_string(id));
  return it->second;
}

Edge& Web::edge_mut(int id) { return const_cast<Edge&>(std::as_const(*this).edge(id)); }
Vertex& Web::vertex_mut(int id) { return const_cast<Vertex&>(std::as_const(*this).vertex(id)); }

std::vector<int> Web::loops() const {
  std::vector<int> out;
  for (const auto& [id, e] : edges_)
    if (e.is_loop()) out.push_back(id);
  return out;
}

int Web::next_edge_id() const { return edges_.empty() ? 0 : edges_.rbegin()->first + 1; }
int Web::next_vertex_id() const { return vertices_.empty() ? 0 : vertices_.rbegin()->first + 1; }

Edge& Web::add_edge(Edge e) {
  auto [it, inserted] = edges_.emplace(e.id, std::move(e));
  if (!inserted) throw std::logic_error("duplicate edge id " + std::to_string(it->first));
  return it->second;
}

Vertex& Web::add_vertex(Vertex v) {
  auto [it, inserted] = vertices_.emplace(v.id, v);
  if (!inserted) throw std::logic_error("duplicate vertex id " + std::to_string(v.id));
  return it->second;
}

void Web::remove_edge(int id) {
  if (edges_.erase(id) == 0) throw std::logic_error("removing missing edge " + std::to_string(id));
}

void Web::remove_vertex(int id) {
  if (vertices_.erase(id) == 0) throw std::logic_error("removing missing vertex " + std::to_string(id));
}

void Web::replace_in_rotation(int v, int from, int to) {
  auto& vert = vertex_mut(v);
  for (auto& e : vert.ccw)
    if (e == from) {
      e = to;
      return;
    }
  throw std::logic_error("edge " + std::to_string(from) + " not at vertex " + std::to_string(v));
}

void Web::normalize() {
  for (auto& [id, v] : vertices_) {
    auto it = std::min_element(v.ccw.begin(), v.ccw.end());
    std::rotate(v.ccw.begin(), it, v.ccw.end());
  }
  for (auto& [id, e] : edges_) {
    if (e.is_loop() && !e.segments.empty()) {
      auto it = std::min_element(e.segments.begin(), e.segments.end());
      std::rotate(e.segments.begin(), it, e.segments.end());
    }
  }
}

int Web::dart_vertex(const Dart& d) const {
  const Edge& e = edge(d.edge);
  return d.at_head ? e.head : e.tail;
}

void Web::validate() const {
  for (const auto& [id, e] : edges_) {
    if (e.id != id) throw std::logic_error("edge key mismatch");
    if ((e.tail < 0) != (e.head < 0)) throw std::logic_error("edge " + std::to_string(id) + " has one endpoint");
    if (e.is_loop()) continue;
    const Vertex& t = vertex(e.tail);
    const Vertex& h = vertex(e.head);
    if (!t.source) throw std::logic_error("edge " + std::to_string(id) + " leaves a sink");
    if (h.source) throw std::logic_error("edge " + std::to_string(id) + " enters a source");
    if (std::count(t.ccw.begin(), t.ccw.end(), id) != 1 || std::count(h.ccw.begin(), h.ccw.end(), id) != 1)
      throw std::logic_error("edge " + std::to_string(id) + " missing from endpoint rotation");
  }
  for (const auto& [id, v] : vertices_) {
    if (v.id != id) throw std::logic_error("vertex key mismatch");
    std::set<int> distinct(v.ccw.begin(), v.ccw.end());
    if (distinct.size() != 3) throw std::logic_error("vertex " + std::to_string(id) + " is not trivalent");
    for (int e : v.ccw) {
      const Edge& ed = edge(e);
      int end = v.source ? ed.tail : ed.head;
      if (end != id) throw std::logic_error("vertex " + std::to_string(id) + " rotation lists foreign edge");
    }
  }
  // planarity: V - E + F = 2 on every trivalent component
  FaceStructure fs = faces(*this);
  int comps = trivalent_components(*this);
  int v = static_cast<int>(vertices_.size());
  int e = 0;
  for (const auto& [id, ed] : edges_)
    if (!ed.is_loop()) ++e;
  int f = static_cast<int>(fs.faces.size());
  if (v - e + f != 2 * comps) throw std::logic_error("web rotation system is not planar");
}

int Web::euler_characteristic() const {
  int e = 0;
  for (const auto& [id, ed] : edges_)
    if (!ed.is_loop()) ++e;
  return static_cast<int>(vertices_.size()) - e;
}

std::vector<int> Face::edge_ids() const {
  std::vector<int> out;
  for (const auto& d : darts) out.push_back(d.edge);
  return out;
}

FaceStructure faces(const Web& w) {
  FaceStructure fs;
  std::set<Dart> seen;
  for (const auto& [id, e] : w.edges()) {
    if (e.is_loop()) {
      fs.loop_faces += 2;
      continue;
    }
    for (bool at_head : {false, true}) {
      Dart start{id, at_head};
      if (seen.count(start)) continue;
      Face face;
      Dart d = start;
      do {
        seen.insert(d);
        face.darts.push_back(d);
        // cross the edge, then turn to the next edge counterclockwise
        Dart opposite{d.edge, !d.at_head};
        const Vertex& v = w.vertex(w.dart_vertex(opposite));
        int next_edge = v.succ(d.edge);
        const Edge& ne = w.edge(next_edge);
        d = Dart{next_edge, ne.head == v.id};
      } while (d != start);
      fs.faces.push_back(std::move(face));
    }
  }
  return fs;
}

int trivalent_components(const Web& w) {
  std::map<int, int> parent;
  for (const auto& [id, v] : w.vertices()) parent[id] = id;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& [id, e] : w.edges())
    if (!e.is_loop()) parent[find(e.tail)] = find(e.head);
  int n = 0;
  for (const auto& [id, p] : parent)
    if (find(id) == id) ++n;
  return n;
}

Reduction find_reduction(const Web& w) {
  Reduction r;
  if (w.empty()) return r;
  auto ls = w.loops();
  if (!ls.empty()) {
    r.kind = ReductionKind::FreeLoop;
    r.loop = ls.front();
    return r;
  }
  FaceStructure fs = faces(w);
  auto pick = [&](std::size_t len) -> const Face* {
    const Face* best = nullptr;
    std::vector<int> best_key;
    for (const auto& f : fs.faces) {
      if (f.darts.size() != len) continue;
      std::vector<int> key = f.edge_ids();
      std::set<int> distinct_edges(key.begin(), key.end());
      std::set<int> distinct_vertices;
      for (const auto& d : f.darts) distinct_vertices.insert(w.dart_vertex(d));
      if (distinct_edges.size() != len || distinct_vertices.size() != len) continue;
      std::sort(key.begin(), key.end());
      if (!best || key < best_key) {
        best = &f;
        best_key = key;
      }
    }
    return best;
  };
  // Boundary walk rotated to start at its smallest edge.
  auto rooted = [](const Face& f) {
    Face g = f;
    auto it = std::min_element(g.darts.begin(), g.darts.end(),
                               [](const Dart& a, const Dart& b) { return a.edge < b.edge; });
    std::rotate(g.darts.begin(), it, g.darts.end());
    return g;
  };
  if (const Face* f = pick(2)) {
    r.kind = ReductionKind::DigonFace;
    r.face = rooted(*f);
    return r;
  }
  if (const Face* f = pick(4)) {
    r.kind = ReductionKind::SquareFace;
    r.face = rooted(*f);
    return r;
  }
  throw std::logic_error("web has no loop, digon face or square face");
}

namespace {

// Canonical code of the trivalent component reached from `start`.
std::vector<int> component_code(const Web& w, Dart start) {
  std::map<int, int> label;
  std::vector<std::pair<int, int>> order;  // (vertex, entry edge)
  int v0 = w.dart_vertex(start);
  label[v0] = 0;
  order.emplace_back(v0, start.edge);
  std::vector<int> code;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto [vid, entry] = order[i];
    const Vertex& v = w.vertex(vid);
    code.push_back(v.source ? 1 : 0);
    int e = entry;
    for (int k = 0; k < 3; ++k) {
      const Edge& ed = w.edge(e);
      int other = ed.tail == vid ? ed.head : ed.tail;
      auto it = label.find(other);
      if (it == label.end()) {
        int l = static_cast<int>(order.size());
        label[other] = l;
        order.emplace_back(other, e);
        code.push_back(l);
      } else {
        code.push_back(it->second);
      }
      e = v.succ(e);
    }
  }
  return code;
}

}  // namespace

std::string canonical_form(const Web& w) {
  std::set<int> visited;
  std::vector<std::vector<int>> comps;
  for (const auto& [vid, v] : w.vertices()) {
    if (visited.count(vid)) continue;
    std::vector<int> best;
    std::vector<int> comp_vertices;
    // collect component
    std::vector<int> stack{vid};
    visited.insert(vid);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp_vertices.push_back(x);
      for (int e : w.vertex(x).ccw) {
        const Edge& ed = w.edge(e);
        int other = ed.tail == x ? ed.head : ed.tail;
        if (visited.insert(other).second) stack.push_back(other);
      }
    }
    for (int x : comp_vertices) {
      const Vertex& vx = w.vertex(x);
      for (int e : vx.ccw) {
        Dart d{e, !vx.source};
        auto code = component_code(w, d);
        if (best.empty() || code < best) best = std::move(code);
      }
    }
    comps.push_back(std::move(best));
  }
  std::sort(comps.begin(), comps.end());
  std::ostringstream os;
  os << "L" << w.loops().size();
  for (const auto& c : comps) {
    os << "|";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  }
  return os.str();
}

Web disjoint_union(const Web& a, const Web& b) {
  Web out = a;
  int eoff = a.next_edge_id();
  int voff = a.next_vertex_id();
  for (const auto& [id, e] : b.edges()) {
    Edge ne = e;
    ne.id += eoff;
    if (!ne.is_loop()) {
      ne.tail += voff;
      ne.head += voff;
    }
    out.add_edge(std::move(ne));
  }
  for (const auto& [id, v] : b.vertices()) {
    Vertex nv = v;
    nv.id += voff;
    for (auto& e : nv.ccw) e += eoff;
    out.add_vertex(nv);
  }
  out.normalize();
  return out;
}

namespace webs {

namespace {

struct Drawn {
  double x, y;
  bool source;
};

// Straight-line drawing -> web; rotations follow the drawing's angles.
Web from_drawing(const std::vector<Drawn>& pts, const std::vector<std::pair<int, int>>& directed) {
  Web w;
  std::map<int, std::vector<std::pair<double, int>>> around;
  for (std::size_t i = 0; i < directed.size(); ++i) {
    auto [s, t] = directed[i];
    Edge e;
    e.id = static_cast<int>(i);
    e.tail = s;
    e.head = t;
    w.add_edge(e);
    around[s].emplace_back(std::atan2(pts[t].y - pts[s].y, pts[t].x - pts[s].x), e.id);
    around[t].emplace_back(std::atan2(pts[s].y - pts[t].y, pts[s].x - pts[t].x), e.id);
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto& lst = around[static_cast<int>(i)];
    std::sort(lst.begin(), lst.end());
    if (lst.size() != 3) throw std::logic_error("drawing vertex is not trivalent");
    Vertex v;
    v.id = static_cast<int>(i);
    v.source = pts[i].source;
    for (int k = 0; k < 3; ++k) v.ccw[k] = lst[k].second;
    w.add_vertex(v);
  }
  w.normalize();
  w.validate();
  return w;
}

}  // namespace

Web circle() {
  Web w;
  Edge e;
  e.id = 0;
  w.add_edge(e);
  return w;
}

Web theta() { return digon_chain(1); }

Web digon_chain(int n) {
  if (n < 1) throw std::invalid_argument("digon chain needs at least one digon");
  Web w;
  auto x = [](int k) { return 2 * k; };
  auto y = [](int k) { return 2 * k + 1; };
  for (int k = 0; k < n; ++k) {
    int upper = 3 * k, lower = 3 * k + 1, conn = 3 * k + 2;
    w.add_edge(Edge{upper, y(k), x(k), {}});
    w.add_edge(Edge{lower, y(k), x(k), {}});
    // connector into x_k comes from y_{k+1}, wrapping to y_0 at the end
    w.add_edge(Edge{conn, y((k + 1) % n), x(k), {}});
  }
  for (int k = 0; k < n; ++k) {
    int upper = 3 * k, lower = 3 * k + 1;
    int conn_out = 3 * ((k + n - 1) % n) + 2;  // leaves y_k towards x_{k-1}
    w.add_vertex(Vertex{y(k), true, {upper, conn_out, lower}});
    w.add_vertex(Vertex{x(k), false, {3 * k + 2, upper, lower}});
  }
  w.normalize();
  w.validate();
  return w;
}

Web cube() {
  // outer square A B C D, inner square a b c d; spokes Aa, Bb, Cc, Dd
  std::vector<Drawn> pts = {
      {-2, -2, true}, {2, -2, false}, {2, 2, true}, {-2, 2, false},
      {-1, -1, false}, {1, -1, true}, {1, 1, false}, {-1, 1, true},
  };
  std::vector<std::pair<int, int>> und = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                                          {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  std::vector<std::pair<int, int>> directed;
  for (auto [a, b] : und) directed.emplace_back(pts[a].source ? std::pair{a, b} : std::pair{b, a});
  return from_drawing(pts, directed);
}

}  // namespace webs

}  // namespace sl3
