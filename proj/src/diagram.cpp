#include "sl3/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace sl3 {

int LinkDiagram::positive() const {
  return static_cast<int>(std::count_if(crossings.begin(), crossings.end(), [](const Crossing& c) { return c.sign() > 0; }));
}

int LinkDiagram::negative() const { return size() - positive(); }

namespace {

struct End {
  int crossing;
  int pos;
};

// The two ends of every arc, in order of appearance.
std::vector<std::array<End, 2>> arc_ends(const std::vector<Crossing>& cs, int arcs) {
  std::vector<std::array<End, 2>> ends(static_cast<std::size_t>(arcs));
  std::vector<int> seen(static_cast<std::size_t>(arcs), 0);
  for (int c = 0; c < static_cast<int>(cs.size()); ++c)
    for (int p = 0; p < 4; ++p) {
      int a = cs[static_cast<std::size_t>(c)].arcs[static_cast<std::size_t>(p)];
      ends[static_cast<std::size_t>(a)][static_cast<std::size_t>(seen[static_cast<std::size_t>(a)]++)] = {c, p};
    }
  return ends;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
  return x;
}

void check_planar(const std::vector<Crossing>& cs, const std::vector<std::array<End, 2>>& ends) {
  const int n = static_cast<int>(cs.size());
  if (n == 0) return;
  auto dart = [](int c, int p) { return 4 * c + p; };
  std::vector<int> alpha(static_cast<std::size_t>(4 * n));
  for (const auto& e : ends) {
    alpha[static_cast<std::size_t>(dart(e[0].crossing, e[0].pos))] = dart(e[1].crossing, e[1].pos);
    alpha[static_cast<std::size_t>(dart(e[1].crossing, e[1].pos))] = dart(e[0].crossing, e[0].pos);
  }
  std::vector<bool> seen(static_cast<std::size_t>(4 * n), false);
  int faces = 0;
  for (int d = 0; d < 4 * n; ++d) {
    if (seen[static_cast<std::size_t>(d)]) continue;
    ++faces;
    int x = d;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      int y = alpha[static_cast<std::size_t>(x)];
      x = 4 * (y / 4) + (y % 4 + 1) % 4;
    }
  }
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& e : ends) parent[static_cast<std::size_t>(find_root(parent, e[0].crossing))] = find_root(parent, e[1].crossing);
  int comps = 0;
  for (int c = 0; c < n; ++c) comps += find_root(parent, c) == c;
  if (n - 2 * n + faces != 2 * comps) throw DiagramError("diagram is not planar");
}

void orient(std::vector<Crossing>& cs, const std::vector<std::array<End, 2>>& ends,
            const std::vector<long long>& labels) {
  const int n = static_cast<int>(cs.size());
  std::vector<int> over(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < n; ++c) over[static_cast<std::size_t>(c)] = cs[static_cast<std::size_t>(c)].over_in;
  // -1 unknown, else 1 when the end is incoming.
  auto dir = [&](End e) {
    if (e.pos == 0) return 1;
    if (e.pos == 2) return 0;
    int o = over[static_cast<std::size_t>(e.crossing)];
    if (o == 0) return -1;
    return o == e.pos ? 1 : 0;
  };
  auto set_in = [&](End e, bool incoming) {
    over[static_cast<std::size_t>(e.crossing)] = incoming ? e.pos : 4 - e.pos;
  };
  while (true) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& ae : ends) {
        int d0 = dir(ae[0]), d1 = dir(ae[1]);
        if (d0 >= 0 && d1 >= 0) {
          if (d0 == d1) throw DiagramError("inconsistent orientation along an arc");
        } else if (d0 >= 0) {
          set_in(ae[1], d0 == 0);
          changed = true;
        } else if (d1 >= 0) {
          set_in(ae[0], d1 == 0);
          changed = true;
        }
      }
    }
    auto it = std::find(over.begin(), over.end(), 0);
    if (it == over.end()) break;
    const auto& c = cs[static_cast<std::size_t>(it - over.begin())];
    long long b = labels[static_cast<std::size_t>(c.arcs[1])];
    long long d = labels[static_cast<std::size_t>(c.arcs[3])];
    *it = (d - b == 1 || b - d > 1) ? 1 : 3;
  }
  for (int c = 0; c < n; ++c) cs[static_cast<std::size_t>(c)].over_in = over[static_cast<std::size_t>(c)];
}

}  // namespace

LinkDiagram make_diagram(const std::vector<std::array<long long, 4>>& tuples, int free_loops,
                         const std::vector<int>& over_in) {
  if (free_loops < 0) throw DiagramError("negative loop count");
  if (!over_in.empty() && over_in.size() != tuples.size())
    throw DiagramError("orientation list length differs from crossing count");
  std::map<long long, int> count;
  for (const auto& t : tuples)
    for (long long a : t) ++count[a];
  for (auto [label, k] : count)
    if (k != 2) throw DiagramError("arc label " + std::to_string(label) + " appears " + std::to_string(k) + " times");
  LinkDiagram d;
  d.free_loops = free_loops;
  std::map<long long, int> index;
  for (auto [label, k] : count) {
    index[label] = static_cast<int>(d.arc_labels.size());
    d.arc_labels.push_back(label);
  }
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    Crossing c;
    for (int p = 0; p < 4; ++p) c.arcs[static_cast<std::size_t>(p)] = index.at(tuples[i][static_cast<std::size_t>(p)]);
    c.over_in = 0;
    if (!over_in.empty()) {
      if (over_in[i] != 1 && over_in[i] != 3) throw DiagramError("over-strand entry must be position 1 or 3");
      c.over_in = over_in[i];
    }
    d.crossings.push_back(c);
  }
  auto ends = arc_ends(d.crossings, static_cast<int>(d.arc_labels.size()));
  check_planar(d.crossings, ends);
  orient(d.crossings, ends, d.arc_labels);
  return d;
}

LinkDiagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw DiagramError("a braid needs at least one strand");
  std::vector<long long> bottom(static_cast<std::size_t>(strands)), cur;
  long long next = 1;
  for (auto& b : bottom) b = next++;
  cur = bottom;
  std::vector<std::array<long long, 4>> tuples;
  std::vector<int> over_in;
  for (int g : word) {
    int k = g > 0 ? g : -g;
    if (g == 0 || k >= strands) throw DiagramError("braid generator " + std::to_string(g) + " out of range");
    auto i = static_cast<std::size_t>(k - 1);
    long long a = cur[i], b = cur[i + 1];
    long long a_out = next++, b_out = next++;
    // a runs from lower left to upper right, b from lower right to upper left.
    if (g > 0) {
      tuples.push_back({a, b, a_out, b_out});
      over_in.push_back(1);
    } else {
      tuples.push_back({b, a_out, b_out, a});
      over_in.push_back(3);
    }
    cur[i] = b_out;
    cur[i + 1] = a_out;
  }
  // Close up: the top label of each position is identified with its bottom label.
  std::map<long long, long long> rename;
  for (std::size_t p = 0; p < cur.size(); ++p)
    if (cur[p] != bottom[p]) rename[cur[p]] = bottom[p];
  int loops = 0;
  for (std::size_t p = 0; p < cur.size(); ++p)
    if (cur[p] == bottom[p]) ++loops;
  for (auto& t : tuples)
    for (auto& a : t) {
      auto it = rename.find(a);
      if (it != rename.end()) a = it->second;
    }
  return make_diagram(tuples, loops, over_in);
}

LinkDiagram parse_pd(std::string_view text) {
  std::vector<std::array<long long, 4>> tuples;
  int loops = 0;
  std::size_t i = 0;
  auto skip_space = [&]() {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  auto read_args = [&]() {
    if (i >= text.size() || (text[i] != '(' && text[i] != '[')) throw DiagramError("expected an argument list");
    char close = text[i] == '(' ? ')' : ']';
    ++i;
    std::vector<long long> args;
    std::string token;
    for (; i < text.size() && text[i] != close; ++i) {
      char ch = text[i];
      if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
        token += ch;
      } else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
        if (!token.empty()) args.push_back(std::stoll(token)), token.clear();
      } else {
        throw DiagramError(std::string("unexpected character '") + ch + "' in argument list");
      }
    }
    if (i >= text.size()) throw DiagramError("unterminated argument list");
    ++i;
    if (!token.empty()) args.push_back(std::stoll(token));
    return args;
  };
  skip_space();
  if (text.substr(i, 2) == "PD") {
    i += 2;
    if (i < text.size() && (text[i] == '[' || text[i] == '(')) ++i;
    if (!text.empty() && (text.back() == ']' || text.back() == ')')) text.remove_suffix(1);
  }
  while (true) {
    skip_space();
    if (i >= text.size()) break;
    if (text[i] == 'X') {
      ++i;
      auto args = read_args();
      if (args.size() != 4) throw DiagramError("crossing tuple must have four labels");
      tuples.push_back({args[0], args[1], args[2], args[3]});
    } else if (text.substr(i, 4) == "Loop") {
      i += 4;
      auto args = read_args();
      if (args.size() > 1) throw DiagramError("Loop takes at most one label");
      ++loops;
    } else {
      throw DiagramError("unexpected token at offset " + std::to_string(i));
    }
  }
  return make_diagram(tuples, loops);
}

LinkDiagram parse_pd_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DiagramError(std::string("invalid JSON: ") + e.what());
  }
  nlohmann::json pd = j;
  std::vector<int> over_in;
  int loops = 0;
  try {
    if (j.is_object()) {
      pd = j.at("pd");
      if (j.contains("over_in")) over_in = j.at("over_in").get<std::vector<int>>();
      if (j.contains("loops")) loops = j.at("loops").get<int>();
    }
    std::vector<std::array<long long, 4>> tuples;
    for (const auto& t : pd) {
      if (!t.is_array() || t.size() != 4) throw DiagramError("crossing tuple must have four labels");
      tuples.push_back({t[0].get<long long>(), t[1].get<long long>(), t[2].get<long long>(), t[3].get<long long>()});
    }
    return make_diagram(tuples, loops, over_in);
  } catch (const nlohmann::json::exception& e) {
    throw DiagramError(std::string("malformed diagram JSON: ") + e.what());
  }
}

int LinkDiagram::components() const {
  const int arcs = static_cast<int>(arc_labels.size());
  std::vector<int> parent(static_cast<std::size_t>(arcs));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& c : crossings) {
    parent[static_cast<std::size_t>(find_root(parent, c.arcs[0]))] = find_root(parent, c.arcs[2]);
    parent[static_cast<std::size_t>(find_root(parent, c.arcs[1]))] = find_root(parent, c.arcs[3]);
  }
  int comps = free_loops;
  for (int a = 0; a < arcs; ++a) comps += find_root(parent, a) == a;
  return comps;
}

std::string LinkDiagram::to_pd() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : crossings) {
    os << (first ? "" : " ") << "X(";
    for (int p = 0; p < 4; ++p) os << (p ? "," : "") << arc_labels[static_cast<std::size_t>(c.arcs[static_cast<std::size_t>(p)])];
    os << ")";
    first = false;
  }
  for (int k = 0; k < free_loops; ++k) {
    os << (first ? "" : " ") << "Loop(" << k << ")";
    first = false;
  }
  return os.str();
}

std::vector<int> crossing_signs(const LinkDiagram& d) {
  std::vector<int> s;
  for (const auto& c : d.crossings) s.push_back(c.sign());
  return s;
}

std::array<int, 2> in_positions(const Crossing& c) { return c.over_in == 1 ? std::array<int, 2>{0, 1} : std::array<int, 2>{3, 0}; }

std::array<int, 2> out_positions(const Crossing& c) { return c.over_in == 1 ? std::array<int, 2>{2, 3} : std::array<int, 2>{1, 2}; }

bool uses_web_piece(const LinkDiagram& d, const Flattening& j, int c) {
  bool one = j.at(static_cast<std::size_t>(c));
  return d.crossings[static_cast<std::size_t>(c)].sign() > 0 ? one : !one;
}

Web flatten(const LinkDiagram& d, const Flattening& j) {
  const int n = d.size();
  if (static_cast<int>(j.size()) != n) throw std::invalid_argument("flattening size differs from crossing count");
  const int arcs = static_cast<int>(d.arc_labels.size());
  std::vector<End> head(static_cast<std::size_t>(arcs)), tail(static_cast<std::size_t>(arcs));
  for (int c = 0; c < n; ++c) {
    const auto& cr = d.crossings[static_cast<std::size_t>(c)];
    for (int p = 0; p < 4; ++p) {
      int a = cr.arcs[static_cast<std::size_t>(p)];
      (cr.incoming(p) ? head : tail)[static_cast<std::size_t>(a)] = {c, p};
    }
  }
  std::vector<bool> piece(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) piece[static_cast<std::size_t>(c)] = uses_web_piece(d, j, c);
  // Smoothing continuation: the arc leaving after entering at position p.
  auto next_arc = [&](End h) {
    const auto& cr = d.crossings[static_cast<std::size_t>(h.crossing)];
    auto in = in_positions(cr);
    auto out = out_positions(cr);
    int p = h.pos == in[0] ? out[1] : out[0];
    return cr.arcs[static_cast<std::size_t>(p)];
  };
  Web w;
  std::vector<int> edge_of(static_cast<std::size_t>(arcs), -1);
  auto trace = [&](int start, int tail_vertex) {
    Edge e;
    e.tail = tail_vertex;
    int a = start;
    while (true) {
      e.segments.push_back(a);
      edge_of[static_cast<std::size_t>(a)] = -2;
      End h = head[static_cast<std::size_t>(a)];
      if (piece[static_cast<std::size_t>(h.crossing)]) {
        e.head = 2 * h.crossing;
        break;
      }
      a = next_arc(h);
      if (a == start) break;
    }
    e.id = *std::min_element(e.segments.begin(), e.segments.end());
    for (int s : e.segments) edge_of[static_cast<std::size_t>(s)] = e.id;
    w.add_edge(std::move(e));
  };
  for (int c = 0; c < n; ++c) {
    if (!piece[static_cast<std::size_t>(c)]) continue;
    const auto& cr = d.crossings[static_cast<std::size_t>(c)];
    for (int p : out_positions(cr)) trace(cr.arcs[static_cast<std::size_t>(p)], 2 * c + 1);
    w.add_edge(Edge{2 * n + c, 2 * c + 1, 2 * c, {2 * n + c}});
  }
  for (int a = 0; a < arcs; ++a)
    if (edge_of[static_cast<std::size_t>(a)] == -1) trace(a, -1);
  for (int k = 0; k < d.free_loops; ++k) w.add_edge(Edge{3 * n + k, -1, -1, {3 * n + k}});
  for (int c = 0; c < n; ++c) {
    if (!piece[static_cast<std::size_t>(c)]) continue;
    const auto& cr = d.crossings[static_cast<std::size_t>(c)];
    auto in = in_positions(cr);
    auto out = out_positions(cr);
    auto eid = [&](int p) { return edge_of[static_cast<std::size_t>(cr.arcs[static_cast<std::size_t>(p)])]; };
    w.add_vertex(Vertex{2 * c, false, {2 * n + c, eid(in[0]), eid(in[1])}});
    w.add_vertex(Vertex{2 * c + 1, true, {eid(out[0]), eid(out[1]), 2 * n + c}});
  }
  w.normalize();
  return w;
}

LaurentPoly link_bracket(const LinkDiagram& d) {
  const int n = d.size();
  const int pp = d.positive(), pm = d.negative();
  LaurentPoly total;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    Flattening j(static_cast<std::size_t>(n));
    int size = 0;
    for (int c = 0; c < n; ++c) {
      j[static_cast<std::size_t>(c)] = (mask >> c) & 1u;
      size += j[static_cast<std::size_t>(c)];
    }
    LaurentPoly term = kuperberg_bracket(flatten(d, j)).shifted(3 * pm - 2 * pp - size);
    if ((size - pm) % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram m = d;
  for (auto& c : m.crossings) {
    const auto a = c.arcs;
    if (c.over_in == 1) {
      c.arcs = {a[1], a[2], a[3], a[0]};
      c.over_in = 3;
    } else {
      c.arcs = {a[3], a[0], a[1], a[2]};
      c.over_in = 1;
    }
  }
  return m;
}

}  // namespace sl3
