#include "sl3/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace sl3 {

namespace {

Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

std::string checksum_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = digits[h & 15u];
  return s;
}

}  // namespace

Json web_to_json(const Web& w) {
  Json edges = Json::array();
  Json loops = Json::array();
  for (const auto& [id, e] : w.edges()) {
    if (e.is_loop()) {
      loops.push_back({{"id", id}, {"segments", e.segments}});
      continue;
    }
    // The two darts of the edge: tail end at a source, head end at a sink.
    edges.push_back({{"id", id},
                     {"tail", e.tail},
                     {"head", e.head},
                     {"darts", {{{"edge", id}, {"at_head", false}}, {{"edge", id}, {"at_head", true}}}},
                     {"segments", e.segments}});
  }
  Json vertices = Json::array();
  for (const auto& [id, v] : w.vertices())
    vertices.push_back({{"id", id}, {"orientation", v.source ? "source" : "sink"}, {"rotation", v.ccw}});
  return {{"edges", edges}, {"vertices", vertices}, {"loops", loops}};
}

Web web_from_json(const Json& j) {
  Web w;
  for (const auto& e : j.at("edges"))
    w.add_edge(Edge{e.at("id").get<int>(), e.at("tail").get<int>(), e.at("head").get<int>(),
                    e.at("segments").get<std::vector<int>>()});
  for (const auto& e : j.at("loops"))
    w.add_edge(Edge{e.at("id").get<int>(), -1, -1, e.at("segments").get<std::vector<int>>()});
  for (const auto& v : j.at("vertices")) {
    const std::string o = v.at("orientation").get<std::string>();
    if (o != "source" && o != "sink") throw std::invalid_argument("bad vertex orientation: " + o);
    w.add_vertex(Vertex{v.at("id").get<int>(), o == "source", v.at("rotation").get<std::array<int, 3>>()});
  }
  w.validate();
  return w;
}

std::uint64_t web_checksum(const Web& w) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : web_to_json(w).dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Json move_to_json(const Move& m) {
  Json j = {{"kind", to_string(m.kind)}};
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, LoopData>) {
          j["loop"] = d.loop;
          j["segments"] = d.segments;
        } else if constexpr (std::is_same_v<T, SaddleData>) {
          j["merging"] = d.merging;
          j["first"] = d.first;
          j["second"] = d.second;
          j["merged"] = d.merged;
          j["first_segments"] = d.first_segments;
          j["second_segments"] = d.second_segments;
        } else if constexpr (std::is_same_v<T, DotData>) {
          j["edge"] = d.edge;
        } else if constexpr (std::is_same_v<T, ZipData>) {
          j["a"] = d.a;
          j["b"] = d.b;
          j["a_pos"] = d.a_pos;
          j["b_pos"] = d.b_pos;
          j["v"] = d.v;
          j["w"] = d.w;
          j["m"] = d.m;
          j["a_low"] = d.a_low;
          j["a_high"] = d.a_high;
          j["b_low"] = d.b_low;
          j["b_high"] = d.b_high;
          j["m_segments"] = d.m_segments;
        } else if constexpr (std::is_same_v<T, DigonData>) {
          j["e"] = d.e;
          j["e_pos"] = d.e_pos;
          j["x"] = d.x;
          j["y"] = d.y;
          j["d1"] = d.d1;
          j["d2"] = d.d2;
          j["e_a"] = d.e_a;
          j["e_b"] = d.e_b;
          j["d1_segments"] = d.d1_segments;
          j["d2_segments"] = d.d2_segments;
        } else {
          Json em = Json::array(), vm = Json::array();
          for (const auto& [a, b] : d.edge_map) em.push_back({a, b});
          for (const auto& [a, b] : d.vertex_map) vm.push_back({a, b});
          j["edge_map"] = em;
          j["vertex_map"] = vm;
        }
      },
      m.data);
  return j;
}

Move move_from_json(const Json& j) {
  Move m;
  m.kind = move_kind_from_string(j.at("kind").get<std::string>());
  switch (m.kind) {
    case MoveKind::Birth:
    case MoveKind::Death:
      m.data = LoopData{j.at("loop").get<int>(), j.at("segments").get<std::vector<int>>()};
      break;
    case MoveKind::Saddle:
      m.data = SaddleData{j.at("merging").get<bool>(),
                          j.at("first").get<int>(),
                          j.at("second").get<int>(),
                          j.at("merged").get<int>(),
                          j.at("first_segments").get<std::vector<int>>(),
                          j.at("second_segments").get<std::vector<int>>()};
      break;
    case MoveKind::Dot:
      m.data = DotData{j.at("edge").get<int>()};
      break;
    case MoveKind::Zip:
    case MoveKind::Unzip: {
      ZipData d;
      d.a = j.at("a");
      d.b = j.at("b");
      d.a_pos = j.at("a_pos");
      d.b_pos = j.at("b_pos");
      d.v = j.at("v");
      d.w = j.at("w");
      d.m = j.at("m");
      d.a_low = j.at("a_low");
      d.a_high = j.at("a_high");
      d.b_low = j.at("b_low");
      d.b_high = j.at("b_high");
      d.m_segments = j.at("m_segments").get<std::vector<int>>();
      m.data = d;
      break;
    }
    case MoveKind::DigonCup:
    case MoveKind::DigonCap: {
      DigonData d;
      d.e = j.at("e");
      d.e_pos = j.at("e_pos");
      d.x = j.at("x");
      d.y = j.at("y");
      d.d1 = j.at("d1");
      d.d2 = j.at("d2");
      d.e_a = j.at("e_a");
      d.e_b = j.at("e_b");
      d.d1_segments = j.at("d1_segments").get<std::vector<int>>();
      d.d2_segments = j.at("d2_segments").get<std::vector<int>>();
      m.data = d;
      break;
    }
    case MoveKind::Frame: {
      FrameData d;
      for (const auto& p : j.at("edge_map")) d.edge_map[p.at(0).get<int>()] = p.at(1).get<int>();
      for (const auto& p : j.at("vertex_map")) d.vertex_map[p.at(0).get<int>()] = p.at(1).get<int>();
      m.data = d;
      break;
    }
  }
  return m;
}

Json movie_to_json(const FoamMovie& u) {
  Json moves = Json::array();
  for (std::size_t i = 0; i < u.moves().size(); ++i) {
    Json m = move_to_json(u.moves()[i]);
    m["checksum"] = checksum_hex(web_checksum(u.frames()[i + 1]));
    moves.push_back(std::move(m));
  }
  return {{"source", web_to_json(u.source())},
          {"source_checksum", checksum_hex(web_checksum(u.source()))},
          {"degree", u.degree()},
          {"moves", moves}};
}

FoamMovie movie_from_json(const Json& j) {
  FoamMovie u(web_from_json(j.at("source")));
  if (j.contains("source_checksum") && j.at("source_checksum").get<std::string>() != checksum_hex(web_checksum(u.source())))
    throw std::invalid_argument("movie source checksum mismatch");
  for (const auto& mj : j.at("moves")) {
    u.push(move_from_json(mj));
    if (mj.contains("checksum") && mj.at("checksum").get<std::string>() != checksum_hex(web_checksum(u.target())))
      throw std::invalid_argument("movie frame checksum mismatch after " + mj.at("kind").get<std::string>());
  }
  return u;
}

Json basis_to_json(const WebBasis& b) {
  Json foams = Json::array();
  for (int k = 0; k < b.size(); ++k)
    foams.push_back({{"degree", b.degrees[static_cast<std::size_t>(k)]}, {"movie", movie_to_json(b.foams[static_cast<std::size_t>(k)])}});
  return {{"web", web_to_json(b.web)}, {"graded_rank", b.graded_rank().to_string()}, {"trace", b.trace}, {"foams", foams}};
}

Json homology_to_json(const LinkDiagram& d, const LaurentPoly& bracket, const BigradedHomology& h) {
  Json table = Json::array();
  for (const auto& [ij, g] : h) {
    Json torsion = Json::array();
    for (const auto& t : g.torsion) torsion.push_back(integer_json(t));
    table.push_back({{"i", ij.first}, {"j", ij.second}, {"rank", g.rank}, {"torsion", torsion}});
  }
  return {{"diagram", d.to_pd()},
          {"bracket", bracket.to_string()},
          {"homology", table},
          {"euler_check", euler_characteristic(h) == bracket}};
}

LinkDiagram diagram_from_json(const Json& j) {
  if (j.is_string()) return parse_pd(j.get<std::string>());
  return parse_pd_json(j.dump());
}

LinkDiagram parse_diagram(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && (text[first] == '{' || text[first] == '[')) return parse_pd_json(text);
  return parse_pd(text);
}

Json diagram_to_json(const LinkDiagram& d) {
  Json pd = Json::array(), over = Json::array();
  for (const auto& c : d.crossings) {
    Json t = Json::array();
    for (int a : c.arcs) t.push_back(d.arc_labels[static_cast<std::size_t>(a)]);
    pd.push_back(std::move(t));
    over.push_back(c.over_in);
  }
  return {{"pd", pd}, {"over_in", over}, {"loops", d.free_loops}};
}

void save_bracket_cache(const std::string& path) {
  Json j = Json::object();
  for (const auto& [key, value] : bracket_cache_snapshot()) j[key] = value.to_string();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache file " + path);
  out << j.dump() << '\n';
}

int load_bracket_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return 0;
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return 0;
  int count = 0;
  for (const auto& [key, value] : j.items()) {
    bracket_cache_insert(key, LaurentPoly::parse(value.get<std::string>()));
    ++count;
  }
  return count;
}

}  // namespace sl3
