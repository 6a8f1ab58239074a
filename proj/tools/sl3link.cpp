// Command-line front end for the sl(3) link homology library.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sl3/chain_complex.hpp"
#include "sl3/diagram.hpp"
#include "sl3/json_io.hpp"
#include "sl3/parallel.hpp"
#include "sl3/selftest.hpp"

using namespace sl3;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitAssertion = 2;
constexpr int kExitInvariance = 3;

struct RunConfig {
  std::vector<std::string> pd;
  std::string input;
  std::string mode = "homology";
  std::string format = "text";
  std::string cache_dir;
  int threads = 1;
  bool no_cache = false;
  bool dump_webs = false;
  bool dump_foams = false;
};

struct NamedPair {
  std::string name;
  LinkDiagram first, second;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DiagramError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<LinkDiagram> diagrams(const RunConfig& cfg) {
  std::vector<LinkDiagram> out;
  for (const auto& p : cfg.pd) out.push_back(parse_diagram(p));
  if (!cfg.input.empty()) out.push_back(parse_diagram(read_file(cfg.input)));
  if (out.empty()) throw DiagramError("no diagram given (use --pd or an input file)");
  return out;
}

// Pairs from a JSON list of {"name", "first", "second"} or text lines "first | second".
std::vector<NamedPair> pairs(const RunConfig& cfg) {
  std::vector<NamedPair> out;
  if (!cfg.input.empty()) {
    std::string text = read_file(cfg.input);
    if (trim(text).starts_with("[")) {
      Json j = Json::parse(text, nullptr, false);
      if (j.is_discarded()) throw DiagramError("invalid JSON in " + cfg.input);
      for (const auto& e : j) {
        try {
          out.push_back({e.value("name", "pair " + std::to_string(out.size() + 1)), diagram_from_json(e.at("first")),
                         diagram_from_json(e.at("second"))});
        } catch (const Json::exception& ex) {
          throw DiagramError(std::string("malformed pair: ") + ex.what());
        }
      }
    } else {
      std::istringstream lines(text);
      std::string line;
      while (std::getline(lines, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto bar = line.find('|');
        if (bar == std::string::npos) throw DiagramError("pair line needs '|': " + line);
        out.push_back({"pair " + std::to_string(out.size() + 1), parse_pd(line.substr(0, bar)), parse_pd(line.substr(bar + 1))});
      }
    }
  }
  // Inline diagrams: every one is compared with the first.
  for (std::size_t k = 1; k < cfg.pd.size(); ++k)
    out.push_back({"pd 1 vs pd " + std::to_string(k + 1), parse_diagram(cfg.pd[0]), parse_diagram(cfg.pd[k])});
  if (out.empty()) throw DiagramError("invariance mode needs an input list or at least two --pd values");
  return out;
}

std::string flattening_bits(unsigned m, int n) {
  std::string s;
  for (int c = 0; c < n; ++c) s += ((m >> c) & 1u) ? '1' : '0';
  return s;
}

int run_bracket(const RunConfig& cfg) {
  for (const auto& d : diagrams(cfg)) {
    LaurentPoly b = link_bracket(d);
    if (cfg.format == "json")
      std::cout << Json{{"diagram", d.to_pd()}, {"bracket", b.to_string()}}.dump() << '\n';
    else
      std::cout << b.to_string() << '\n';
  }
  return 0;
}

int run_webs(const RunConfig& cfg) {
  for (const auto& d : diagrams(cfg)) {
    const int n = d.size();
    Json list = Json::array();
    for (unsigned m = 0; m < (1u << n); ++m) {
      Web w = flatten(d, mask_to_flattening(m, n));
      Json e = {{"J", flattening_bits(m, n)},
                {"vertices", w.vertices().size()},
                {"edges", w.edges().size()},
                {"bracket", kuperberg_bracket(w).to_string()}};
      if (cfg.dump_webs) e["web"] = web_to_json(w);
      if (cfg.dump_foams) e["basis"] = basis_to_json(basis(w));
      list.push_back(std::move(e));
    }
    if (cfg.format == "json") {
      std::cout << Json{{"diagram", d.to_pd()}, {"flattenings", list}}.dump() << '\n';
      continue;
    }
    std::cout << "diagram: " << d.to_pd() << '\n';
    for (const auto& e : list) {
      std::cout << e["J"].get<std::string>() << "  V=" << e["vertices"] << " E=" << e["edges"] << "  "
                << e["bracket"].get<std::string>() << '\n';
      if (cfg.dump_webs) std::cout << "  " << e["web"].dump() << '\n';
      if (cfg.dump_foams) std::cout << "  " << e["basis"].dump() << '\n';
    }
  }
  return 0;
}

int run_homology(const RunConfig& cfg) {
  for (const auto& d : diagrams(cfg)) {
    Cube cube = build_cube(d);
    check_anticommutativity(cube);
    GradedChainComplex c = totalize(cube);
    c.check_d_squared();
    BigradedHomology h = homology(c);
    LaurentPoly b = link_bracket(d);
    Json j = homology_to_json(d, b, h);
    if (cfg.dump_foams) {
      Json edges = Json::array();
      for (const auto& [key, m] : cube.edges)
        edges.push_back({{"J", flattening_bits(key.first, d.size())},
                         {"crossing", key.second},
                         {"movie", movie_to_json(cube_edge_foam(d, key.first, key.second))}});
      j["edge_foams"] = edges;
    }
    if (cfg.dump_webs) {
      Json ws = Json::array();
      for (std::size_t m = 0; m < cube.bases.size(); ++m)
        ws.push_back({{"J", flattening_bits(static_cast<unsigned>(m), d.size())}, {"web", web_to_json(cube.bases[m].web)}});
      j["webs"] = ws;
    }
    if (!j["euler_check"].get<bool>()) throw std::logic_error("Euler characteristic differs from the bracket");
    if (cfg.format == "json") {
      std::cout << j.dump() << '\n';
      continue;
    }
    std::cout << "diagram: " << d.to_pd() << '\n'
              << "bracket: " << b.to_string() << '\n'
              << "i j rank torsion\n"
              << to_string(h) << "euler_check: true\n";
    if (cfg.dump_webs || cfg.dump_foams) std::cout << j.dump() << '\n';
  }
  return 0;
}

int run_invariance(const RunConfig& cfg) {
  bool all = true;
  Json list = Json::array();
  for (const auto& p : pairs(cfg)) {
    InvarianceReport r = check_invariance(p.first, p.second);
    all = all && r.pass;
    list.push_back({{"name", p.name}, {"pass", r.pass}, {"differences", r.differences}});
    if (cfg.format != "json") {
      std::cout << (r.pass ? "PASS " : "FAIL ") << p.name << '\n';
      for (const auto& diff : r.differences) std::cout << "  " << diff << '\n';
    }
  }
  if (cfg.format == "json") std::cout << Json{{"pairs", list}, {"pass", all}}.dump() << '\n';
  return all ? 0 : kExitInvariance;
}

int run_selftest_mode(const RunConfig& cfg) {
  auto reports = run_selftest();
  int checks = 0;
  bool ok = true;
  Json list = Json::array();
  for (const auto& r : reports) {
    checks += r.checks;
    ok = ok && r.ok();
    list.push_back({{"name", r.name}, {"checks", r.checks}, {"failures", r.failures}});
    if (cfg.format != "json") {
      std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)\n";
      for (const auto& f : r.failures) std::cout << "  " << f << '\n';
    }
  }
  if (cfg.format == "json")
    std::cout << Json{{"checks", checks}, {"pass", ok}, {"suites", list}}.dump() << '\n';
  else
    std::cout << (ok ? "selftest passed: " : "selftest FAILED: ") << checks << " checks\n";
  return ok ? 0 : kExitAssertion;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"sl(3) link homology: Kuperberg brackets, web homology and bigraded link homology over Z"};
  app.add_option("input", cfg.input, "Diagram file (PD text or JSON); for invariance, a list of pairs");
  app.add_option("--pd", cfg.pd, "Inline PD code such as \"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\"; repeatable");
  app.add_option("--mode", cfg.mode, "bracket | webs | homology | invariance | selftest")
      ->check(CLI::IsMember({"bracket", "webs", "homology", "invariance", "selftest"}));
  app.add_option("--format", cfg.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cfg.cache_dir, "Directory of the persistent bracket cache (default: $SL3_CACHE_DIR)");
  app.add_flag("--no-cache", cfg.no_cache, "Disable bracket memoization");
  app.add_flag("--dump-webs", cfg.dump_webs, "Include web serializations");
  app.add_flag("--dump-foams", cfg.dump_foams, "Include foam movies (basis foams or cube edge foams)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  set_thread_count(cfg.threads);
  if (cfg.cache_dir.empty())
    if (const char* env = std::getenv("SL3_CACHE_DIR")) cfg.cache_dir = env;
  std::string cache_file;
  if (cfg.no_cache) {
    set_bracket_cache_enabled(false);
  } else if (!cfg.cache_dir.empty()) {
    cache_file = (std::filesystem::path(cfg.cache_dir) / "brackets.json").string();
    load_bracket_cache(cache_file);
  }

  int code = 0;
  try {
    if (cfg.mode == "bracket") code = run_bracket(cfg);
    else if (cfg.mode == "webs") code = run_webs(cfg);
    else if (cfg.mode == "homology") code = run_homology(cfg);
    else if (cfg.mode == "invariance") code = run_invariance(cfg);
    else code = run_selftest_mode(cfg);
  } catch (const DiagramError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitAssertion;
  }
  if (!cache_file.empty()) {
    std::filesystem::create_directories(cfg.cache_dir);
    save_bracket_cache(cache_file);
  }
  return code;
}
