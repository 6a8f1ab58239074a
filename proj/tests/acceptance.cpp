#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "sl3/chain_complex.hpp"
#include "sl3/json_io.hpp"
#include "sl3/selftest.hpp"

using namespace sl3;

namespace {

struct Named {
  std::string name;
  LinkDiagram diagram;
};

Json read_json(const std::string& file) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + file);
  if (!in) throw std::runtime_error("missing fixture " + file);
  return Json::parse(in);
}

std::vector<Named> corpus() {
  std::vector<Named> out;
  for (const auto& e : read_json("corpus.json"))
    out.push_back({e["name"].get<std::string>(), diagram_from_json(e["diagram"])});
  return out;
}

std::vector<Web> corpus_webs() {
  std::vector<Web> out;
  std::set<std::string> seen;
  for (const auto& [name, d] : corpus()) {
    int n = static_cast<int>(d.size());
    for (unsigned j = 0; j < (1u << n); ++j) {
      Web w = flatten(d, mask_to_flattening(j, n));
      if (seen.insert(canonical_form(w)).second) out.push_back(std::move(w));
    }
  }
  return out;
}

std::string summarize(const std::vector<CheckReport>& reports, bool& ok) {
  ok = !reports.empty();
  int checks = 0;
  std::string detail;
  for (const auto& r : reports) {
    checks += r.checks;
    if (!r.ok()) {
      ok = false;
      detail += "; " + r.name + ": " + (r.failures.empty() ? "no checks" : r.failures.front());
    }
  }
  return std::to_string(checks) + " checks" + detail;
}

using Criterion = std::function<std::string(bool&)>;

BigradedHomology unknot_table() {
  return {{{0, -2}, {1, {}}}, {{0, 0}, {1, {}}}, {{0, 2}, {1, {}}}};
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, double>> limits = {
      {"theta-foam table", 1},          {"closed-surface values", 1},
      {"local relations", 60},          {"digon and square identities", 60},
      {"graded rank theorem", 300},     {"ring relations", 120},
      {"complex sanity", 120},          {"Euler characteristic", 300},
      {"unknot homology", 60},          {"Reidemeister invariance", 600},
  };

  std::vector<Criterion> criteria = {
      [](bool& ok) { return summarize({check_theta_table()}, ok); },
      [](bool& ok) { return summarize({check_closed_surfaces()}, ok); },
      [](bool& ok) {
        auto reports = check_local_relations(100, 7);
        std::string s = summarize(reports, ok);
        ok = ok && reports.size() == 5;
        for (const auto& r : reports) ok = ok && r.checks >= 100 && r.nonzero > 0;
        return s;
      },
      [](bool& ok) {
        std::vector<CheckReport> r;
        for (const Web& w : {webs::theta(), webs::digon_chain(2), webs::digon_chain(3), webs::cube()})
          r.push_back(check_digon_suite(w));
        for (const Web& w : {webs::digon_chain(2), webs::cube()}) r.push_back(check_square_suite(w));
        return summarize(r, ok);
      },
      [](bool& ok) {
        std::vector<CheckReport> r;
        for (const Web& w : corpus_webs()) r.push_back(check_graded_rank(w));
        return std::to_string(r.size()) + " webs, " + summarize(r, ok);
      },
      [](bool& ok) {
        std::vector<CheckReport> r;
        for (const Web& w : corpus_webs()) r.push_back(check_ring_relations(w));
        return std::to_string(r.size()) + " webs, " + summarize(r, ok);
      },
      [](bool& ok) {
        ok = true;
        int squares = 0, diagrams = 0;
        std::string err;
        for (const auto& [name, d] : corpus()) {
          try {
            Cube c = build_cube(d);
            squares += check_anticommutativity(c);
            totalize(c).check_d_squared();
            ++diagrams;
          } catch (const std::exception& e) {
            ok = false;
            err += "; " + name + ": " + e.what();
          }
        }
        return std::to_string(diagrams) + " diagrams, " + std::to_string(squares) + " squares" + err;
      },
      [](bool& ok) {
        ok = true;
        std::set<std::string> wanted = {"unknot", "unknot_positive_kink", "unknot_negative_kink",
                                        "hopf_positive", "trefoil_positive", "trefoil_negative",
                                        "figure_eight"};
        std::string err;
        int n = 0;
        for (const auto& [name, d] : corpus()) {
          if (!wanted.count(name)) continue;
          ++n;
          LaurentPoly chi = euler_characteristic(homology(build_complex(d)));
          if (chi != link_bracket(d)) {
            ok = false;
            err += "; " + name + ": " + chi.to_string();
          }
          if (name == "unknot" && chi != LaurentPoly::quantum(3)) ok = false;
        }
        ok = ok && n == static_cast<int>(wanted.size());
        return std::to_string(n) + " diagrams" + err;
      },
      [](bool& ok) {
        ok = true;
        std::string err;
        for (const char* pd : {"Loop(1)", "X(1,2,2,1)", "X(2,2,1,1)", "X(2,1,3,2) X(3,1,4,4)",
                               "X(1,2,4,1) X(4,3,3,2)"}) {
          if (homology(build_complex(parse_pd(pd))) != unknot_table()) {
            ok = false;
            err += std::string("; ") + pd;
          }
        }
        return "0, 1 and 2 crossings" + err;
      },
      [](bool& ok) {
        ok = true;
        std::set<std::string> moves;
        int pairs = 0;
        std::string err;
        for (const auto& e : read_json("reidemeister.json")) {
          InvarianceReport r = check_invariance(diagram_from_json(e["first"]), diagram_from_json(e["second"]));
          ++pairs;
          moves.insert(e["move"].get<std::string>());
          if (!r.pass) {
            ok = false;
            err += "; " + e["name"].get<std::string>();
          }
        }
        ok = ok && pairs >= 10 && moves.count("R1") && moves.count("R2") && moves.count("R3");
        return std::to_string(pairs) + " pairs" + err;
      },
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    bool ok = false;
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    try {
      detail = criteria[k](ok);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > limits[k].second) {
      ok = false;
      detail += "; over time limit";
    }
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << k + 1 << " (" << limits[k].first << "): " << detail
              << " [" << secs << " s]\n";
  }
  return failed == 0 ? 0 : 1;
}
