#include <atomic>
#include <mutex>
#include <shared_mutex>

#include "sl3/moves.hpp"
#include "sl3/standard_foams.hpp"
#include "sl3/web.hpp"

namespace sl3 {

namespace {

std::shared_mutex g_mutex;
std::map<std::string, LaurentPoly> g_cache;
std::atomic<bool> g_enabled{true};

LaurentPoly reduce(const Web& w) {
  Reduction r = find_reduction(w);
  switch (r.kind) {
    case ReductionKind::Empty: return LaurentPoly(1);
    case ReductionKind::FreeLoop: {
      Web rest = w;
      rest.remove_edge(r.loop);
      return LaurentPoly::quantum(3) * kuperberg_bracket(rest);
    }
    case ReductionKind::DigonFace: {
      auto e = r.face.edge_ids();
      Web rest = w;
      apply_to_web(rest, make_digon_cap(w, e[0], e[1]));
      return LaurentPoly::quantum(2) * kuperberg_bracket(rest);
    }
    case ReductionKind::SquareFace: {
      auto [a, b] = square_resolutions(w, r.face.edge_ids());
      return kuperberg_bracket(a) + kuperberg_bracket(b);
    }
  }
  return {};
}

}  // namespace

void set_bracket_cache_enabled(bool enabled) { g_enabled = enabled; }

std::map<std::string, LaurentPoly> bracket_cache_snapshot() {
  std::shared_lock lock(g_mutex);
  return g_cache;
}

void bracket_cache_insert(const std::string& canonical, const LaurentPoly& value) {
  std::unique_lock lock(g_mutex);
  g_cache.emplace(canonical, value);
}

LaurentPoly kuperberg_bracket(const Web& w) {
  if (w.empty()) return LaurentPoly(1);
  if (!g_enabled) return reduce(w);
  std::string key = canonical_form(w);
  {
    std::shared_lock lock(g_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  LaurentPoly v = reduce(w);
  bracket_cache_insert(key, v);
  return v;
}

}  // namespace sl3
