#include "sl3/prefoam.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sl3/frobenius.hpp"

namespace sl3 {

int PreFoam::euler_characteristic() const {
  int chi = 0;
  for (const auto& f : facets) chi += 2 - 2 * f.genus - f.slots - f.dots;
  return chi;
}

void PreFoam::validate() const {
  std::vector<int> count(facets.size(), 0);
  for (const auto& c : circles)
    for (int f : c.facets) {
      if (f < 0 || f >= static_cast<int>(facets.size())) throw std::logic_error("circle refers to missing facet");
      ++count[static_cast<std::size_t>(f)];
    }
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (facets[i].genus < 0 || facets[i].dots < 0) throw std::logic_error("negative genus or dots");
    if (count[i] != facets[i].slots) throw std::logic_error("facet slot count disagrees with circles");
  }
}

std::string PreFoam::to_string() const {
  std::ostringstream os;
  os << "facets[";
  for (std::size_t i = 0; i < facets.size(); ++i)
    os << (i ? " " : "") << "(g" << facets[i].genus << ",d" << facets[i].dots << ",b" << facets[i].slots << ")";
  os << "] circles[";
  for (std::size_t i = 0; i < circles.size(); ++i) {
    const auto& f = circles[i].facets;
    os << (i ? " " : "") << "(" << f[0] << "," << f[1] << "," << f[2] << ")";
  }
  os << "]";
  return os.str();
}

namespace {

long long surface_value(int genus, int dots) {
  if (genus == 0) return dots == 2 ? -1 : 0;
  if (genus == 1) return dots == 0 ? 3 : 0;
  return 0;
}

// Largest dot count for which the surface value can still be nonzero.
int dot_cap(int genus) { return genus == 0 ? 2 : 0; }

constexpr std::array<std::array<int, 3>, 6> kPerms = {{
    {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
constexpr std::array<int, 6> kPermSign = {1, 1, 1, -1, -1, -1};

struct Expander {
  const PreFoam& p;
  std::vector<int> dots;
  std::vector<int> open_slots;
  std::vector<std::size_t> order;
  Integer total = 0;

  bool facet_alive(int f) const {
    const auto& fc = p.facets[static_cast<std::size_t>(f)];
    int d = dots[static_cast<std::size_t>(f)];
    if (d > dot_cap(fc.genus)) return false;
    if (open_slots[static_cast<std::size_t>(f)] == 0) return surface_value(fc.genus, d) != 0;
    return true;
  }

  void run(std::size_t k, long long sign) {
    if (k == order.size()) {
      long long prod = sign;
      for (std::size_t f = 0; f < p.facets.size(); ++f) {
        prod *= surface_value(p.facets[f].genus, dots[f]);
        if (prod == 0) return;
      }
      total += prod;
      return;
    }
    const auto& c = p.circles[order[k]];
    for (int f : c.facets) --open_slots[static_cast<std::size_t>(f)];
    for (std::size_t pi = 0; pi < kPerms.size(); ++pi) {
      for (int s = 0; s < 3; ++s) dots[static_cast<std::size_t>(c.facets[s])] += 2 - kPerms[pi][s];
      bool alive = true;
      for (int f : c.facets) alive = alive && facet_alive(f);
      if (alive) run(k + 1, sign * kPermSign[pi]);
      for (int s = 0; s < 3; ++s) dots[static_cast<std::size_t>(c.facets[s])] -= 2 - kPerms[pi][s];
    }
    for (int f : c.facets) ++open_slots[static_cast<std::size_t>(f)];
  }
};

}  // namespace

Integer evaluate(const PreFoam& p, EvalOptions opt) {
  if (opt.euler_shortcut && p.euler_characteristic() != 0) return 0;
  Expander ex{p, {}, {}, {}, 0};
  for (const auto& f : p.facets) {
    if (f.genus >= 2) return 0;
    if (f.dots > dot_cap(f.genus)) return 0;
    ex.dots.push_back(f.dots);
    ex.open_slots.push_back(f.slots);
  }
  for (std::size_t f = 0; f < p.facets.size(); ++f)
    if (ex.open_slots[f] == 0 && surface_value(p.facets[f].genus, ex.dots[f]) == 0) return 0;
  // Visit circles so that facets get completed early.
  std::vector<bool> used(p.circles.size(), false);
  std::vector<int> remaining = ex.open_slots;
  for (std::size_t step = 0; step < p.circles.size(); ++step) {
    std::size_t best = 0;
    int best_score = -1;
    for (std::size_t i = 0; i < p.circles.size(); ++i) {
      if (used[i]) continue;
      int score = 0;
      for (int f : p.circles[i].facets) score += remaining[static_cast<std::size_t>(f)] == 1 ? 4 : 1;
      if (score > best_score) best_score = score, best = i;
    }
    used[best] = true;
    for (int f : p.circles[best].facets) --remaining[static_cast<std::size_t>(f)];
    ex.order.push_back(best);
  }
  ex.run(0, p.circles.size() % 2 ? -1 : 1);
  return ex.total;
}

PreFoam theta_foam(int a, int b, int c) {
  PreFoam p;
  for (int d : {a, b, c}) p.facets.push_back({0, d, 1});
  p.circles.push_back({{0, 1, 2}});
  return p;
}

PreFoam closed_surface(int genus, int dots) {
  PreFoam p;
  p.facets.push_back({genus, dots, 0});
  return p;
}

PreFoam disjoint_union(const PreFoam& a, const PreFoam& b) {
  PreFoam p = a;
  int off = static_cast<int>(a.facets.size());
  p.facets.insert(p.facets.end(), b.facets.begin(), b.facets.end());
  for (auto c : b.circles) {
    for (int& f : c.facets) f += off;
    p.circles.push_back(c);
  }
  return p;
}

PreFoam reverse_circle(const PreFoam& p, std::size_t circle) {
  PreFoam q = p;
  std::swap(q.circles.at(circle).facets[1], q.circles.at(circle).facets[2]);
  return q;
}

}  // namespace sl3
