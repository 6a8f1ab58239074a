#pragma once

#include <string>
#include <vector>

#include "sl3/moves.hpp"
#include "sl3/web.hpp"

namespace sl3 {

/// Outcome of one family of identity checks.
struct CheckReport {
  std::string name;
  int checks = 0;
  /// Checks whose two sides were nonzero (closures that actually test something).
  int nonzero = 0;
  std::vector<std::string> failures;

  bool ok() const { return checks > 0 && failures.empty(); }
  void expect(bool condition, const std::string& what);
};

/// theta(a,b,c) for all a, b, c <= 3.
CheckReport check_theta_table();
/// Dotted spheres, tori and higher-genus surfaces, directly and as pre-foams.
CheckReport check_closed_surfaces();

/// Surgery, genus reduction, dot relations near a singular circle, bubble
/// bursting and disc removal, each under `closures` random closures.
std::vector<CheckReport> check_local_relations(int closures, unsigned seed);

/// The five digon identities at the digon bounded by p and q of w.
CheckReport check_digon_identities(const Web& w, int p, int q);
/// The five square identities at the square face with the given boundary edges.
CheckReport check_square_identities(const Web& w, const std::vector<int>& square_edges);
/// Digon identities at every digon face of w and at a digon inserted into every edge.
CheckReport check_digon_suite(const Web& w);
/// Square identities at every square face of w.
CheckReport check_square_suite(const Web& w);

/// Graded rank of basis(w) equals the bracket and every pairing block is unimodular.
CheckReport check_graded_rank(const Web& w);
/// X_i + X_j + X_k = 0, e2 = 0, e3 = 0 at each vertex, X^3 = 0 on every edge.
CheckReport check_ring_relations(const Web& w);

/// Everything above on the built-in webs; used by the CLI selftest mode.
std::vector<CheckReport> run_selftest(unsigned seed = 1);

}  // namespace sl3
