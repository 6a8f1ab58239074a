#pragma once

#include <string>
#include <vector>

#include "sl3/foam.hpp"
#include "sl3/web.hpp"

namespace sl3 {

/// Digon facet carrying the dot of tau2 and of rho1, as d1/d2 of the digon
/// (see DigonData). The two maps use opposite facets.
enum class DigonSide { Left, Right };
extern const DigonSide kTau2DotSide;
extern const DigonSide kRho1DotSide;

/// tau1 / tau2: edge e of w becomes a digon (inserted before segment index pos).
FoamMovie tau(const Web& w, int index, int e, int pos = 0);
/// tau1 / tau2 built on a given DIGON_CUP move.
FoamMovie tau(const Web& w, int index, const Move& cup);
/// rho1 / rho2: the digon face bounded by edges p and q collapses to an edge.
FoamMovie rho(const Web& w, int index, int p, int q);
/// rho1 / rho2 built on a given DIGON_CAP move.
FoamMovie rho(const Web& w, int index, const Move& cap);

/// The pair of resolutions of a square face. psi_k goes from w to the k-th
/// resolution; nu_k is its reflection.
struct SquareMaps {
  FoamMovie psi[2];
  FoamMovie nu[2];
};
/// Square face boundary given as its four edges in boundary order. Resolution 1
/// removes the vertices joined by the second edge, resolution 2 those joined by
/// the first.
SquareMaps square_maps(const Web& w, const std::vector<int>& square_edges);

/// Zip of two strands at the given cut positions (see make_zip), followed by
/// the segment relabeling.
FoamMovie basic_zip(const Web& w, int a, int a_pos, int b, int b_pos, int v_id, int w_id,
                    std::vector<int> m_segments);
/// Unzip of edge m followed by the segment relabeling.
FoamMovie basic_unzip(const Web& w, int m);

/// Creation of loop `loop` carrying d dots.
FoamMovie alpha(const Web& w, int dots, int loop, std::vector<int> segments = {});
/// Cap of loop `loop` with d dots (pairs with alpha under gluing).
FoamMovie beta(const Web& w, int loop, int dots);

/// Identity movie on w.
FoamMovie identity(const Web& w);
/// Identity with one dot on edge e.
FoamMovie dot_on(const Web& w, int e);

/// Resolutions of a square face as webs, without building foams (used by the bracket).
std::pair<Web, Web> square_resolutions(const Web& w, const std::vector<int>& square_edges);

}  // namespace sl3
