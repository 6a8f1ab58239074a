#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sl3/laurent.hpp"
#include "sl3/web.hpp"

namespace sl3 {

/// Raised for malformed or inconsistent diagram input.
class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Crossing of an oriented diagram. Positions 0..3 are counterclockwise,
/// starting at the incoming under-strand; the under-strand leaves at 2.
struct Crossing {
  /// Arc labels at the four positions, renumbered to 0..2n-1.
  std::array<int, 4> arcs{};
  /// Position (1 or 3) where the over-strand enters.
  int over_in = 1;

  int sign() const { return over_in == 1 ? 1 : -1; }
  bool incoming(int pos) const { return pos == 0 || pos == over_in; }
};

/// Oriented link diagram given by planar-diagram data.
struct LinkDiagram {
  std::vector<Crossing> crossings;
  /// Components without crossings.
  int free_loops = 0;
  /// Original label of each renumbered arc.
  std::vector<long long> arc_labels;

  int size() const { return static_cast<int>(crossings.size()); }
  int positive() const;
  int negative() const;
  int writhe() const { return positive() - negative(); }
  /// Number of link components.
  int components() const;
  /// PD text using the original labels.
  std::string to_pd() const;
};

/// Parses "X(1,4,2,5) X(3,6,4,1) ..." (also X[...] and Loop(k)/Loop[k] tokens for
/// crossingless components). Over-strand orientations are propagated from the
/// under-strands; components passing only over are oriented by label succession.
LinkDiagram parse_pd(std::string_view text);
/// JSON form: {"pd": [[a,b,c,d], ...], "over_in": [1 or 3, ...], "loops": k}; the
/// last two keys are optional. A bare list of 4-tuples is also accepted.
LinkDiagram parse_pd_json(std::string_view text);
/// Builds a diagram from tuples, with optional explicit over-strand entry positions.
LinkDiagram make_diagram(const std::vector<std::array<long long, 4>>& tuples, int free_loops = 0,
                         const std::vector<int>& over_in = {});

/// Closure of a braid on `strands` strands; generator k > 0 is sigma_k (a
/// positive crossing of strands k and k+1), -k its inverse.
LinkDiagram braid_closure(int strands, const std::vector<int>& word);

/// +1 / -1 per crossing.
std::vector<int> crossing_signs(const LinkDiagram& d);

/// Subset of crossings given the 1-flattening; bit i is crossing i.
using Flattening = std::vector<bool>;

/// Web D_J. Positive crossings: 0 = oriented smoothing, 1 = two-vertex piece;
/// negative crossings the other way round. Edge ids are the smallest arc
/// segment on the edge; the middle edge of crossing c carries segment 2n+c,
/// the k-th free loop segment 3n+k; crossing c's vertices are 2c (sink) and
/// 2c+1 (source).
Web flatten(const LinkDiagram& d, const Flattening& j);
/// True iff crossing c uses its two-vertex piece in D_J.
bool uses_web_piece(const LinkDiagram& d, const Flattening& j, int c);

/// Arc label on the incoming (or outgoing) side of crossing c, in the order
/// used by the flattening: in_seq and out_seq as position lists.
std::array<int, 2> in_positions(const Crossing& c);
std::array<int, 2> out_positions(const Crossing& c);

/// Sum over flattenings of (-1)^{|J|-p_-} q^{3p_- - 2p_+ - |J|} <D_J>.
LaurentPoly link_bracket(const LinkDiagram& d);

/// Mirror image (every crossing changed).
LinkDiagram mirror(const LinkDiagram& d);

}  // namespace sl3
