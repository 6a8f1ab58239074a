#pragma once

#include <map>
#include <vector>

#include "sl3/moves.hpp"
#include "sl3/prefoam.hpp"
#include "sl3/web.hpp"

namespace sl3 {

/// The abstract pre-foam of an open foam from the empty web to the current
/// frame, tracked incrementally move by move.
///
/// Each facet carries K, its Euler characteristic minus the number of
/// non-loop frame edges on its top boundary. Singular arcs are recorded as a
/// pairing of the frame's vertices; arcs that have closed up are kept as
/// circles with their cyclic facet order.
class FoamState {
 public:
  FoamState() = default;

  const Web& web() const { return web_; }
  void apply(const Move& m);

  /// The closed pre-foam obtained by capping `a` with the reflection of `b`.
  /// Both states must end on the same labeled web.
  static PreFoam glue(const FoamState& a, const FoamState& b);
  /// Closed pre-foam of a state whose frame is empty.
  PreFoam close() const;

 private:
  int new_facet(int k);
  int find(int f) const;
  int unite(int f, int g);
  int facet_of(int edge) const;
  std::array<int, 3> vertex_triple(int v) const;

  Web web_;
  std::vector<int> parent_;
  std::vector<int> k_;
  std::vector<int> dots_;
  std::map<int, int> edge_facet_;
  std::map<int, int> partner_;
  std::vector<std::array<int, 3>> circles_;
};

/// Foam presented as a sequence of elementary moves between web frames.
class FoamMovie {
 public:
  explicit FoamMovie(Web source = {});

  /// Applies the move to the last frame and appends it.
  FoamMovie& push(const Move& m);
  const Web& source() const { return frames_.front(); }
  const Web& target() const { return frames_.back(); }
  const std::vector<Web>& frames() const { return frames_; }
  const std::vector<Move>& moves() const { return moves_; }
  bool closed() const { return source().empty() && target().empty(); }

  /// This movie followed by `next`; throws std::invalid_argument on a frame mismatch.
  FoamMovie then(const FoamMovie& next) const;
  FoamMovie reflect() const;
  int degree() const;

  friend bool operator==(const FoamMovie&, const FoamMovie&) = default;

 private:
  std::vector<Web> frames_;
  std::vector<Move> moves_;
};

/// u followed by v.
FoamMovie compose(const FoamMovie& u, const FoamMovie& v);
FoamMovie reflect(const FoamMovie& u);
int degree(const FoamMovie& u);

/// Pre-foam of a closed movie; throws std::invalid_argument if not closed.
PreFoam extract_prefoam(const FoamMovie& u);
Integer evaluate_closed(const FoamMovie& u, EvalOptions opt = {});

/// Runs the moves of a movie starting from the empty web.
FoamState run_from_empty(const FoamMovie& u);
/// Continues a state with the moves of a movie whose source is the state's frame.
FoamState run(FoamState s, const FoamMovie& u);

}  // namespace sl3
