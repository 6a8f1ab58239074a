#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sl3/laurent.hpp"

namespace sl3 {

/// Oriented edge of a web. A free loop has no endpoints.
///
/// `segments` are opaque labels (diagram arcs, crossing pseudo-arcs) carried
/// along the edge in flow order; they let webs produced by local moves be
/// matched against independently constructed flattenings. Loop segment lists
/// are rotated so the smallest label comes first.
struct Edge {
  int id = 0;
  int tail = -1;
  int head = -1;
  std::vector<int> segments;

  bool is_loop() const { return tail < 0; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Trivalent vertex; every incident edge points out of a source and into a sink.
struct Vertex {
  int id = 0;
  bool source = false;
  /// Incident edges in counterclockwise planar order, rotated so the smallest
  /// edge id comes first.
  std::array<int, 3> ccw{};

  int succ(int edge) const;
  int pred(int edge) const;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Dart = one end of a non-loop edge; `at_head` selects which end.
struct Dart {
  int edge = 0;
  bool at_head = false;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// Closed Kuperberg web: a planar bipartite trivalent graph, as a combinatorial
/// map (vertex rotations + edge pairing), together with verticeless loops.
class Web {
 public:
  const std::map<int, Edge>& edges() const { return edges_; }
  const std::map<int, Vertex>& vertices() const { return vertices_; }
  const Edge& edge(int id) const;
  const Vertex& vertex(int id) const;
  bool has_edge(int id) const { return edges_.count(id) != 0; }
  bool has_vertex(int id) const { return vertices_.count(id) != 0; }
  bool empty() const { return edges_.empty(); }
  std::vector<int> loops() const;
  int next_edge_id() const;
  int next_vertex_id() const;

  /// Mutators used by construction code and by foam moves; they do not validate.
  Edge& add_edge(Edge e);
  Vertex& add_vertex(Vertex v);
  void remove_edge(int id);
  void remove_vertex(int id);
  Edge& edge_mut(int id);
  Vertex& vertex_mut(int id);
  /// Replaces `from` by `to` in the rotation of vertex `v`.
  void replace_in_rotation(int v, int from, int to);
  /// Restores the canonical rotation start and loop segment order.
  void normalize();

  /// Vertex at the given dart.
  int dart_vertex(const Dart& d) const;
  /// Throws std::logic_error describing the first violated web invariant.
  void validate() const;

  /// Euler characteristic of the underlying 1-complex.
  int euler_characteristic() const;

  friend bool operator==(const Web&, const Web&) = default;

 private:
  std::map<int, Edge> edges_;
  std::map<int, Vertex> vertices_;
};

/// Boundary walk of a face of the trivalent part; darts in traversal order.
struct Face {
  std::vector<Dart> darts;
  std::vector<int> edge_ids() const;
};

/// Faces of the trivalent part of the web. Each free loop contributes two
/// faces of its own, reported separately as `loop_faces`.
struct FaceStructure {
  std::vector<Face> faces;
  int loop_faces = 0;
  int total() const { return static_cast<int>(faces.size()) + loop_faces; }
};

FaceStructure faces(const Web& w);

/// Number of connected components of the trivalent part (loops excluded).
int trivalent_components(const Web& w);

enum class ReductionKind { Empty, FreeLoop, DigonFace, SquareFace };

struct Reduction {
  ReductionKind kind = ReductionKind::Empty;
  /// Loop id for FreeLoop; otherwise the face boundary.
  int loop = -1;
  Face face;
};

/// Loop first, then digon face, then square face; ties broken by the sorted
/// edge ids of the face.
Reduction find_reduction(const Web& w);

/// Evaluates the Kuperberg bracket by loop/digon/square reductions.
LaurentPoly kuperberg_bracket(const Web& w);

/// Bracket memo keyed by canonical form; shared by all threads.
void set_bracket_cache_enabled(bool enabled);
std::map<std::string, LaurentPoly> bracket_cache_snapshot();
void bracket_cache_insert(const std::string& canonical, const LaurentPoly& value);

/// Canonical string for the isomorphism class of the web (planar map
/// isomorphism preserving rotations and orientations; labels ignored).
std::string canonical_form(const Web& w);

/// Disjoint union; ids of `b` are shifted past those of `a`.
Web disjoint_union(const Web& a, const Web& b);

/// Small named webs used in tests and self checks.
namespace webs {
Web circle();
Web theta();
/// Circle with `n` >= 1 digons inserted along it (n = 1 is the theta web).
Web digon_chain(int n);
/// The cube web: bipartite, 8 vertices, 12 edges, all faces squares.
Web cube();
}  // namespace webs

}  // namespace sl3
