#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sl3/diagram.hpp"
#include "sl3/int_matrix.hpp"
#include "sl3/web_basis.hpp"

namespace sl3 {

/// Cube of flattenings with web bases at the vertices and unsigned edge maps.
/// Vertex J is a bitmask over crossings (bit c = crossing c has its 1-flattening).
struct Cube {
  LinkDiagram diagram;
  std::vector<WebBasis> bases;
  /// (J, b) -> matrix of the zip/unzip map D_J -> D_{J+b}, before signs.
  std::map<std::pair<unsigned, int>, IntMatrix> edges;

  int crossings() const { return diagram.size(); }
  /// (-1)^{#{a in J : a < b}}.
  static int sign(unsigned j, int b);
  /// Grading shift of vertex J: 3p_- - 2p_+ - |J|.
  int shift(unsigned j) const;
};

Flattening mask_to_flattening(unsigned mask, int n);
/// The elementary foam D_J -> D_{J+b} (zip for positive b, unzip for negative b).
FoamMovie cube_edge_foam(const LinkDiagram& d, unsigned j, int b);
Cube build_cube(const LinkDiagram& d);
/// Checks every square of the signed cube anticommutes; returns the number of squares.
int check_anticommutativity(const Cube& c);

/// Total complex in one q-degree: C^i for i = imin..imin+dims.size()-1.
struct QSlice {
  std::vector<int> dims;
  /// d[k] : C^{imin+k} -> C^{imin+k+1}.
  std::vector<IntMatrix> d;
};

struct GradedChainComplex {
  int imin = 0;
  int imax = 0;
  std::map<int, QSlice> slices;
  /// Throws std::logic_error if some d^2 is nonzero.
  void check_d_squared() const;
  LaurentPoly euler_characteristic() const;
};

GradedChainComplex build_complex(const LinkDiagram& d);
GradedChainComplex totalize(const Cube& c);

struct HomologyGroup {
  int rank = 0;
  std::vector<Integer> torsion;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Nonzero groups keyed by (i, j).
using BigradedHomology = std::map<std::pair<int, int>, HomologyGroup>;

BigradedHomology homology(const GradedChainComplex& c);
LaurentPoly euler_characteristic(const BigradedHomology& h);
/// Text table, one "i j rank torsion" line per nonzero group.
std::string to_string(const BigradedHomology& h);

struct InvarianceReport {
  bool pass = false;
  BigradedHomology first;
  BigradedHomology second;
  std::vector<std::string> differences;
};

InvarianceReport check_invariance(const LinkDiagram& d1, const LinkDiagram& d2);

}  // namespace sl3
