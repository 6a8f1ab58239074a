#pragma once

#include <map>
#include <string>
#include <vector>

#include "sl3/foam.hpp"
#include "sl3/int_matrix.hpp"
#include "sl3/laurent.hpp"

namespace sl3 {

/// Inverse of the pairing between basis elements of degree d (columns) and
/// of degree -d (rows).
struct PairingBlock {
  std::vector<int> rows;  // indices of degree -d
  std::vector<int> cols;  // indices of degree d
  IntMatrix inverse;      // cols x rows
};

/// Basis of F(web) given by foams from the empty web.
struct WebBasis {
  Web web;
  std::vector<FoamMovie> foams;
  std::vector<int> degrees;
  /// Reduction steps used, outermost first.
  std::vector<std::string> trace;
  /// Open pre-foam of each basis foam.
  std::vector<FoamState> states;
  /// Keyed by the column degree d.
  std::map<int, PairingBlock> blocks;

  int size() const { return static_cast<int>(foams.size()); }
  LaurentPoly graded_rank() const;
};

/// Basis by loop / digon / square reduction; the pairing is inverted block by
/// block, throwing NotUnimodular if some block is singular over Z.
WebBasis basis(const Web& w);
/// Basis foams only (no pairing), for inspection.
WebBasis basis_foams(const Web& w);

/// Entry (j, k) is the evaluation of b_k followed by the reflection of b_j.
IntMatrix gram_matrix(const WebBasis& b);
/// Pairing between two foam states ending on the same web: state a capped by
/// the reflection of state b.
Integer pairing(const FoamState& a, const FoamState& b);

/// Matrix of F(u) in the given bases (columns indexed by `from`).
IntMatrix induced_map(const FoamMovie& u, const WebBasis& from, const WebBasis& to);
/// Multiplication by the dot on edge e.
IntMatrix edge_dot_action(const Web& w, int edge, const WebBasis& b);

}  // namespace sl3
