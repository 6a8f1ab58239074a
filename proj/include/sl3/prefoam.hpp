#pragma once

#include <array>
#include <string>
#include <vector>

#include "sl3/integer.hpp"

namespace sl3 {

/// Facet of a closed pre-foam after its boundary annuli have been cut off.
struct PreFoamFacet {
  int genus = 0;
  int dots = 0;
  /// Number of annulus slots on singular circles.
  int slots = 0;
  friend bool operator==(const PreFoamFacet&, const PreFoamFacet&) = default;
};

/// Singular circle: the facets of its three annuli, in cyclic order.
struct SingularCircle {
  std::array<int, 3> facets{};
  friend bool operator==(const SingularCircle&, const SingularCircle&) = default;
};

/// Abstract closed pre-foam.
struct PreFoam {
  std::vector<PreFoamFacet> facets;
  std::vector<SingularCircle> circles;

  /// Euler characteristic with dots punctured out: sum over facets of
  /// 2 - 2g - b - dots (singular circles contribute nothing).
  int euler_characteristic() const;
  /// Throws std::logic_error unless every slot is accounted for by a circle.
  void validate() const;
  std::string to_string() const;
  friend bool operator==(const PreFoam&, const PreFoam&) = default;
};

struct EvalOptions {
  /// Return 0 immediately when the Euler characteristic is nonzero.
  bool euler_shortcut = true;
};

/// Integer evaluation by surgery along every singular circle.
Integer evaluate(const PreFoam& p, EvalOptions opt = {});

/// Three dotted disks glued along one singular circle in cyclic order.
PreFoam theta_foam(int a, int b, int c);
/// Closed surface of the given genus carrying the given dots.
PreFoam closed_surface(int genus, int dots);
/// Disjoint union.
PreFoam disjoint_union(const PreFoam& a, const PreFoam& b);
/// Same pre-foam with the cyclic order of one circle reversed.
PreFoam reverse_circle(const PreFoam& p, std::size_t circle);

}  // namespace sl3
