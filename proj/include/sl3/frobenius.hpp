#pragma once

#include <array>

#include "sl3/integer.hpp"

namespace sl3 {

/// Element a0 + a1 X + a2 X^2 of A = Z[X]/X^3.
///
/// X^a sits in degree 2a - 2, so A is balanced around degree 0.
struct FrobeniusElement {
  std::array<Integer, 3> coeffs{};

  static FrobeniusElement basis(int power);
  static int degree_of_basis(int power) { return 2 * power - 2; }

  friend bool operator==(const FrobeniusElement&, const FrobeniusElement&) = default;
  FrobeniusElement& operator+=(const FrobeniusElement& o);
  friend FrobeniusElement operator+(FrobeniusElement a, const FrobeniusElement& b) { return a += b; }
  friend FrobeniusElement operator*(const Integer& s, FrobeniusElement a);
};

/// Element of A (x) A; entry [i][j] is the coefficient of X^i (x) X^j.
using FrobeniusTensor = std::array<std::array<Integer, 3>, 3>;

/// Trace: e(1) = 0, e(X) = 0, e(X^2) = -1.
Integer trace(const FrobeniusElement& x);
FrobeniusElement multiply(const FrobeniusElement& x, const FrobeniusElement& y);
/// Comultiplication, the dual of multiplication under the trace form.
FrobeniusTensor comultiply(const FrobeniusElement& x);

/// Closed connected dotted surface of the given genus: e(X^dots * (m o D)(1)^genus).
Integer closed_surface_value(int genus, int dots);

}  // namespace sl3
