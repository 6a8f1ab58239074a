#include "sl3/frobenius.hpp"

#include <stdexcept>

namespace sl3 {

FrobeniusElement FrobeniusElement::basis(int power) {
  if (power < 0 || power > 2) throw std::out_of_range("A has basis 1, X, X^2");
  FrobeniusElement e;
  e.coeffs[power] = 1;
  return e;
}

FrobeniusElement& FrobeniusElement::operator+=(const FrobeniusElement& o) {
  for (int i = 0; i < 3; ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

FrobeniusElement operator*(const Integer& s, FrobeniusElement a) {
  for (auto& c : a.coeffs) c *= s;
  return a;
}

Integer trace(const FrobeniusElement& x) { return -x.coeffs[2]; }

FrobeniusElement multiply(const FrobeniusElement& x, const FrobeniusElement& y) {
  FrobeniusElement out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; i + j < 3; ++j) out.coeffs[i + j] += x.coeffs[i] * y.coeffs[j];
  return out;
}

FrobeniusTensor comultiply(const FrobeniusElement& x) {
  // D(X^k) = - sum_{i+j=2+k} X^i (x) X^j
  FrobeniusTensor out{};
  for (int k = 0; k < 3; ++k) {
    if (x.coeffs[k] == 0) continue;
    for (int i = 0; i < 3; ++i) {
      int j = 2 + k - i;
      if (j < 0 || j > 2) continue;
      out[i][j] -= x.coeffs[k];
    }
  }
  return out;
}

Integer closed_surface_value(int genus, int dots) {
  if (genus < 0 || dots < 0) throw std::invalid_argument("negative genus or dot count");
  // handle operator m o D sends 1 to -3 X^2
  FrobeniusElement handle;
  handle.coeffs[2] = -3;
  FrobeniusElement acc = FrobeniusElement::basis(0);
  for (int d = 0; d < dots && d < 3; ++d) acc = multiply(acc, FrobeniusElement::basis(1));
  if (dots >= 3) return 0;
  for (int g = 0; g < genus && g < 2; ++g) acc = multiply(acc, handle);
  if (genus >= 2) return 0;
  return trace(acc);
}

}  // namespace sl3
