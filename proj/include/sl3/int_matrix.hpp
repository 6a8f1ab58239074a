#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sl3/integer.hpp"

namespace sl3 {

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer& operator()(int i, int j) { return data_[index(i, j)]; }
  const Integer& operator()(int i, int j) const { return data_[index(i, j)]; }

  bool is_zero() const;
  IntMatrix transpose() const;
  IntMatrix operator-() const;
  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& s, IntMatrix a);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j); }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

/// Raised when a matrix that must be unimodular is not.
class NotUnimodular : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact determinant (fraction-free elimination).
Integer determinant(const IntMatrix& m);
/// Integer inverse of a square matrix with determinant +-1; throws NotUnimodular otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);
/// Nonzero invariant factors d1 | d2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(IntMatrix m);
int rank(const IntMatrix& m);

}  // namespace sl3
