#pragma once

#include <map>
#include <string>
#include <string_view>

#include "sl3/integer.hpp"

namespace sl3 {

/// Element of Z[q, q^-1], stored sparsely by exponent.
///
/// Zero coefficients are never stored, so two polynomials are equal iff their
/// term maps are equal.
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(Integer constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}  // NOLINT

  static LaurentPoly monomial(Integer coeff, int exponent);
  static LaurentPoly q(int exponent = 1) { return monomial(1, exponent); }
  /// Quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}.
  static LaurentPoly quantum(int n);

  /// Parses the canonical text form produced by to_string().
  static LaurentPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(int exponent) const;
  int min_degree() const;
  int max_degree() const;

  /// Multiplication by q^n.
  LaurentPoly shifted(int n) const;
  /// Substitution q -> q^-1.
  LaurentPoly bar() const;
  bool is_palindromic() const { return *this == bar(); }
  bool has_nonnegative_coefficients() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Canonical form, ascending powers: "q^-3 + 2*q^-1 - q + 5".
  std::string to_string() const;

 private:
  void add_term(int exponent, const Integer& coeff);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace sl3
