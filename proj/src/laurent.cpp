#include "sl3/laurent.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sl3 {

LaurentPoly::LaurentPoly(Integer constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(Integer coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::quantum(int n) {
  if (n < 0) return -quantum(-n);
  LaurentPoly p;
  for (int k = 0; k < n; ++k) p.add_term(n - 1 - 2 * k, 1);
  return p;
}

void LaurentPoly::add_term(int exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::logic_error("min_degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::logic_error("max_degree of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::shifted(int n) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + n, c);
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

namespace {

struct TermParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char ch) {
    skip_ws();
    if (pos < s.size() && s[pos] == ch) {
      ++pos;
      return true;
    }
    return false;
  }
  bool at_digit() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("expected digits in polynomial text");
    return std::string(s.substr(start, pos - start));
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  TermParser p{text};
  LaurentPoly out;
  p.skip_ws();
  if (p.pos == text.size()) throw std::invalid_argument("empty polynomial text");
  if (p.eat('0')) {
    p.skip_ws();
    if (p.pos == text.size()) return out;
    p.pos = 0;
  }
  bool first = true;
  while (true) {
    p.skip_ws();
    if (p.pos == text.size()) break;
    int sign = 1;
    if (p.eat('-')) {
      sign = -1;
    } else if (!p.eat('+') && !first) {
      throw std::invalid_argument("expected '+' or '-' between terms");
    }
    first = false;
    Integer coeff = 1;
    int exponent = 0;
    bool have_coeff = false;
    if (p.at_digit()) {
      coeff = Integer(p.digits());
      have_coeff = true;
    }
    bool has_q = false;
    if (have_coeff) {
      if (p.eat('*')) {
        if (!p.eat('q')) throw std::invalid_argument("expected 'q' after '*'");
        has_q = true;
      }
    } else {
      if (!p.eat('q')) throw std::invalid_argument("expected coefficient or 'q'");
      has_q = true;
    }
    if (has_q) {
      exponent = 1;
      if (p.eat('^')) {
        int esign = p.eat('-') ? -1 : 1;
        exponent = esign * std::stoi(p.digits());
      }
    }
    out.add_term(exponent, sign * coeff);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace sl3
