#include "sl3/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace sl3 {

namespace {
Integer iabs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Floor division keeping remainders nonnegative would also work; truncation is enough
// because every pivot step strictly lowers the smallest absolute value.
Integer quot(const Integer& a, const Integer& b) { return a / b; }
}  // namespace

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

IntMatrix operator*(const Integer& s, IntMatrix a) {
  for (auto& x : a.data_) x *= s;
  return a;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

Integer determinant(const IntMatrix& m0) {
  if (m0.rows() != m0.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = m0.rows();
  IntMatrix m = m0;
  Integer sign = 1, prev = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return n == 0 ? Integer(1) : sign * m(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& m0) {
  if (m0.rows() != m0.cols()) throw NotUnimodular("inverse of a non-square matrix");
  const int n = m0.rows();
  IntMatrix a = m0;
  IntMatrix inv = IntMatrix::identity(n);
  auto swap_rows = [&](int r, int s) {
    for (int j = 0; j < n; ++j) {
      std::swap(a(r, j), a(s, j));
      std::swap(inv(r, j), inv(s, j));
    }
  };
  auto add_row = [&](int dst, int src, Integer f) {  // row dst -= f * row src
    if (f == 0) return;
    for (int j = 0; j < n; ++j) {
      if (a(src, j) != 0) a(dst, j) -= f * a(src, j);
      if (inv(src, j) != 0) inv(dst, j) -= f * inv(src, j);
    }
  };
  for (int k = 0; k < n; ++k) {
    while (true) {
      int p = -1;
      for (int i = k; i < n; ++i)
        if (a(i, k) != 0 && (p < 0 || iabs(a(i, k)) < iabs(a(p, k)))) p = i;
      if (p < 0) throw NotUnimodular("singular matrix");
      if (p != k) swap_rows(p, k);
      bool done = true;
      for (int i = k + 1; i < n; ++i) {
        if (a(i, k) == 0) continue;
        add_row(i, k, quot(a(i, k), a(k, k)));
        if (a(i, k) != 0) done = false;
      }
      if (done) break;
    }
    if (iabs(a(k, k)) != 1) throw NotUnimodular("determinant is not +-1");
  }
  for (int k = n - 1; k >= 0; --k) {
    if (a(k, k) == -1)
      for (int j = 0; j < n; ++j) {
        a(k, j) = -a(k, j);
        inv(k, j) = -inv(k, j);
      }
    for (int i = 0; i < k; ++i) add_row(i, k, a(i, k));
  }
  return inv;
}

std::vector<Integer> smith_invariants(IntMatrix a) {
  const int r = a.rows(), c = a.cols();
  std::vector<Integer> out;
  for (int t = 0; t < std::min(r, c); ++t) {
    // pivot: smallest nonzero absolute value in the trailing block
    int pi = -1, pj = -1;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j)
        if (a(i, j) != 0 && (pi < 0 || iabs(a(i, j)) < iabs(a(pi, pj)))) pi = i, pj = j;
    if (pi < 0) break;
    for (int j = 0; j < c; ++j) std::swap(a(pi, j), a(t, j));
    for (int i = 0; i < r; ++i) std::swap(a(i, pj), a(i, t));
    while (true) {
      bool clean = true;
      for (int i = t + 1; i < r; ++i) {
        if (a(i, t) == 0) continue;
        Integer f = quot(a(i, t), a(t, t));
        for (int j = t; j < c; ++j)
          if (a(t, j) != 0) a(i, j) -= f * a(t, j);
        if (a(i, t) != 0) {
          clean = false;
          for (int j = t; j < c; ++j) std::swap(a(i, j), a(t, j));
        }
      }
      for (int j = t + 1; j < c; ++j) {
        if (a(t, j) == 0) continue;
        Integer f = quot(a(t, j), a(t, t));
        for (int i = t; i < r; ++i)
          if (a(i, t) != 0) a(i, j) -= f * a(i, t);
        if (a(t, j) != 0) {
          clean = false;
          for (int i = t; i < r; ++i) std::swap(a(i, j), a(i, t));
        }
      }
      if (!clean) continue;
      // divisibility of the trailing block by the pivot
      int bad = -1;
      for (int i = t + 1; i < r && bad < 0; ++i)
        for (int j = t + 1; j < c; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int j = t; j < c; ++j) a(t, j) += a(bad, j);
    }
    out.push_back(iabs(a(t, t)));
  }
  return out;
}

int rank(const IntMatrix& m) { return static_cast<int>(smith_invariants(m).size()); }

}  // namespace sl3
