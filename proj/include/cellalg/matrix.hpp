#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cellalg/errors.hpp"

namespace cellalg {

template <class K>
using Vec = std::vector<K>;

template <class K>
Vec<K> zero_vec(std::size_t n, const K& exemplar) {
  return Vec<K>(n, exemplar.zero());
}

template <class K>
Vec<K>& add_assign(Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector add: size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class K>
Vec<K>& sub_assign(Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sub: size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class K>
Vec<K> scaled(const Vec<K>& a, const K& c) {
  Vec<K> r = a;
  for (auto& x : r) x *= c;
  return r;
}

template <class K>
void axpy(Vec<K>& acc, const K& c, const Vec<K>& x) {
  if (acc.size() != x.size()) throw DimensionMismatch("axpy: size mismatch");
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * x[i];
}

template <class K>
bool is_zero_vec(const Vec<K>& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

// Dense matrix over an exact field. Row-major. Every matrix knows a zero of
// its field so shape-only constructions (0xN kernels and the like) stay
// attached to the right field.
template <class K>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const K& zero)
      : rows_(rows), cols_(cols), zero_(zero.zero()),
        e_(rows * cols, zero.zero()) {}

  static Matrix identity(std::size_t n, const K& exemplar) {
    Matrix m(n, n, exemplar);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = exemplar.one();
    return m;
  }

  static Matrix from_rows(const std::vector<Vec<K>>& rows, std::size_t cols,
                          const K& exemplar) {
    Matrix m(rows.size(), cols, exemplar);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw DimensionMismatch("from_rows: ragged row");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const K& field_zero() const { return zero_; }

  K& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const K& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Vec<K> row(std::size_t r) const {
    Vec<K> v;
    v.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v.push_back(at(r, j));
    return v;
  }

  Vec<K> col(std::size_t c) const {
    Vec<K> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, c));
    return v;
  }

  void set_row(std::size_t r, const Vec<K>& v) {
    if (v.size() != cols_) throw DimensionMismatch("set_row: size mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = v[j];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
    Matrix r(rows_, o.cols_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const K& aik = at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) += aik * o.at(k, j);
      }
    return r;
  }

  Vec<K> operator*(const Vec<K>& x) const {
    if (cols_ != x.size()) throw DimensionMismatch("matrix-vector shape");
    Vec<K> r(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (at(i, j).is_zero() || x[j].is_zero()) continue;
        r[i] += at(i, j) * x[j];
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] != b.e_[i]) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
      }
    return true;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
      out += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ", ";
        out += at(i, j).str();
      }
      out += "]\n";
    }
    return out;
  }

 private:
  std::size_t rows_, cols_;
  K zero_;
  std::vector<K> e_;
};

template <class K>
struct RrefResult {
  Matrix<K> m;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form by Gauss-Jordan elimination. First nonzero pivot
// per column; exact arithmetic makes the result the canonical RREF.
template <class K>
RrefResult<K> rref(Matrix<K> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m.at(pr, c).is_zero()) ++pr;
    if (pr == rows) continue;
    m.swap_rows(r, pr);
    const K inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const K f = m.at(i, c);
      for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), pivots.size(), std::move(pivots)};
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).rank;
}

template <class K>
K determinant(Matrix<K> m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("determinant: matrix not square");
  const std::size_t n = m.rows();
  K det = m.field_zero().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = c;
    while (pr < n && m.at(pr, c).is_zero()) ++pr;
    if (pr == n) return m.field_zero();
    if (pr != c) {
      m.swap_rows(c, pr);
      det = -det;
    }
    det *= m.at(c, c);
    const K inv = m.at(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m.at(i, c).is_zero()) continue;
      const K f = m.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return det;
}

// Rows spanning {x : m x = 0}, one per free column, in free-column order.
// Not canonicalized; SubspaceBasis::from_spanning does that.
template <class K>
Matrix<K> kernel_rows(const Matrix<K>& m) {
  const auto rr = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  Matrix<K> out(cols - rr.rank, cols, m.field_zero());
  std::size_t row = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    out.at(row, f) = m.field_zero().one();
    for (std::size_t i = 0; i < rr.rank; ++i)
      out.at(row, rr.pivots[i]) = -rr.m.at(i, f);
    ++row;
  }
  return out;
}

// Some solution of m x = b, or nullopt when inconsistent. Free variables
// are set to zero.
template <class K>
std::optional<Vec<K>> solve(const Matrix<K>& m, const Vec<K>& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: rhs size");
  Matrix<K> aug(m.rows(), m.cols() + 1, m.field_zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  const auto rr = rref(std::move(aug));
  for (std::size_t i = 0; i < rr.rank; ++i)
    if (rr.pivots[i] == m.cols()) return std::nullopt;
  Vec<K> x(m.cols(), m.field_zero());
  for (std::size_t i = 0; i < rr.rank; ++i)
    x[rr.pivots[i]] = rr.m.at(i, m.cols());
  return x;
}

template <class K>
Matrix<K> invert(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("invert: matrix not square");
  const std::size_t n = m.rows();
  Matrix<K> aug(n, 2 * n, m.field_zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = m.field_zero().one();
  }
  const auto rr = rref(std::move(aug));
  for (std::size_t i = 0; i < n; ++i)
    if (i >= rr.rank || rr.pivots[i] != i)
      throw SingularMatrix("invert: matrix has rank < " + std::to_string(n));
  Matrix<K> inv(n, n, m.field_zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.m.at(i, n + j);
  return inv;
}

}  // namespace cellalg
