#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cellalg/errors.hpp"
#include "cellalg/matrix.hpp"

namespace cellalg {

// Subspace of K^n held as the RREF of a spanning set, no zero rows. The
// representation is canonical, so subspace equality is matrix equality.
template <class K>
class SubspaceBasis {
 public:
  static SubspaceBasis zero(std::size_t ambient, const K& exemplar) {
    return SubspaceBasis(ambient, Matrix<K>(0, ambient, exemplar));
  }

  static SubspaceBasis full(std::size_t ambient, const K& exemplar) {
    return SubspaceBasis(ambient, Matrix<K>::identity(ambient, exemplar));
  }

  static SubspaceBasis from_spanning(const Matrix<K>& spanning) {
    auto rr = rref(spanning);
    Matrix<K> rows(rr.rank, spanning.cols(), spanning.field_zero());
    for (std::size_t i = 0; i < rr.rank; ++i)
      for (std::size_t j = 0; j < spanning.cols(); ++j)
        rows.at(i, j) = rr.m.at(i, j);
    return SubspaceBasis(spanning.cols(), std::move(rows));
  }

  static SubspaceBasis from_spanning(const std::vector<Vec<K>>& vectors,
                                     std::size_t ambient, const K& exemplar) {
    return from_spanning(Matrix<K>::from_rows(vectors, ambient, exemplar));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.rows(); }
  const Matrix<K>& rows() const { return rows_; }
  Vec<K> basis_vector(std::size_t i) const { return rows_.row(i); }

  bool contains(const Vec<K>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("contains: vector size");
    // reduce v against the RREF rows; pivots are 1, so one pass suffices
    Vec<K> w = v;
    for (std::size_t row = 0; row < rows_.rows(); ++row) {
      const std::size_t c = leading_col(row);
      if (c == ambient_ || w[c].is_zero()) continue;
      const K f = w[c];
      for (std::size_t j = c; j < ambient_; ++j) w[j] -= f * rows_.at(row, j);
    }
    return is_zero_vec(w);
  }

  bool contains(const SubspaceBasis& other) const {
    check_ambient(other);
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const SubspaceBasis& a, const SubspaceBasis& b) {
    return !(a == b);
  }

  SubspaceBasis sum(const SubspaceBasis& other) const {
    check_ambient(other);
    Matrix<K> stacked(dim() + other.dim(), ambient_, rows_.field_zero());
    for (std::size_t i = 0; i < dim(); ++i)
      stacked.set_row(i, basis_vector(i));
    for (std::size_t i = 0; i < other.dim(); ++i)
      stacked.set_row(dim() + i, other.basis_vector(i));
    return from_spanning(stacked);
  }

  // Intersection via the kernel construction: pairs (a, b) with
  // U^T a = W^T b give the common vectors U^T a.
  SubspaceBasis intersect(const SubspaceBasis& other) const {
    check_ambient(other);
    const std::size_t k1 = dim(), k2 = other.dim();
    const K& z = rows_.field_zero();
    Matrix<K> glue(ambient_, k1 + k2, z);
    for (std::size_t c = 0; c < k1; ++c)
      for (std::size_t r = 0; r < ambient_; ++r)
        glue.at(r, c) = rows_.at(c, r);
    for (std::size_t c = 0; c < k2; ++c)
      for (std::size_t r = 0; r < ambient_; ++r)
        glue.at(r, k1 + c) = -other.rows_.at(c, r);
    Matrix<K> pairs = kernel_rows(glue);
    Matrix<K> span(pairs.rows(), ambient_, z);
    for (std::size_t i = 0; i < pairs.rows(); ++i)
      for (std::size_t c = 0; c < k1; ++c) {
        if (pairs.at(i, c).is_zero()) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
          span.at(i, j) += pairs.at(i, c) * rows_.at(c, j);
      }
    return from_spanning(span);
  }

 private:
  SubspaceBasis(std::size_t ambient, Matrix<K> rows)
      : ambient_(ambient), rows_(std::move(rows)) {}

  std::size_t leading_col(std::size_t row) const {
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!rows_.at(row, c).is_zero()) return c;
    return ambient_;
  }

  void check_ambient(const SubspaceBasis& other) const {
    if (ambient_ != other.ambient_)
      throw DimensionMismatch("subspace ops: ambient dimension mismatch");
  }

  std::size_t ambient_;
  Matrix<K> rows_;
};

template <class K>
SubspaceBasis<K> kernel(const Matrix<K>& m) {
  return SubspaceBasis<K>::from_spanning(kernel_rows(m));
}

template <class K>
SubspaceBasis<K> row_space(const Matrix<K>& m) {
  return SubspaceBasis<K>::from_spanning(m);
}

}  // namespace cellalg
