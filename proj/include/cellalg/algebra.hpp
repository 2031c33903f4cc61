#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cellalg/errors.hpp"
#include "cellalg/field_spec.hpp"
#include "cellalg/matrix.hpp"
#include "cellalg/report.hpp"

namespace cellalg {

template <class K>
struct StructureEntry {
  std::size_t i, j, k;
  K value;
};

// Finite-dimensional associative unital algebra given by structure constants
// on a distinguished basis: a_i a_j = sum_k r_ijk a_k. Elements are
// coefficient columns in that basis.
template <class K>
class AlgebraDescriptor {
 public:
  AlgebraDescriptor(FieldSpec field, std::vector<std::string> basis_labels,
                    std::vector<StructureEntry<K>> structure, Vec<K> unit)
      : field_(std::move(field)), labels_(std::move(basis_labels)),
        unit_(std::move(unit)), zero_(zero_of<K>(field_)) {
    dim_ = labels_.size();
    if (dim_ == 0) throw ValidationError("algebra: dimension must be positive");
    if (unit_.size() != dim_)
      throw DimensionMismatch("algebra: unit column length != dim");
    // canonicalize the sparse list: merge duplicates, drop zeros, sort
    std::map<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>, K>
        acc;
    for (const auto& e : structure) {
      if (e.i >= dim_ || e.j >= dim_ || e.k >= dim_)
        throw ValidationError("algebra: structure index out of range");
      auto key = std::make_pair(e.i, std::make_pair(e.j, e.k));
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, e.value);
      else
        it->second += e.value;
    }
    products_.assign(dim_ * dim_, {});
    for (const auto& [key, v] : acc) {
      if (v.is_zero()) continue;
      structure_.push_back({key.first, key.second.first, key.second.second, v});
      products_[key.first * dim_ + key.second.first].emplace_back(
          key.second.second, v);
    }
  }

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const std::vector<StructureEntry<K>>& structure() const { return structure_; }
  const Vec<K>& unit() const { return unit_; }
  const K& zero() const { return zero_; }
  K one() const { return zero_.one(); }

  // sparse expansion of a_i a_j as (k, coefficient) pairs
  const std::vector<std::pair<std::size_t, K>>& basis_product(
      std::size_t i, std::size_t j) const {
    return products_[i * dim_ + j];
  }

  K structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& [kk, v] : basis_product(i, j))
      if (kk == k) return v;
    return zero_;
  }

  Vec<K> basis_element(std::size_t i) const {
    Vec<K> v(dim_, zero_);
    v[i] = zero_.one();
    return v;
  }

  Vec<K> multiply(const Vec<K>& x, const Vec<K>& y) const {
    if (x.size() != dim_ || y.size() != dim_)
      throw DimensionMismatch("multiply: element length != dim");
    Vec<K> z(dim_, zero_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        const K c = x[i] * y[j];
        for (const auto& [k, r] : basis_product(i, j)) z[k] += c * r;
      }
    }
    return z;
  }

 private:
  FieldSpec field_;
  std::vector<std::string> labels_;
  std::vector<StructureEntry<K>> structure_;
  Vec<K> unit_;
  K zero_;
  std::size_t dim_ = 0;
  // products_[i*dim+j]: sparse row of a_i a_j
  std::vector<std::vector<std::pair<std::size_t, K>>> products_;
};

namespace detail {

template <class K>
void sparse_accumulate(Vec<K>& acc, const K& c,
                       const std::vector<std::pair<std::size_t, K>>& row) {
  for (const auto& [k, v] : row) acc[k] += c * v;
}

}  // namespace detail

// Full associativity sweep sum_m r_ijm r_mkl = sum_m r_jkm r_iml plus the
// two-sided unit law. Failures are report entries with witnessing indices;
// scanning stops after a few witnesses per category.
template <class K>
Report validate_algebra(const AlgebraDescriptor<K>& alg,
                        std::size_t witness_cap = 4) {
  Report rep;
  const std::size_t n = alg.dim();
  std::size_t assoc_fail = 0;
  for (std::size_t i = 0; i < n && assoc_fail < witness_cap; ++i) {
    for (std::size_t j = 0; j < n && assoc_fail < witness_cap; ++j) {
      const auto& pij = alg.basis_product(i, j);
      for (std::size_t k = 0; k < n && assoc_fail < witness_cap; ++k) {
        Vec<K> lhs(n, alg.zero()), rhs(n, alg.zero());
        for (const auto& [m, c] : pij)
          detail::sparse_accumulate(lhs, c, alg.basis_product(m, k));
        for (const auto& [m, c] : alg.basis_product(j, k))
          detail::sparse_accumulate(rhs, c, alg.basis_product(i, m));
        if (lhs != rhs) {
          ++assoc_fail;
          std::size_t l = 0;
          while (lhs[l] == rhs[l]) ++l;
          rep.add("associativity", false,
                  "(a_i a_j) a_k != a_i (a_j a_k) at (i,j,k,l)=(" +
                      std::to_string(i) + "," + std::to_string(j) + "," +
                      std::to_string(k) + "," + std::to_string(l) + ")");
        }
      }
    }
  }
  if (assoc_fail == 0) rep.add("associativity", true);

  std::size_t unit_fail = 0;
  for (std::size_t i = 0; i < n && unit_fail < witness_cap; ++i) {
    const Vec<K> ai = alg.basis_element(i);
    if (alg.multiply(alg.unit(), ai) != ai) {
      ++unit_fail;
      rep.add("unit", false, "unit * a_" + std::to_string(i) + " != a_" +
                                 std::to_string(i));
    }
    if (alg.multiply(ai, alg.unit()) != ai) {
      ++unit_fail;
      rep.add("unit", false, "a_" + std::to_string(i) + " * unit != a_" +
                                 std::to_string(i));
    }
  }
  if (unit_fail == 0) rep.add("unit", true);
  return rep;
}

}  // namespace cellalg
