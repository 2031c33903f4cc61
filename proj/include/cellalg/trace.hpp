#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cellalg/algebra.hpp"
#include "cellalg/errors.hpp"
#include "cellalg/matrix.hpp"
#include "cellalg/report.hpp"
#include "cellalg/subspace.hpp"

namespace cellalg {

// A linear functional tau on the algebra together with the cached pairing
// matrix gram[i][j] = tau(a_i a_j). tau is symmetrizing when gram is
// symmetric and nonsingular; f(a,b) := tau(ab) is then automatically
// associative.
template <class K>
class TraceForm {
 public:
  TraceForm(const AlgebraDescriptor<K>& alg, Vec<K> tau_row)
      : tau_(std::move(tau_row)), gram_(alg.dim(), alg.dim(), alg.zero()) {
    if (tau_.size() != alg.dim())
      throw DimensionMismatch("trace: row length != dim");
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        K v = alg.zero();
        for (const auto& [k, c] : alg.basis_product(i, j)) v += c * tau_[k];
        gram_.at(i, j) = v;
      }
  }

  const Vec<K>& row() const { return tau_; }
  const Matrix<K>& gram() const { return gram_; }

  K operator()(const Vec<K>& x) const {
    if (x.size() != tau_.size() || tau_.empty())
      throw DimensionMismatch("trace: element length");
    K v = tau_[0].zero();
    for (std::size_t i = 0; i < x.size(); ++i) v += tau_[i] * x[i];
    return v;
  }

 private:
  Vec<K> tau_;
  Matrix<K> gram_;
};

template <class K>
Report validate_symmetrizing_trace(const AlgebraDescriptor<K>& alg,
                                   const TraceForm<K>& tau,
                                   std::size_t witness_cap = 4) {
  Report rep;
  const std::size_t n = alg.dim();
  std::size_t sym_fail = 0;
  for (std::size_t i = 0; i < n && sym_fail < witness_cap; ++i)
    for (std::size_t j = i + 1; j < n && sym_fail < witness_cap; ++j)
      if (tau.gram().at(i, j) != tau.gram().at(j, i)) {
        ++sym_fail;
        rep.add("symmetry", false,
                "tau(a_i a_j) != tau(a_j a_i) at (i,j)=(" + std::to_string(i) +
                    "," + std::to_string(j) + ")");
      }
  if (sym_fail == 0) rep.add("symmetry", true);
  const bool nondeg = rank(tau.gram()) == n;
  rep.add("non-degeneracy", nondeg,
          nondeg ? "" : "gram matrix of tau is singular");
  return rep;
}

// Dual basis D with tau(D_j a_i) = delta_ij; row j of the inverse gram gives
// the coordinates of D_j.
template <class K>
struct DualBasis {
  std::vector<Vec<K>> elements;
};

template <class K>
DualBasis<K> dual_basis(const AlgebraDescriptor<K>& alg,
                        const TraceForm<K>& tau) {
  Matrix<K> ginv(0, 0, alg.zero());
  try {
    ginv = invert(tau.gram());
  } catch (const SingularMatrix&) {
    throw SingularTrace("dual basis: gram matrix of tau is singular");
  }
  DualBasis<K> d;
  d.elements.reserve(alg.dim());
  for (std::size_t j = 0; j < alg.dim(); ++j) d.elements.push_back(ginv.row(j));
  // post-hoc: tau(D_j a_i) = delta_ij
  for (std::size_t j = 0; j < alg.dim(); ++j)
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      const K v = tau(alg.multiply(d.elements[j], alg.basis_element(i)));
      const bool want_one = (i == j);
      if (want_one ? !v.is_one() : !v.is_zero())
        throw InconsistentDatum("dual basis: pairing check failed at (i,j)=(" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ")");
    }
  return d;
}

// Both product identities relating the basis, its dual and the structure
// constants: a_i D_j = sum_k r_kij D_k and D_i a_j = sum_k r_jki D_k,
// checked for every index pair by exact expansion.
template <class K>
Report verify_dual_multiplication(const AlgebraDescriptor<K>& alg,
                                  const DualBasis<K>& dual) {
  Report rep;
  const std::size_t n = alg.dim();
  bool left_ok = true, right_ok = true;
  std::string left_wit, right_wit;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec<K> lhs = alg.multiply(alg.basis_element(i), dual.elements[j]);
      Vec<K> rhs(n, alg.zero());
      for (std::size_t k = 0; k < n; ++k)
        axpy(rhs, alg.structure_constant(k, i, j), dual.elements[k]);
      if (lhs != rhs && left_ok) {
        left_ok = false;
        left_wit = "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
      lhs = alg.multiply(dual.elements[i], alg.basis_element(j));
      Vec<K> rhs2(n, alg.zero());
      for (std::size_t k = 0; k < n; ++k)
        axpy(rhs2, alg.structure_constant(j, k, i), dual.elements[k]);
      if (lhs != rhs2 && right_ok) {
        right_ok = false;
        right_wit =
            "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  rep.add("a_i D_j = sum_k r_kij D_k", left_ok, left_wit);
  rep.add("D_i a_j = sum_k r_jki D_k", right_ok, right_wit);
  return rep;
}

// Expansion of the dual basis of tau' in the dual basis of tau: the
// coefficient matrix M with M(i,j) = tau(a_j D'_i), so D'_i = sum_j M(i,j) D_j.
template <class K>
Matrix<K> change_of_trace_expand(const AlgebraDescriptor<K>& alg,
                                 const TraceForm<K>& tau,
                                 const TraceForm<K>& tau_prime) {
  const auto d = dual_basis(alg, tau);
  const auto d_prime = dual_basis(alg, tau_prime);
  const std::size_t n = alg.dim();
  Matrix<K> coeff(n, n, alg.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      coeff.at(i, j) =
          tau(alg.multiply(alg.basis_element(j), d_prime.elements[i]));
  for (std::size_t i = 0; i < n; ++i) {
    Vec<K> expanded(n, alg.zero());
    for (std::size_t j = 0; j < n; ++j)
      axpy(expanded, coeff.at(i, j), d.elements[j]);
    if (expanded != d_prime.elements[i])
      throw InconsistentDatum(
          "change of trace: expansion does not reproduce D'_" +
          std::to_string(i));
  }
  return coeff;
}

// The space of symmetric trace rows {tau : tau(ab) = tau(ba) for all a, b},
// cut out by the commutator constraints sum_k (r_ijk - r_jik) tau_k = 0.
template <class K>
SubspaceBasis<K> symmetric_trace_space(const AlgebraDescriptor<K>& alg) {
  const std::size_t n = alg.dim();
  std::vector<Vec<K>> constraints;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<K> row(n, alg.zero());
      for (const auto& [k, c] : alg.basis_product(i, j)) row[k] += c;
      for (const auto& [k, c] : alg.basis_product(j, i)) row[k] -= c;
      if (!is_zero_vec(row)) constraints.push_back(std::move(row));
    }
  if (constraints.empty()) return SubspaceBasis<K>::full(n, alg.zero());
  return kernel(Matrix<K>::from_rows(constraints, n, alg.zero()));
}

namespace detail {

// bounded draw that is identical across standard libraries
inline long bounded_draw(std::mt19937_64& rng, long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

}  // namespace detail

// Seeded sample from the symmetrizing traces of alg: small integer
// coordinates in the symmetric-form space, rejected until the gram matrix is
// nonsingular. Deterministic per seed.
template <class K>
TraceForm<K> random_symmetrizing_trace(const AlgebraDescriptor<K>& alg,
                                       std::uint64_t seed,
                                       std::size_t attempt_budget = 100) {
  const auto space = symmetric_trace_space(alg);
  if (space.dim() == 0)
    throw NoSymmetrizingTrace(
        "random trace: the symmetric-form space is zero");
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < attempt_budget; ++attempt) {
    Vec<K> row(alg.dim(), alg.zero());
    for (std::size_t b = 0; b < space.dim(); ++b) {
      const long c = detail::bounded_draw(rng, -5, 5);
      if (c == 0) continue;
      axpy(row, alg.zero().from_int(c), space.basis_vector(b));
    }
    TraceForm<K> candidate(alg, row);
    if (rank(candidate.gram()) == alg.dim()) return candidate;
  }
  throw NoSymmetrizingTrace(
      "random trace: no non-degenerate sample within the attempt budget "
      "(the algebra may not be symmetric)");
}

}  // namespace cellalg
