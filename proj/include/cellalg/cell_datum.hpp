#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cellalg/algebra.hpp"
#include "cellalg/errors.hpp"
#include "cellalg/matrix.hpp"
#include "cellalg/poset.hpp"
#include "cellalg/report.hpp"
#include "cellalg/subspace.hpp"

namespace cellalg {

// Label of one distinguished basis element: cell index and the pair (s, t)
// inside M(lambda) x M(lambda). All 0-based; display is 1-based.
struct CellIndex {
  std::size_t lambda, s, t;
};

// A cell datum over a fixed distinguished basis: the poset, the sizes of the
// index sets M(lambda), the bijection (lambda, s, t) <-> basis index, and
// the matrix of the involution on that basis. The distinguished basis of the
// algebra *is* the cellular basis.
template <class K>
class CellDatum {
 public:
  CellDatum(CellPoset poset, std::vector<std::size_t> m_sizes,
            std::vector<CellIndex> labeling, Matrix<K> involution)
      : poset_(std::move(poset)), m_sizes_(std::move(m_sizes)),
        of_basis_(std::move(labeling)), involution_(std::move(involution)) {
    if (m_sizes_.size() != poset_.size())
      throw ValidationError("cell datum: one M(lambda) size per cell required");
    std::size_t total = 0;
    for (std::size_t n : m_sizes_) {
      if (n == 0) throw ValidationError("cell datum: empty M(lambda)");
      total += n * n;
    }
    if (of_basis_.size() != total)
      throw ValidationError(
          "cell datum: sum of n_lambda^2 != number of basis labels");
    if (involution_.rows() != total || involution_.cols() != total)
      throw DimensionMismatch("cell datum: involution matrix shape");
    index_.assign(poset_.size(), {});
    for (std::size_t l = 0; l < poset_.size(); ++l)
      index_[l].assign(m_sizes_[l] * m_sizes_[l], of_basis_.size());
    for (std::size_t f = 0; f < of_basis_.size(); ++f) {
      const auto& ci = of_basis_[f];
      if (ci.lambda >= poset_.size() || ci.s >= m_sizes_[ci.lambda] ||
          ci.t >= m_sizes_[ci.lambda])
        throw ValidationError("cell datum: label out of range at basis index " +
                              std::to_string(f));
      auto& slot = index_[ci.lambda][ci.s * m_sizes_[ci.lambda] + ci.t];
      if (slot != of_basis_.size())
        throw ValidationError("cell datum: duplicate label at basis index " +
                              std::to_string(f));
      slot = f;
    }
  }

  const CellPoset& poset() const { return poset_; }
  std::size_t cell_count() const { return poset_.size(); }
  std::size_t dim() const { return of_basis_.size(); }
  std::size_t m_size(std::size_t lambda) const { return m_sizes_[lambda]; }
  const std::vector<std::size_t>& m_sizes() const { return m_sizes_; }
  const CellIndex& label_of(std::size_t basis_index) const {
    return of_basis_[basis_index];
  }
  const std::vector<CellIndex>& labeling() const { return of_basis_; }
  std::size_t index_of(std::size_t lambda, std::size_t s, std::size_t t) const {
    return index_[lambda][s * m_sizes_[lambda] + t];
  }
  const Matrix<K>& involution() const { return involution_; }

  Vec<K> apply_involution(const Vec<K>& x) const { return involution_ * x; }

  // coordinate projection implementing "mod A(<lambda)"
  Vec<K> reduce_below(std::size_t lambda, Vec<K> x) const {
    for (std::size_t f = 0; f < x.size(); ++f)
      if (poset_.less(of_basis_[f].lambda, lambda)) x[f] = x[f].zero();
    return x;
  }

  // coordinate projection zeroing cells strictly above lambda
  Vec<K> reduce_above(std::size_t lambda, Vec<K> x) const {
    for (std::size_t f = 0; f < x.size(); ++f)
      if (poset_.less(lambda, of_basis_[f].lambda)) x[f] = x[f].zero();
    return x;
  }

  std::string display(std::size_t lambda, std::size_t s, std::size_t t,
                      const char* sym = "C") const {
    return std::string(sym) + "[" + poset_.label(lambda) + "][" +
           std::to_string(s + 1) + "," + std::to_string(t + 1) + "]";
  }
  std::string display(std::size_t basis_index, const char* sym = "C") const {
    const auto& ci = of_basis_[basis_index];
    return display(ci.lambda, ci.s, ci.t, sym);
  }

 private:
  CellPoset poset_;
  std::vector<std::size_t> m_sizes_;
  std::vector<CellIndex> of_basis_;
  std::vector<std::vector<std::size_t>> index_;
  Matrix<K> involution_;
};

// Goodman's axioms on a labeled basis. (C1) is structural (the constructor
// enforces bijectivity), so the interesting checks are:
//   (C2) i^2 = id, i an anti-automorphism, i(C_{S,T}) = C_{T,S} mod A(<lambda)
//   (C3) a C_{S,T} lies in span{C_{S',T}} mod A(<lambda) with coefficients
//        independent of T, for every basis element a.
// Findings are ordered by (lambda, S, T).
template <class K>
Report validate_cell_datum(const AlgebraDescriptor<K>& alg,
                           const CellDatum<K>& cd,
                           std::size_t witness_cap = 4) {
  Report rep;
  const std::size_t n = alg.dim();
  if (cd.dim() != n) {
    rep.add("C1: labeling", false, "datum dimension != algebra dimension");
    return rep;
  }
  rep.add("C1: labeling", true);

  const Matrix<K>& inv = cd.involution();
  rep.add("C2: involution squares to identity", (inv * inv).is_identity());

  std::vector<Vec<K>> icol;
  icol.reserve(n);
  for (std::size_t i = 0; i < n; ++i) icol.push_back(inv.col(i));

  std::size_t anti_fail = 0;
  for (std::size_t i = 0; i < n && anti_fail < witness_cap; ++i)
    for (std::size_t j = 0; j < n && anti_fail < witness_cap; ++j) {
      Vec<K> prod(n, alg.zero());
      for (const auto& [k, c] : alg.basis_product(i, j))
        axpy(prod, c, icol[k]);
      if (prod != alg.multiply(icol[j], icol[i])) {
        ++anti_fail;
        rep.add("C2: anti-automorphism", false,
                "i(a_i a_j) != i(a_j) i(a_i) at (i,j)=(" + std::to_string(i) +
                    "," + std::to_string(j) + ")");
      }
    }
  if (anti_fail == 0) rep.add("C2: anti-automorphism", true);

  std::size_t swap_fail = 0;
  for (std::size_t f = 0; f < n && swap_fail < witness_cap; ++f) {
    const auto& ci = cd.label_of(f);
    Vec<K> reduced = cd.reduce_below(ci.lambda, icol[f]);
    Vec<K> expect(n, alg.zero());
    expect[cd.index_of(ci.lambda, ci.t, ci.s)] = alg.one();
    if (reduced != expect) {
      ++swap_fail;
      rep.add("C2: i(C[S,T]) = C[T,S] mod lower cells", false,
              "fails at " + cd.display(f));
    }
  }
  if (swap_fail == 0) rep.add("C2: i(C[S,T]) = C[T,S] mod lower cells", true);

  std::size_t c3_fail = 0;
  for (std::size_t lam = 0; lam < cd.cell_count() && c3_fail < witness_cap;
       ++lam) {
    const std::size_t nl = cd.m_size(lam);
    for (std::size_t s = 0; s < nl && c3_fail < witness_cap; ++s) {
      for (std::size_t a = 0; a < n && c3_fail < witness_cap; ++a) {
        // coefficients r_a(S', s) extracted at T = 0, compared at every T
        std::vector<Vec<K>> coeffs_by_t;
        for (std::size_t t = 0; t < nl; ++t) {
          const std::size_t f = cd.index_of(lam, s, t);
          Vec<K> red =
              cd.reduce_below(lam, alg.multiply(alg.basis_element(a),
                                                alg.basis_element(f)));
          Vec<K> col(nl, alg.zero());
          bool stray = false;
          for (std::size_t g = 0; g < n && !stray; ++g) {
            if (red[g].is_zero()) continue;
            const auto& cg = cd.label_of(g);
            if (cg.lambda != lam || cg.t != t)
              stray = true;
            else
              col[cg.s] = red[g];
          }
          if (stray) {
            ++c3_fail;
            rep.add("C3: span containment", false,
                    "a_" + std::to_string(a) + " * " + cd.display(f) +
                        " leaves span{C[S'," + std::to_string(t + 1) +
                        "]} mod lower cells");
            break;
          }
          coeffs_by_t.push_back(std::move(col));
        }
        if (coeffs_by_t.size() == nl) {
          for (std::size_t t = 1; t < nl; ++t)
            if (coeffs_by_t[t] != coeffs_by_t[0]) {
              ++c3_fail;
              rep.add("C3: T-independence", false,
                      "r_a(S'," + std::to_string(s + 1) + ") differs between T=1 and T=" +
                          std::to_string(t + 1) + " for a_" +
                          std::to_string(a) + ", lambda=" +
                          cd.poset().label(lam));
              break;
            }
        }
      }
    }
  }
  if (c3_fail == 0) {
    rep.add("C3: span containment", true);
    rep.add("C3: T-independence", true);
  }
  return rep;
}

// Left cell module W(lambda): one matrix per distinguished basis element,
// entry (S', S) = r_a(S', S).
template <class K>
struct CellModuleAction {
  std::size_t lambda;
  std::vector<Matrix<K>> matrices;

  Matrix<K> of_element(const AlgebraDescriptor<K>& alg, const Vec<K>& x) const {
    Matrix<K> m(matrices[0].rows(), matrices[0].cols(), alg.zero());
    for (std::size_t g = 0; g < x.size(); ++g) {
      if (x[g].is_zero()) continue;
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          m.at(r, c) += x[g] * matrices[g].at(r, c);
    }
    return m;
  }
};

template <class K>
CellModuleAction<K> cell_module(const AlgebraDescriptor<K>& alg,
                                const CellDatum<K>& cd, std::size_t lambda) {
  const std::size_t n = alg.dim(), nl = cd.m_size(lambda);
  CellModuleAction<K> act{lambda, {}};
  act.matrices.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    Matrix<K> m(nl, nl, alg.zero());
    for (std::size_t s = 0; s < nl; ++s) {
      bool have_probe = false;
      Vec<K> probe_col(nl, alg.zero());
      for (std::size_t t = 0; t < nl; ++t) {
        const std::size_t f = cd.index_of(lambda, s, t);
        Vec<K> red = cd.reduce_below(
            lambda, alg.multiply(alg.basis_element(a), alg.basis_element(f)));
        Vec<K> col(nl, alg.zero());
        for (std::size_t g = 0; g < n; ++g) {
          if (red[g].is_zero()) continue;
          const auto& cg = cd.label_of(g);
          if (cg.lambda != lambda || cg.t != t)
            throw NotCellular("cell module: a_" + std::to_string(a) + " * " +
                              cd.display(f) + " leaves the cell layer");
          col[cg.s] = red[g];
        }
        if (!have_probe) {
          probe_col = col;
          have_probe = true;
        } else if (col != probe_col) {
          throw NotCellular("cell module: r_a(S',S) depends on T at a_" +
                            std::to_string(a) + ", " + cd.display(f));
        }
      }
      for (std::size_t sp = 0; sp < nl; ++sp) m.at(sp, s) = probe_col[sp];
    }
    act.matrices.push_back(std::move(m));
  }
  // representation property: rho(a_i) rho(a_j) = sum_k r_ijk rho(a_k)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<K> lhs = act.matrices[i] * act.matrices[j];
      Matrix<K> rhs(nl, nl, alg.zero());
      for (const auto& [k, c] : alg.basis_product(i, j))
        for (std::size_t r = 0; r < nl; ++r)
          for (std::size_t cc = 0; cc < nl; ++cc)
            rhs.at(r, cc) += c * act.matrices[k].at(r, cc);
      if (lhs != rhs)
        throw InconsistentDatum(
            "cell module: action is not a representation at (i,j)=(" +
            std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return act;
}

// The bilinear form of a cell: C_{S,T} C_{U,V} = Phi(T,U) C_{S,V} mod lower
// cells, extracted over every probe pair (S,V) and checked consistent.
template <class K>
struct GramData {
  std::size_t lambda;
  Matrix<K> phi;
  std::size_t gram_rank;
  SubspaceBasis<K> rad;

  bool phi_nonzero() const { return !phi.is_zero(); }
  std::size_t dim_rad() const { return rad.dim(); }
};

template <class K>
GramData<K> phi_form(const AlgebraDescriptor<K>& alg, const CellDatum<K>& cd,
                     std::size_t lambda) {
  const std::size_t n = alg.dim(), nl = cd.m_size(lambda);
  Matrix<K> gram(nl, nl, alg.zero());
  for (std::size_t t = 0; t < nl; ++t)
    for (std::size_t u = 0; u < nl; ++u) {
      bool have = false;
      K phi = alg.zero();
      for (std::size_t s = 0; s < nl; ++s)
        for (std::size_t v = 0; v < nl; ++v) {
          const Vec<K> prod =
              alg.multiply(alg.basis_element(cd.index_of(lambda, s, t)),
                           alg.basis_element(cd.index_of(lambda, u, v)));
          Vec<K> red = cd.reduce_below(lambda, prod);
          const std::size_t target = cd.index_of(lambda, s, v);
          const K cand = red[target];
          red[target] = alg.zero();
          if (!is_zero_vec(red))
            throw NotCellular("phi: " + cd.display(lambda, s, t) + " * " +
                              cd.display(lambda, u, v) +
                              " is not a multiple of " +
                              cd.display(lambda, s, v) + " mod lower cells");
          if (!have) {
            phi = cand;
            have = true;
          } else if (cand != phi) {
            throw NotCellular("phi: value depends on the probe pair at " +
                              cd.display(lambda, s, t) + " * " +
                              cd.display(lambda, u, v));
          }
        }
      gram.at(t, u) = phi;
    }
  for (std::size_t t = 0; t < nl; ++t)
    for (std::size_t u = t + 1; u < nl; ++u)
      if (gram.at(t, u) != gram.at(u, t))
        throw NotCellular("phi: Gram matrix not symmetric at lambda=" +
                          cd.poset().label(lambda));
  auto rad = kernel(gram);
  const std::size_t rk = nl - rad.dim();
  return GramData<K>{lambda, std::move(gram), rk, std::move(rad)};
}

template <class K>
std::vector<GramData<K>> all_gram_data(const AlgebraDescriptor<K>& alg,
                                       const CellDatum<K>& cd) {
  std::vector<GramData<K>> out;
  out.reserve(cd.cell_count());
  for (std::size_t l = 0; l < cd.cell_count(); ++l)
    out.push_back(phi_form(alg, cd, l));
  return out;
}

struct StratumRow {
  std::size_t lambda;
  std::size_t n;
  std::size_t gram_rank;
  bool in_lambda0;
  std::size_t dim_simple;  // rank G(lambda); meaningful iff in_lambda0
};

// Lambda_0 = {Phi != 0}, Lambda_1 = {rad lambda = 0}, Lambda_2 = L0 - L1,
// Lambda_3 = Lambda - L0. (Lambda_4 needs the k-table and lives with the
// dual-basis code.)
struct Stratification {
  std::vector<std::size_t> lambda0, lambda1, lambda2, lambda3;
  std::vector<StratumRow> rows;

  static bool member(const std::vector<std::size_t>& set, std::size_t x) {
    for (auto v : set)
      if (v == x) return true;
    return false;
  }
};

template <class K>
Stratification classify_strata(const CellDatum<K>& cd,
                               const std::vector<GramData<K>>& grams) {
  Stratification st;
  for (std::size_t l = 0; l < cd.cell_count(); ++l) {
    const auto& g = grams[l];
    const bool in0 = g.phi_nonzero();
    const bool in1 = g.dim_rad() == 0;
    if (in0) st.lambda0.push_back(l);
    if (in1) st.lambda1.push_back(l);
    if (in0 && !in1) st.lambda2.push_back(l);
    if (!in0) st.lambda3.push_back(l);
    st.rows.push_back({l, cd.m_size(l), g.gram_rank, in0, g.gram_rank});
  }
  return st;
}

// Action on L_lambda = W(lambda)/rad lambda. Coset representatives are the
// standard coordinates at non-pivot columns of the rad RREF basis.
template <class K>
struct QuotientModule {
  std::size_t lambda;
  std::vector<std::size_t> coset_positions;
  std::vector<Matrix<K>> action;  // per distinguished basis element

  std::size_t dim() const { return coset_positions.size(); }
};

template <class K>
QuotientModule<K> simple_module_action(const AlgebraDescriptor<K>& alg,
                                       const CellDatum<K>& cd,
                                       const GramData<K>& gram) {
  if (!gram.phi_nonzero())
    throw PhiZero("simple module: Phi = 0 at lambda=" +
                  cd.poset().label(gram.lambda));
  const std::size_t lambda = gram.lambda;
  const std::size_t nl = cd.m_size(lambda);
  const auto& radrows = gram.rad.rows();
  std::vector<std::size_t> pivot_of_row(radrows.rows(), nl);
  std::vector<bool> is_pivot(nl, false);
  for (std::size_t r = 0; r < radrows.rows(); ++r)
    for (std::size_t c = 0; c < nl; ++c)
      if (!radrows.at(r, c).is_zero()) {
        pivot_of_row[r] = c;
        is_pivot[c] = true;
        break;
      }
  QuotientModule<K> q{lambda, {}, {}};
  for (std::size_t c = 0; c < nl; ++c)
    if (!is_pivot[c]) q.coset_positions.push_back(c);
  const std::size_t d = q.coset_positions.size();

  auto project = [&](Vec<K> w) {
    for (std::size_t r = 0; r < radrows.rows(); ++r) {
      const std::size_t p = pivot_of_row[r];
      if (w[p].is_zero()) continue;
      const K f = w[p];
      for (std::size_t j = 0; j < nl; ++j) w[j] -= f * radrows.at(r, j);
    }
    Vec<K> out;
    out.reserve(d);
    for (auto c : q.coset_positions) out.push_back(w[c]);
    return out;
  };

  const auto act = cell_module(alg, cd, lambda);
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    Matrix<K> m(d, d, alg.zero());
    for (std::size_t qc = 0; qc < d; ++qc) {
      Vec<K> col = act.matrices[a].col(q.coset_positions[qc]);
      Vec<K> pr = project(std::move(col));
      for (std::size_t r = 0; r < d; ++r) m.at(r, qc) = pr[r];
    }
    q.action.push_back(std::move(m));
  }
  // representation property on the quotient
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      Matrix<K> lhs = q.action[i] * q.action[j];
      Matrix<K> rhs(d, d, alg.zero());
      for (const auto& [k, c] : alg.basis_product(i, j))
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t cc = 0; cc < d; ++cc)
            rhs.at(r, cc) += c * q.action[k].at(r, cc);
      if (lhs != rhs)
        throw InconsistentDatum(
            "simple module: quotient action is not a representation");
    }
  return q;
}

template <class K>
bool semisimple_by_nondegeneracy(const CellDatum<K>& cd,
                                 const std::vector<GramData<K>>& grams) {
  for (std::size_t l = 0; l < cd.cell_count(); ++l)
    if (grams[l].gram_rank != cd.m_size(l)) return false;
  return true;
}

// For maximal cells: rad lambda must vanish whenever Phi is nonzero; a
// maximal cell with Phi = 0 is flagged as a warning rather than rejected.
template <class K>
Report maximal_cell_report(const CellDatum<K>& cd,
                           const std::vector<GramData<K>>& grams) {
  Report rep;
  for (std::size_t l : cd.poset().maximal()) {
    const auto& g = grams[l];
    if (g.phi_nonzero()) {
      rep.add("maximal cell " + cd.poset().label(l) + ": rad = 0",
              g.dim_rad() == 0,
              g.dim_rad() == 0 ? "" : "kernel of G(lambda) is nonzero");
    } else {
      rep.add("warning: maximal cell " + cd.poset().label(l) + " has Phi = 0",
              true, "flagged, not rejected");
    }
  }
  return rep;
}

// Same datum with M(lambda) reordered by perm (new position s holds the old
// element perm[s]); used for the Gram determinant invariance property.
template <class K>
CellDatum<K> permute_m_order(const CellDatum<K>& cd, std::size_t lambda,
                             const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> inverse(perm.size());
  for (std::size_t s = 0; s < perm.size(); ++s) inverse[perm[s]] = s;
  std::vector<CellIndex> labeling = cd.labeling();
  for (auto& ci : labeling)
    if (ci.lambda == lambda) {
      ci.s = inverse[ci.s];
      ci.t = inverse[ci.t];
    }
  return CellDatum<K>(cd.poset(), cd.m_sizes(), std::move(labeling),
                      cd.involution());
}

}  // namespace cellalg
