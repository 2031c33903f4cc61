#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cellalg/algebra.hpp"
#include "cellalg/cell_datum.hpp"
#include "cellalg/dual_cell.hpp"
#include "cellalg/errors.hpp"
#include "cellalg/matrix.hpp"
#include "cellalg/report.hpp"
#include "cellalg/subspace.hpp"
#include "cellalg/trace.hpp"

namespace cellalg {

// span{ a b : a in A-basis, b in B-basis } as a subspace
template <class K>
SubspaceBasis<K> product_subspace(const AlgebraDescriptor<K>& alg,
                                  const SubspaceBasis<K>& a,
                                  const SubspaceBasis<K>& b) {
  std::vector<Vec<K>> prods;
  prods.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      prods.push_back(alg.multiply(a.basis_vector(i), b.basis_vector(j)));
  if (prods.empty()) return SubspaceBasis<K>::zero(alg.dim(), alg.zero());
  return SubspaceBasis<K>::from_spanning(prods, alg.dim(), alg.zero());
}

// Per-cell ideals I^lambda = span{C[S,V] D[V,U]} and I_D^lambda (the D C
// side), together with I = sum over cells with k_lambda = 0.
template <class K>
struct IdealData {
  std::vector<SubspaceBasis<K>> ideal_c;  // I^lambda
  std::vector<SubspaceBasis<K>> ideal_d;  // I_D^lambda
  SubspaceBasis<K> total_c;               // I^Lambda
  SubspaceBasis<K> total_d;               // I_D^Lambda
  SubspaceBasis<K> total;                 // I
  std::vector<std::size_t> lambda4;       // {lambda in Lambda_1 : k = 0}

  std::size_t dim() const { return total.dim(); }
};

template <class K>
IdealData<K> build_ideal_I(const AlgebraDescriptor<K>& alg,
                           const CellDatum<K>& cd, const DualCellBasis<K>& dcb,
                           const std::vector<GramData<K>>& grams,
                           const std::vector<DualGramData<K>>& dual_grams) {
  const std::size_t n = alg.dim();
  IdealData<K> out{{},
                   {},
                   SubspaceBasis<K>::zero(n, alg.zero()),
                   SubspaceBasis<K>::zero(n, alg.zero()),
                   SubspaceBasis<K>::zero(n, alg.zero()),
                   {}};

  auto span_for = [&](std::size_t lam, std::size_t v, bool c_side) {
    const std::size_t nl = cd.m_size(lam);
    std::vector<Vec<K>> vecs;
    vecs.reserve(nl * nl);
    for (std::size_t s = 0; s < nl; ++s)
      for (std::size_t u = 0; u < nl; ++u)
        vecs.push_back(
            c_side
                ? alg.multiply(alg.basis_element(cd.index_of(lam, s, v)),
                               dcb.at(cd, lam, v, u))
                : alg.multiply(dcb.at(cd, lam, u, v),
                               alg.basis_element(cd.index_of(lam, v, s))));
    return SubspaceBasis<K>::from_spanning(vecs, n, alg.zero());
  };

  for (std::size_t lam = 0; lam < cd.cell_count(); ++lam) {
    for (bool c_side : {true, false}) {
      SubspaceBasis<K> sp = span_for(lam, 0, c_side);
      if (cd.m_size(lam) > 1 && sp != span_for(lam, 1, c_side))
        throw InconsistentDatum("ideal: span depends on the probe column V at "
                                "lambda=" +
                                cd.poset().label(lam));
      // two-sidedness: close under left/right multiplication by every basis
      // element
      for (std::size_t i = 0; i < sp.dim(); ++i) {
        const Vec<K> x = sp.basis_vector(i);
        for (std::size_t g = 0; g < n; ++g) {
          if (!sp.contains(alg.multiply(alg.basis_element(g), x)) ||
              !sp.contains(alg.multiply(x, alg.basis_element(g))))
            throw InconsistentDatum("ideal: not two-sided at lambda=" +
                                    cd.poset().label(lam));
        }
      }
      (c_side ? out.ideal_c : out.ideal_d).push_back(std::move(sp));
    }
    if (dual_grams[lam].k.is_zero()) {
      out.total_c = out.total_c.sum(out.ideal_c[lam]);
      out.total_d = out.total_d.sum(out.ideal_d[lam]);
      if (grams[lam].dim_rad() == 0) out.lambda4.push_back(lam);
    }
  }
  out.total = out.total_c.sum(out.total_d);
  return out;
}

// I^Lambda squared, I_D^Lambda squared and I cubed all vanish. Also notes
// when I^2 itself is already zero (stronger than required).
template <class K>
Report verify_nilpotency(const AlgebraDescriptor<K>& alg,
                         const IdealData<K>& ideal) {
  Report rep;
  const auto cc = product_subspace(alg, ideal.total_c, ideal.total_c);
  rep.add("(I^Lambda)^2 = 0", cc.dim() == 0,
          cc.dim() ? "dim = " + std::to_string(cc.dim()) : "");
  const auto dd = product_subspace(alg, ideal.total_d, ideal.total_d);
  rep.add("(I_D^Lambda)^2 = 0", dd.dim() == 0,
          dd.dim() ? "dim = " + std::to_string(dd.dim()) : "");
  const auto sq = product_subspace(alg, ideal.total, ideal.total);
  const auto cube = product_subspace(alg, sq, ideal.total);
  rep.add("I^3 = 0", cube.dim() == 0,
          cube.dim() ? "dim = " + std::to_string(cube.dim()) : "");
  rep.add("note: dim I^2 = " + std::to_string(sq.dim()), true,
          sq.dim() == 0 ? "I^2 = 0 here, stronger than required" : "");
  return rep;
}

// rad A as the intersection of the annihilators of the simple modules
// L_lambda, lambda in Lambda_0. Cross-checked against
// dim A - sum (dim L_lambda)^2.
template <class K>
SubspaceBasis<K> jacobson_radical(const AlgebraDescriptor<K>& alg,
                                  const CellDatum<K>& cd,
                                  const std::vector<GramData<K>>& grams) {
  const std::size_t n = alg.dim();
  bool any = false;
  std::size_t simple_sq_sum = 0;
  SubspaceBasis<K> rad = SubspaceBasis<K>::full(n, alg.zero());
  for (const auto& g : grams) {
    if (!g.phi_nonzero()) continue;
    any = true;
    const auto q = simple_module_action(alg, cd, g);
    const std::size_t d = q.dim();
    simple_sq_sum += d * d;
    Matrix<K> constraints(d * d, n, alg.zero());
    for (std::size_t e1 = 0; e1 < d; ++e1)
      for (std::size_t e2 = 0; e2 < d; ++e2)
        for (std::size_t gi = 0; gi < n; ++gi)
          constraints.at(e1 * d + e2, gi) = q.action[gi].at(e1, e2);
    rad = rad.intersect(kernel(constraints));
  }
  if (!any)
    throw InconsistentDatum(
        "radical: no cell has Phi != 0; the datum admits no simple module");
  if (rad.dim() != n - simple_sq_sum)
    throw InconsistentDatum(
        "radical: dim(intersection of annihilators) = " +
        std::to_string(rad.dim()) + " but dim A - sum (dim L)^2 = " +
        std::to_string(n - simple_sq_sum));
  return rad;
}

struct RadicalReport {
  std::size_t dim_rad = 0;
  std::size_t dim_i = 0;
  bool i_contained = false;
  bool i_equal = false;
  bool tau_independent = false;
  std::size_t bound3_lhs = 0, bound3_rhs = 0;  // dim I >= rhs
  long long bound4_lhs = 0, bound4_rhs = 0;    // lhs <= rhs, signed sums
  Report checks;
};

// The main structural facts about I and rad A on one instance:
// containment, independence of the symmetrizing trace (recomputed under
// seeded random traces), and the two dimension bounds.
template <class K>
RadicalReport verify_radical_theorem(
    const AlgebraDescriptor<K>& alg, const CellDatum<K>& cd,
    const DualCellBasis<K>& dcb, const std::vector<GramData<K>>& grams,
    const std::vector<DualGramData<K>>& dual_grams, const IdealData<K>& ideal,
    const SubspaceBasis<K>& rad, std::size_t n_traces = 5,
    std::uint64_t seed = 42) {
  RadicalReport out;
  out.dim_rad = rad.dim();
  out.dim_i = ideal.dim();
  out.i_contained = rad.contains(ideal.total);
  out.i_equal = (rad == ideal.total);
  out.checks.add("I is contained in rad A", out.i_contained);
  out.checks.add(std::string("note: I ") + (out.i_equal ? "equals" : "is a proper subspace of") +
                     " rad A on this instance",
                 true);

  out.tau_independent = true;
  for (std::size_t t = 0; t < n_traces; ++t) {
    const auto tau2 = random_symmetrizing_trace(alg, seed + t);
    const auto dcb2 = dual_cell_basis(alg, cd, tau2);
    const auto dg2 = all_dual_gram_data(alg, cd, dcb2, grams);
    const auto ideal2 = build_ideal_I(alg, cd, dcb2, grams, dg2);
    if (ideal2.total != ideal.total) {
      out.tau_independent = false;
      break;
    }
  }
  out.checks.add("I is independent of the symmetrizing trace (" +
                     std::to_string(n_traces) + " seeded samples)",
                 out.tau_independent);

  const auto strata = classify_strata(cd, grams);
  out.bound3_lhs = out.dim_i;
  for (std::size_t lam : strata.lambda2)
    out.bound3_rhs += (cd.m_size(lam) + grams[lam].dim_rad()) *
                      grams[lam].gram_rank;
  for (std::size_t lam : ideal.lambda4)
    out.bound3_rhs += cd.m_size(lam) * cd.m_size(lam);
  out.checks.add("dim I >= sum_{L2} (n + dim rad) dim L + sum_{L4} n^2 (" +
                     std::to_string(out.bound3_lhs) + " >= " +
                     std::to_string(out.bound3_rhs) + ")",
                 out.bound3_lhs >= out.bound3_rhs);

  for (std::size_t lam : strata.lambda2) {
    const long long dl = static_cast<long long>(grams[lam].gram_rank);
    const long long dr = static_cast<long long>(grams[lam].dim_rad());
    out.bound4_lhs += dl * dl;
    out.bound4_rhs += dr * dr;
  }
  for (std::size_t lam : strata.lambda3) {
    const long long nl = static_cast<long long>(cd.m_size(lam));
    out.bound4_lhs -= nl * nl;
  }
  for (std::size_t lam : ideal.lambda4) {
    const long long nl = static_cast<long long>(cd.m_size(lam));
    out.bound4_rhs -= nl * nl;
  }
  out.checks.add(
      "sum_{L2} (dim L)^2 - sum_{L3} n^2 <= sum_{L2} (dim rad)^2 - sum_{L4} "
      "n^2 (" +
          std::to_string(out.bound4_lhs) + " <= " +
          std::to_string(out.bound4_rhs) + ")",
      out.bound4_lhs <= out.bound4_rhs);
  return out;
}

// Minimal cells with nonzero radical lie inside rad A; and for sampled
// radical elements, every cell maximal in the support has k = 0.
template <class K>
Report check_corollaries(const AlgebraDescriptor<K>& alg,
                         const CellDatum<K>& cd,
                         const std::vector<GramData<K>>& grams,
                         const std::vector<DualGramData<K>>& dual_grams,
                         const SubspaceBasis<K>& rad,
                         std::size_t sample_count = 20,
                         std::uint64_t seed = 271828) {
  Report rep;
  bool min_ok = true;
  std::string min_wit;
  for (std::size_t lam : cd.poset().minimal()) {
    if (grams[lam].dim_rad() == 0) continue;
    const std::size_t nl = cd.m_size(lam);
    for (std::size_t s = 0; s < nl && min_ok; ++s)
      for (std::size_t t = 0; t < nl && min_ok; ++t)
        if (!rad.contains(alg.basis_element(cd.index_of(lam, s, t)))) {
          min_ok = false;
          min_wit = cd.display(lam, s, t) + " is outside rad A";
        }
  }
  rep.add("minimal cells with rad != 0 lie inside rad A", min_ok, min_wit);

  bool max_ok = true;
  std::string max_wit;
  std::vector<Vec<K>> samples;
  for (std::size_t i = 0; i < rad.dim() && samples.size() < sample_count; ++i)
    samples.push_back(rad.basis_vector(i));
  std::mt19937_64 rng(seed);
  while (rad.dim() > 0 && samples.size() < sample_count) {
    Vec<K> r(alg.dim(), alg.zero());
    for (std::size_t i = 0; i < rad.dim(); ++i) {
      const long c = static_cast<long>(rng() % 7) - 3;
      if (c != 0) axpy(r, alg.zero().from_int(c), rad.basis_vector(i));
    }
    if (!is_zero_vec(r)) samples.push_back(std::move(r));
  }
  for (const auto& r : samples) {
    std::vector<bool> in_support(cd.cell_count(), false);
    for (std::size_t f = 0; f < alg.dim(); ++f)
      if (!r[f].is_zero()) in_support[cd.label_of(f).lambda] = true;
    for (std::size_t lam = 0; lam < cd.cell_count() && max_ok; ++lam) {
      if (!in_support[lam]) continue;
      bool maximal = true;
      for (std::size_t mu = 0; mu < cd.cell_count() && maximal; ++mu)
        if (in_support[mu] && cd.poset().less(lam, mu)) maximal = false;
      if (maximal && !dual_grams[lam].k.is_zero()) {
        max_ok = false;
        max_wit = "radical element with maximal support at lambda=" +
                  cd.poset().label(lam) + " but k != 0";
      }
    }
  }
  rep.add("cells maximal in the support of sampled radical elements have "
          "k = 0",
          max_ok, max_wit);
  return rep;
}

// The five equivalent semisimplicity conditions, evaluated independently:
// (1) rad A = 0; (2) every k_lambda != 0; (3) the elements C[S,T] D[T,T]
// form a basis; (4) each cell has some (S,T) with (C[S,T] D[T,S])^2 != 0;
// (5) every (S,T) satisfies that. The flags must agree.
struct BatteryResult {
  bool rad_zero = false;
  bool k_all_nonzero = false;
  bool cd_full_rank = false;
  bool square_exists = false;
  bool square_all = false;
  bool verdict = false;

  std::vector<bool> flags() const {
    return {rad_zero, k_all_nonzero, cd_full_rank, square_exists, square_all};
  }
};

template <class K>
BatteryResult semisimplicity_battery(
    const AlgebraDescriptor<K>& alg, const CellDatum<K>& cd,
    const DualCellBasis<K>& dcb, const std::vector<GramData<K>>& grams,
    const std::vector<DualGramData<K>>& dual_grams) {
  BatteryResult out;
  const std::size_t n = alg.dim();

  out.rad_zero = jacobson_radical(alg, cd, grams).dim() == 0;

  out.k_all_nonzero = true;
  for (const auto& dg : dual_grams)
    if (dg.k.is_zero()) out.k_all_nonzero = false;

  std::vector<Vec<K>> cdtt;
  cdtt.reserve(n);
  for (std::size_t f = 0; f < n; ++f) {
    const auto& ci = cd.label_of(f);
    cdtt.push_back(alg.multiply(alg.basis_element(f),
                                dcb.at(cd, ci.lambda, ci.t, ci.t)));
  }
  out.cd_full_rank =
      SubspaceBasis<K>::from_spanning(cdtt, n, alg.zero()).dim() == n;

  out.square_exists = true;
  out.square_all = true;
  for (std::size_t lam = 0; lam < cd.cell_count(); ++lam) {
    const std::size_t nl = cd.m_size(lam);
    bool exists = false;
    for (std::size_t s = 0; s < nl; ++s)
      for (std::size_t t = 0; t < nl; ++t) {
        const Vec<K> e = alg.multiply(
            alg.basis_element(cd.index_of(lam, s, t)), dcb.at(cd, lam, t, s));
        if (is_zero_vec(alg.multiply(e, e)))
          out.square_all = false;
        else
          exists = true;
      }
    if (!exists) out.square_exists = false;
  }

  const auto fl = out.flags();
  for (bool f : fl)
    if (f != fl[0])
      throw EquivalenceViolation(
          "semisimplicity battery: the five flags disagree: rad_zero=" +
          std::to_string(out.rad_zero) + " k=" +
          std::to_string(out.k_all_nonzero) + " basis=" +
          std::to_string(out.cd_full_rank) + " exists=" +
          std::to_string(out.square_exists) + " all=" +
          std::to_string(out.square_all));
  out.verdict = fl[0];
  return out;
}

// The basis E[S,T] = C[S,S] D[S,T] C[T,T] available in the semisimple case:
// full rank, cellular for the same datum shape, and orthogonal across cells.
template <class K>
struct WedderburnResult {
  std::vector<Vec<K>> elements;  // flat order matching the datum labeling
  Report checks;
};

template <class K>
WedderburnResult<K> wedderburn_basis(const AlgebraDescriptor<K>& alg,
                                     const CellDatum<K>& cd,
                                     const DualCellBasis<K>& dcb,
                                     const BatteryResult& battery) {
  if (!battery.verdict)
    throw NotSemisimple("wedderburn basis: the algebra is not semisimple");
  const std::size_t n = alg.dim();
  WedderburnResult<K> out;
  out.elements.reserve(n);
  for (std::size_t f = 0; f < n; ++f) {
    const auto& ci = cd.label_of(f);
    out.elements.push_back(alg.multiply(
        alg.multiply(alg.basis_element(cd.index_of(ci.lambda, ci.s, ci.s)),
                     dcb.at(cd, ci.lambda, ci.s, ci.t)),
        alg.basis_element(cd.index_of(ci.lambda, ci.t, ci.t))));
  }

  Matrix<K> p(n, n, alg.zero());
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t r = 0; r < n; ++r) p.at(r, f) = out.elements[f][r];
  const bool full_rank = rank(p) == n;
  out.checks.add("E elements form a basis", full_rank);
  if (!full_rank) return out;

  const Matrix<K> pinv = invert(p);
  std::vector<StructureEntry<K>> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec<K> prod =
          pinv * alg.multiply(out.elements[i], out.elements[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (!prod[k].is_zero()) entries.push_back({i, j, k, prod[k]});
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t f = 0; f < n; ++f) labels.push_back(cd.display(f, "E"));
  AlgebraDescriptor<K> e_alg(alg.field(), std::move(labels),
                             std::move(entries), pinv * alg.unit());
  CellDatum<K> e_cd(cd.poset(), cd.m_sizes(), cd.labeling(),
                    pinv * cd.involution() * p);
  Report axioms = validate_cell_datum(e_alg, e_cd);
  for (const auto& item : axioms.items())
    out.checks.add("E datum " + item.name, item.passed, item.witness);

  bool ortho = true;
  std::string wit;
  for (std::size_t i = 0; i < n && ortho; ++i)
    for (std::size_t j = 0; j < n && ortho; ++j) {
      if (cd.label_of(i).lambda == cd.label_of(j).lambda) continue;
      if (!is_zero_vec(alg.multiply(out.elements[i], out.elements[j]))) {
        ortho = false;
        wit = cd.display(i, "E") + " * " + cd.display(j, "E") + " != 0";
      }
    }
  out.checks.add("cross-cell products vanish", ortho, wit);
  return out;
}

}  // namespace cellalg
