#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cellalg/algebra.hpp"
#include "cellalg/cell_datum.hpp"
#include "cellalg/errors.hpp"
#include "cellalg/matrix.hpp"
#include "cellalg/report.hpp"
#include "cellalg/trace.hpp"

namespace cellalg {

// The dual basis reindexed by the cellular pairing convention
//   tau(C[lam][S,T] * D[mu][U,V]) = delta_{lam,mu} delta_{S,V} delta_{T,U},
// so the element stored at flat position f with label (lam,U,V) is the plain
// dual of the basis element labeled (lam,V,U). Also carries the
// change-of-basis into D-coordinates used by the Psi congruences.
template <class K>
class DualCellBasis {
 public:
  DualCellBasis(const AlgebraDescriptor<K>& alg, const CellDatum<K>& cd,
                const TraceForm<K>& tau)
      : to_dual_(0, 0, alg.zero()), from_dual_(0, 0, alg.zero()),
        trace_(tau) {
    const auto raw = dual_basis(alg, tau);
    const std::size_t n = alg.dim();
    elements_.reserve(n);
    for (std::size_t f = 0; f < n; ++f) {
      const auto& ci = cd.label_of(f);
      elements_.push_back(raw.elements[cd.index_of(ci.lambda, ci.t, ci.s)]);
    }
    Matrix<K> p(n, n, alg.zero());
    for (std::size_t f = 0; f < n; ++f)
      for (std::size_t r = 0; r < n; ++r) p.at(r, f) = elements_[f][r];
    from_dual_ = p;
    to_dual_ = invert(p);
    // full pairing matrix check
    for (std::size_t f = 0; f < n; ++f) {
      const auto& c = cd.label_of(f);
      for (std::size_t g = 0; g < n; ++g) {
        const auto& d = cd.label_of(g);
        const K v = tau(alg.multiply(alg.basis_element(f), elements_[g]));
        const bool want_one = c.lambda == d.lambda && c.s == d.t && c.t == d.s;
        if (want_one ? !v.is_one() : !v.is_zero())
          throw InconsistentDatum("dual cell basis: pairing fails at " +
                                  cd.display(f) + " vs " + cd.display(g, "D"));
      }
    }
  }

  const TraceForm<K>& trace() const { return trace_; }
  const Vec<K>& at_flat(std::size_t f) const { return elements_[f]; }
  const Vec<K>& at(const CellDatum<K>& cd, std::size_t lambda, std::size_t u,
                   std::size_t v) const {
    return elements_[cd.index_of(lambda, u, v)];
  }
  const std::vector<Vec<K>>& elements() const { return elements_; }

  // coordinates of x in the D basis (flat labeling order)
  Vec<K> dual_coords(const Vec<K>& x) const { return to_dual_ * x; }
  const Matrix<K>& to_dual() const { return to_dual_; }
  const Matrix<K>& from_dual() const { return from_dual_; }

 private:
  std::vector<Vec<K>> elements_;
  Matrix<K> to_dual_;
  Matrix<K> from_dual_;
  TraceForm<K> trace_;
};

template <class K>
DualCellBasis<K> dual_cell_basis(const AlgebraDescriptor<K>& alg,
                                 const CellDatum<K>& cd,
                                 const TraceForm<K>& tau) {
  return DualCellBasis<K>(alg, cd, tau);
}

// The eight product identities between the cellular basis and its dual,
// checked exhaustively over all index tuples. The expansion identities (1)
// and (2) are checked against the structure constants; (3)-(8) are element
// equalities.
template <class K>
Report verify_dual_identities(const AlgebraDescriptor<K>& alg,
                              const CellDatum<K>& cd,
                              const DualCellBasis<K>& dcb) {
  Report rep;
  const std::size_t n = alg.dim();

  auto check_expansion = [&](bool d_times_c) {
    for (std::size_t fd = 0; fd < n; ++fd) {
      const auto& ld = cd.label_of(fd);  // (mu, U, V)
      const std::size_t f_target = cd.index_of(ld.lambda, ld.t, ld.s);
      for (std::size_t fc = 0; fc < n; ++fc) {
        Vec<K> lhs = d_times_c
                         ? alg.multiply(dcb.at_flat(fd), alg.basis_element(fc))
                         : alg.multiply(alg.basis_element(fc), dcb.at_flat(fd));
        Vec<K> rhs(n, alg.zero());
        for (std::size_t h = 0; h < n; ++h) {
          const auto& lh = cd.label_of(h);  // (eps, X, Y)
          const std::size_t swapped = cd.index_of(lh.lambda, lh.t, lh.s);
          const K c = d_times_c
                          ? alg.structure_constant(fc, swapped, f_target)
                          : alg.structure_constant(swapped, fc, f_target);
          if (!c.is_zero()) axpy(rhs, c, dcb.at_flat(h));
        }
        if (lhs != rhs) return std::make_pair(fd, fc);
      }
    }
    return std::make_pair(n, n);
  };

  auto [w1a, w1b] = check_expansion(true);
  rep.add("(1) D C expansion via structure constants", w1a == n,
          w1a == n ? "" : cd.display(w1a, "D") + " * " + cd.display(w1b));
  auto [w2a, w2b] = check_expansion(false);
  rep.add("(2) C D expansion via structure constants", w2a == n,
          w2a == n ? "" : cd.display(w2b) + " * " + cd.display(w2a, "D"));

  bool ok3 = true, ok4 = true, ok5 = true, ok6 = true;
  std::string w3, w4, w5, w6;
  for (std::size_t lam = 0; lam < cd.cell_count(); ++lam) {
    const std::size_t nl = cd.m_size(lam);
    for (std::size_t s = 0; s < nl; ++s)
      for (std::size_t q = 0; q < nl; ++q) {
        const Vec<K> probe3 = alg.multiply(
            alg.basis_element(cd.index_of(lam, s, 0)), dcb.at(cd, lam, 0, q));
        const Vec<K> probe4 = alg.multiply(
            dcb.at(cd, lam, s, 0), alg.basis_element(cd.index_of(lam, 0, q)));
        for (std::size_t t = 1; t < nl; ++t) {
          if (ok3 &&
              alg.multiply(alg.basis_element(cd.index_of(lam, s, t)),
                           dcb.at(cd, lam, t, q)) != probe3) {
            ok3 = false;
            w3 = cd.display(lam, s, t) + " " + cd.display(lam, t, q, "D");
          }
          if (ok4 &&
              alg.multiply(dcb.at(cd, lam, s, t),
                           alg.basis_element(cd.index_of(lam, t, q))) !=
                  probe4) {
            ok4 = false;
            w4 = cd.display(lam, s, t, "D") + " " + cd.display(lam, t, q);
          }
        }
        for (std::size_t t = 0; t < nl; ++t)
          for (std::size_t p = 0; p < nl; ++p) {
            if (t != p && ok5 &&
                !is_zero_vec(
                    alg.multiply(alg.basis_element(cd.index_of(lam, s, t)),
                                 dcb.at(cd, lam, p, q)))) {
              ok5 = false;
              w5 = cd.display(lam, s, t) + " " + cd.display(lam, p, q, "D");
            }
            if (q != s && ok6 &&
                !is_zero_vec(
                    alg.multiply(dcb.at(cd, lam, p, q),
                                 alg.basis_element(cd.index_of(lam, s, t))))) {
              ok6 = false;
              w6 = cd.display(lam, p, q, "D") + " " + cd.display(lam, s, t);
            }
          }
      }
  }
  rep.add("(3) C[S,T] D[T,Q] independent of T", ok3, w3);
  rep.add("(4) D[T,S] C[S,Q] independent of S", ok4, w4);
  rep.add("(5) C[S,T] D[P,Q] = 0 for T != P", ok5, w5);
  rep.add("(6) D[P,Q] C[S,T] = 0 for Q != S", ok6, w6);

  bool ok7 = true, ok8 = true;
  std::string w7, w8;
  for (std::size_t fc = 0; fc < n; ++fc) {
    const auto& lc = cd.label_of(fc);
    for (std::size_t fd = 0; fd < n; ++fd) {
      const auto& ld = cd.label_of(fd);
      if (cd.poset().leq(ld.lambda, lc.lambda)) continue;
      if (ok7 &&
          !is_zero_vec(alg.multiply(alg.basis_element(fc), dcb.at_flat(fd)))) {
        ok7 = false;
        w7 = cd.display(fc) + " " + cd.display(fd, "D");
      }
      if (ok8 &&
          !is_zero_vec(alg.multiply(dcb.at_flat(fd), alg.basis_element(fc)))) {
        ok8 = false;
        w8 = cd.display(fd, "D") + " " + cd.display(fc);
      }
    }
  }
  rep.add("(7) C D = 0 unless mu <= lambda", ok7, w7);
  rep.add("(8) D C = 0 unless mu <= lambda", ok8, w8);
  return rep;
}

// The D basis viewed as a cellular structure of its own: same labels and
// index sets, opposite order on the poset, the same involution written in
// D-coordinates.
template <class K>
struct DualDatum {
  AlgebraDescriptor<K> alg;
  CellDatum<K> cd;
  TraceForm<K> trace;  // the original tau expressed on the D basis
};

template <class K>
DualDatum<K> build_dual_datum(const AlgebraDescriptor<K>& alg,
                              const CellDatum<K>& cd,
                              const DualCellBasis<K>& dcb) {
  const std::size_t n = alg.dim();
  std::vector<StructureEntry<K>> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec<K> prod =
          dcb.dual_coords(alg.multiply(dcb.at_flat(i), dcb.at_flat(j)));
      for (std::size_t k = 0; k < n; ++k)
        if (!prod[k].is_zero()) entries.push_back({i, j, k, prod[k]});
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t f = 0; f < n; ++f) labels.push_back(cd.display(f, "D"));
  AlgebraDescriptor<K> dual_alg(alg.field(), std::move(labels),
                                std::move(entries),
                                dcb.dual_coords(alg.unit()));
  Matrix<K> dual_inv = dcb.to_dual() * cd.involution() * dcb.from_dual();
  CellDatum<K> dual_cd(cd.poset().opposite(), cd.m_sizes(), cd.labeling(),
                       std::move(dual_inv));
  Vec<K> tau_row(n, alg.zero());
  for (std::size_t f = 0; f < n; ++f) tau_row[f] = dcb.trace()(dcb.at_flat(f));
  TraceForm<K> dual_tau(dual_alg, std::move(tau_row));
  return DualDatum<K>{std::move(dual_alg), std::move(dual_cd),
                      std::move(dual_tau)};
}

// The dual basis is cellular w.r.t. the opposite order. Runs the
// full axiom validation on the dual datum and additionally pins the dual
// (C3) coefficients to the original ones: the action of a on the dual cell
// module W_D(mu) is the transpose of the action of i(a) on W(mu).
template <class K>
Report verify_dual_cellularity(const AlgebraDescriptor<K>& alg,
                               const CellDatum<K>& cd,
                               const DualCellBasis<K>& dcb) {
  Report rep;
  const auto dual = build_dual_datum(alg, cd, dcb);
  {
    Report axioms = validate_cell_datum(dual.alg, dual.cd);
    for (const auto& item : axioms.items())
      rep.add("dual datum " + item.name, item.passed, item.witness);
  }
  bool coeff_ok = true;
  std::string wit;
  for (std::size_t mu = 0; mu < cd.cell_count() && coeff_ok; ++mu) {
    const auto orig = cell_module(alg, cd, mu);
    const auto dual_act = cell_module(dual.alg, dual.cd, mu);
    for (std::size_t g = 0; g < alg.dim() && coeff_ok; ++g) {
      const Matrix<K> lhs =
          dual_act.of_element(dual.alg, dcb.dual_coords(alg.basis_element(g)));
      const Matrix<K> rhs =
          orig.of_element(alg, cd.involution().col(g)).transpose();
      if (lhs != rhs) {
        coeff_ok = false;
        wit = "a_" + std::to_string(g) + ", lambda=" + cd.poset().label(mu);
      }
    }
  }
  rep.add("dual C3 coefficients are r_{i(a)}(U,U') transposed", coeff_ok, wit);
  return rep;
}

// Psi and the cell constant k_lambda = sum_X Phi(X,V) Psi(X,V).
template <class K>
struct DualGramData {
  std::size_t lambda;
  Matrix<K> psi;
  K k;
};

template <class K>
DualGramData<K> psi_and_k(const AlgebraDescriptor<K>& alg,
                          const CellDatum<K>& cd, const DualCellBasis<K>& dcb,
                          const GramData<K>& gram) {
  const std::size_t lambda = gram.lambda;
  const std::size_t nl = cd.m_size(lambda);
  Matrix<K> psi(nl, nl, alg.zero());
  for (std::size_t t = 0; t < nl; ++t)
    for (std::size_t u = 0; u < nl; ++u) {
      bool have = false;
      K val = alg.zero();
      for (std::size_t s = 0; s < nl; ++s)
        for (std::size_t v = 0; v < nl; ++v) {
          Vec<K> coords = dcb.dual_coords(
              alg.multiply(dcb.at(cd, lambda, s, t), dcb.at(cd, lambda, u, v)));
          // congruence mod the span of D[eta] with eta > lambda
          coords = cd.reduce_above(lambda, std::move(coords));
          const std::size_t target = cd.index_of(lambda, s, v);
          const K cand = coords[target];
          coords[target] = alg.zero();
          if (!is_zero_vec(coords))
            throw NotCellular("psi: " + cd.display(lambda, s, t, "D") + " * " +
                              cd.display(lambda, u, v, "D") +
                              " is not a multiple of " +
                              cd.display(lambda, s, v, "D") +
                              " mod higher cells");
          if (!have) {
            val = cand;
            have = true;
          } else if (cand != val) {
            throw NotCellular("psi: value depends on the probe pair at " +
                              cd.display(lambda, s, t, "D") + " * " +
                              cd.display(lambda, u, v, "D"));
          }
        }
      psi.at(t, u) = val;
    }
  for (std::size_t t = 0; t < nl; ++t)
    for (std::size_t u = t + 1; u < nl; ++u)
      if (psi.at(t, u) != psi.at(u, t))
        throw NotCellular("psi: G'(lambda) not symmetric at lambda=" +
                          cd.poset().label(lambda));
  bool have_k = false;
  K k = alg.zero();
  for (std::size_t v = 0; v < nl; ++v) {
    K kv = alg.zero();
    for (std::size_t x = 0; x < nl; ++x)
      kv += gram.phi.at(x, v) * psi.at(x, v);
    if (!have_k) {
      k = kv;
      have_k = true;
    } else if (kv != k) {
      throw NotCellular("k: sum_X Phi(X,V) Psi(X,V) depends on V at lambda=" +
                        cd.poset().label(lambda));
    }
  }
  return DualGramData<K>{lambda, std::move(psi), k};
}

template <class K>
std::vector<DualGramData<K>> all_dual_gram_data(
    const AlgebraDescriptor<K>& alg, const CellDatum<K>& cd,
    const DualCellBasis<K>& dcb, const std::vector<GramData<K>>& grams) {
  std::vector<DualGramData<K>> out;
  out.reserve(grams.size());
  for (const auto& g : grams) out.push_back(psi_and_k(alg, cd, dcb, g));
  return out;
}

// (a) the quadruple-product collapse C D C D = k C D, sampled up to a cap of
// tuples (S,T,U,V,P) per cell (exhaustive below the cap);
// (b) G(lambda) G'(lambda) = k_lambda E, both product orders;
// (c) rad lambda != 0 forces k_lambda = 0.
template <class K>
Report verify_k_identities(const AlgebraDescriptor<K>& alg,
                           const CellDatum<K>& cd, const DualCellBasis<K>& dcb,
                           const std::vector<GramData<K>>& grams,
                           const std::vector<DualGramData<K>>& dual_grams,
                           std::size_t tuple_cap = 2000,
                           std::uint64_t seed = 2000) {
  Report rep;
  bool quad_ok = true, gram_ok = true, cor_ok = true;
  std::string wq, wg, wc;
  for (std::size_t lam = 0; lam < cd.cell_count(); ++lam) {
    const std::size_t nl = cd.m_size(lam);
    const K& k = dual_grams[lam].k;

    auto check_tuple = [&](std::size_t s, std::size_t t, std::size_t u,
                           std::size_t v, std::size_t p) {
      const Vec<K> lhs = alg.multiply(
          alg.multiply(
              alg.multiply(alg.basis_element(cd.index_of(lam, s, t)),
                           dcb.at(cd, lam, t, u)),
              alg.basis_element(cd.index_of(lam, u, v))),
          dcb.at(cd, lam, v, p));
      const Vec<K> rhs =
          scaled(alg.multiply(alg.basis_element(cd.index_of(lam, s, t)),
                              dcb.at(cd, lam, t, p)),
                 k);
      if (lhs != rhs && quad_ok) {
        quad_ok = false;
        wq = "lambda=" + cd.poset().label(lam) + " (S,T,U,V,P)=(" +
             std::to_string(s + 1) + "," + std::to_string(t + 1) + "," +
             std::to_string(u + 1) + "," + std::to_string(v + 1) + "," +
             std::to_string(p + 1) + ")";
      }
    };

    std::size_t total = 1;
    bool exhaustive = true;
    for (int e = 0; e < 5; ++e) {
      total *= nl;
      if (total > tuple_cap) {
        exhaustive = false;
        break;
      }
    }
    if (exhaustive) {
      for (std::size_t s = 0; s < nl; ++s)
        for (std::size_t t = 0; t < nl; ++t)
          for (std::size_t u = 0; u < nl; ++u)
            for (std::size_t v = 0; v < nl; ++v)
              for (std::size_t p = 0; p < nl; ++p) check_tuple(s, t, u, v, p);
    } else {
      std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * (lam + 1)));
      for (std::size_t it = 0; it < tuple_cap; ++it)
        check_tuple(rng() % nl, rng() % nl, rng() % nl, rng() % nl, rng() % nl);
    }

    const Matrix<K> prod = grams[lam].phi * dual_grams[lam].psi;
    const Matrix<K> prod2 = dual_grams[lam].psi * grams[lam].phi;
    Matrix<K> ke(nl, nl, alg.zero());
    for (std::size_t i = 0; i < nl; ++i) ke.at(i, i) = k;
    if ((prod != ke || prod2 != ke) && gram_ok) {
      gram_ok = false;
      wg = "lambda=" + cd.poset().label(lam);
    }
    if (grams[lam].dim_rad() != 0 && !k.is_zero() && cor_ok) {
      cor_ok = false;
      wc = "lambda=" + cd.poset().label(lam) + " has rad != 0 but k != 0";
    }
  }
  rep.add("quadruple products collapse to k C D", quad_ok, wq);
  rep.add("G(lambda) G'(lambda) = k E (both orders)", gram_ok, wg);
  rep.add("rad lambda != 0 implies k = 0", cor_ok, wc);
  return rep;
}

}  // namespace cellalg
