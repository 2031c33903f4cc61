#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cellalg/algebra.hpp"
#include "cellalg/cell_datum.hpp"
#include "cellalg/errors.hpp"
#include "cellalg/field_spec.hpp"
#include "cellalg/matrix.hpp"
#include "cellalg/poset.hpp"
#include "cellalg/trace.hpp"

namespace cellalg {

// Optional second basis used only for display: e.g. the group basis of a
// group algebra, while the distinguished basis of the descriptor is the
// cellular one. Columns of basis_columns are the distinguished basis written
// in presentation coordinates.
template <class K>
struct Presentation {
  std::vector<std::string> labels;
  Matrix<K> basis_columns;

  Vec<K> coords(const Vec<K>& x) const { return basis_columns * x; }
};

template <class K>
struct ExpectedResults {
  std::optional<std::size_t> dim_rad;
  std::optional<std::size_t> dim_ideal;
  std::optional<bool> semisimple;
  // columns = the dual cellular basis in presentation coordinates
  std::optional<Matrix<K>> dual_in_presentation;
};

template <class K>
struct WorkbenchTriple {
  std::string name;
  AlgebraDescriptor<K> alg;
  CellDatum<K> cd;
  TraceForm<K> tau;
  std::optional<Presentation<K>> presentation;
  std::optional<ExpectedResults<K>> expected;
};

namespace s3 {

// words 1, s1, s2, s1s2, s2s1, s1s2s1 as permutations of {0,1,2},
// composed left to right
using Perm = std::array<int, 3>;

inline Perm compose(const Perm& a, const Perm& b) {
  return {b[a[0]], b[a[1]], b[a[2]]};
}

struct Tables {
  std::array<std::array<std::size_t, 6>, 6> mult;
  std::array<std::size_t, 6> inverse;
};

inline const Tables& tables() {
  static const Tables t = [] {
    const Perm e{0, 1, 2}, a{1, 0, 2}, b{0, 2, 1};
    const std::array<Perm, 6> words = {e, a, b, compose(a, b), compose(b, a),
                                       compose(compose(a, b), a)};
    auto find = [&](const Perm& p) -> std::size_t {
      for (std::size_t i = 0; i < 6; ++i)
        if (words[i] == p) return i;
      throw Error("s3: word lookup failed");
    };
    Tables out{};
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j)
        out.mult[i][j] = find(compose(words[i], words[j]));
      Perm inv{};
      for (int x = 0; x < 3; ++x) inv[words[i][x]] = x;
      out.inverse[i] = find(inv);
    }
    return out;
  }();
  return t;
}

// cellular basis in group coordinates, one column per flat index
// (3); (2,1)[1,1]; (2,1)[1,2]; (2,1)[2,1]; (2,1)[2,2]; (1^3)
constexpr int kCellBasis[6][6] = {
    {1, 1, 0, 0, 1, 1}, {1, 1, 0, 0, 0, 0}, {1, 0, 1, 1, 0, 0},
    {1, 0, 1, 0, 0, 0}, {1, 0, 0, 1, 0, 0}, {1, 0, 0, 0, 1, 0},
};
// rows above are group coordinates: row g, column f. Written explicitly:
//   C[(3)]      = 1+s1+s2+s1s2+s2s1+s1s2s1
//   C[(2,1)][1,1] = 1+s1            C[(2,1)][1,2] = s2+s1s2
//   C[(2,1)][2,1] = s2+s2s1         C[(2,1)][2,2] = 1+s1s2s1
//   C[(1^3)]    = 1

// dual cellular basis in group coordinates (columns, flat order)
constexpr int kDualBasis[6][6] = {
    {0, 0, 0, 0, 0, 1},  {0, 1, 0, 0, 0, -1},  {-1, 1, 1, 1, 1, -1},
    {1, -1, 0, -1, -1, 1}, {1, -1, -1, 0, -1, 1}, {0, 0, 0, 0, 1, -1},
};

}  // namespace s3

// The group algebra of S3 on its cellular basis, with poset
// (3) < (2,1) < (1^3), involution induced by group inversion, and the
// coefficient-of-identity trace.
template <class K>
WorkbenchTriple<K> gen_group_s3(const FieldSpec& fs,
                                std::string name = "group-s3") {
  const K zero = zero_of<K>(fs);
  const auto& tab = s3::tables();

  Matrix<K> b(6, 6, zero);  // columns = cellular basis in group coords
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t f = 0; f < 6; ++f)
      b.at(g, f) = zero.from_int(s3::kCellBasis[g][f]);
  const Matrix<K> binv = invert(b);

  auto group_mul = [&](const Vec<K>& x, const Vec<K>& y) {
    Vec<K> out(6, zero);
    for (std::size_t i = 0; i < 6; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < 6; ++j) {
        if (y[j].is_zero()) continue;
        out[tab.mult[i][j]] += x[i] * y[j];
      }
    }
    return out;
  };

  std::vector<StructureEntry<K>> entries;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const Vec<K> prod = binv * group_mul(b.col(i), b.col(j));
      for (std::size_t k = 0; k < 6; ++k)
        if (!prod[k].is_zero()) entries.push_back({i, j, k, prod[k]});
    }

  Vec<K> unit_group(6, zero);
  unit_group[0] = zero.one();
  std::vector<std::string> labels = {"C[(3)][1,1]",   "C[(2,1)][1,1]",
                                     "C[(2,1)][1,2]", "C[(2,1)][2,1]",
                                     "C[(2,1)][2,2]", "C[(1^3)][1,1]"};
  AlgebraDescriptor<K> alg(fs, std::move(labels), std::move(entries),
                           binv * unit_group);

  Matrix<K> inv_group(6, 6, zero);  // g -> g^{-1} on the group basis
  for (std::size_t g = 0; g < 6; ++g)
    inv_group.at(tab.inverse[g], g) = zero.one();
  CellPoset poset({"(3)", "(2,1)", "(1^3)"}, {{0, 1}, {1, 2}});
  std::vector<CellIndex> labeling = {{0, 0, 0}, {1, 0, 0}, {1, 0, 1},
                                     {1, 1, 0}, {1, 1, 1}, {2, 0, 0}};
  CellDatum<K> cd(std::move(poset), {1, 2, 1}, std::move(labeling),
                  binv * inv_group * b);

  // coefficient-of-identity trace: group coordinate 0 of each basis element
  TraceForm<K> tau(alg, b.row(0));

  Presentation<K> pres{{"1", "s1", "s2", "s1s2", "s2s1", "s1s2s1"}, b};
  return WorkbenchTriple<K>{std::move(name), std::move(alg), std::move(cd),
                            std::move(tau), std::move(pres), std::nullopt};
}

// The worked S3 example: GF(3) (the interesting case) or Q (the control),
// with the expected dual basis and dimensions attached as a fixture.
template <class K>
WorkbenchTriple<K> gen_paper_s3(const FieldSpec& fs) {
  const bool gf3 = !fs.is_rationals() && fs.modulus() == 3;
  if (!gf3 && !fs.is_rationals())
    throw UnsupportedField("paper-s3: field must be GF(3) or Q, got " +
                           fs.str());
  auto triple = gen_group_s3<K>(fs, "paper-s3");
  const K zero = zero_of<K>(fs);
  ExpectedResults<K> exp;
  if (gf3) {
    exp.dim_rad = 4;
    exp.dim_ideal = 4;
    exp.semisimple = false;
    Matrix<K> duals(6, 6, zero);
    for (std::size_t g = 0; g < 6; ++g)
      for (std::size_t f = 0; f < 6; ++f)
        duals.at(g, f) = zero.from_int(s3::kDualBasis[g][f]);
    exp.dual_in_presentation = std::move(duals);
  } else {
    exp.dim_rad = 0;
    exp.dim_ideal = 0;
    exp.semisimple = true;
  }
  triple.expected = std::move(exp);
  return triple;
}

// Full matrix algebra M_n on the matrix units, one cell, i = transpose,
// tau = matrix trace.
template <class K>
WorkbenchTriple<K> gen_matrix_algebra(const FieldSpec& fs, std::size_t n) {
  if (n == 0) throw ValidationError("matrix algebra: n must be >= 1");
  const K zero = zero_of<K>(fs);
  const std::size_t dim = n * n;
  auto flat = [n](std::size_t s, std::size_t t) { return s * n + t; };

  std::vector<StructureEntry<K>> entries;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t v = 0; v < n; ++v)
        entries.push_back({flat(s, t), flat(t, v), flat(s, v), zero.one()});

  std::vector<std::string> labels;
  labels.reserve(dim);
  std::vector<CellIndex> labeling;
  labeling.reserve(dim);
  Vec<K> unit(dim, zero);
  Vec<K> tau_row(dim, zero);
  Matrix<K> invol(dim, dim, zero);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      labels.push_back("E[" + std::to_string(s + 1) + "," +
                       std::to_string(t + 1) + "]");
      labeling.push_back({0, s, t});
      invol.at(flat(t, s), flat(s, t)) = zero.one();
      if (s == t) {
        unit[flat(s, t)] = zero.one();
        tau_row[flat(s, t)] = zero.one();
      }
    }

  AlgebraDescriptor<K> alg(fs, std::move(labels), std::move(entries),
                           std::move(unit));
  CellPoset poset({"nat"}, {});
  CellDatum<K> cd(std::move(poset), {n}, std::move(labeling),
                  std::move(invol));
  TraceForm<K> tau(alg, std::move(tau_row));
  return WorkbenchTriple<K>{"matrix:" + std::to_string(n), std::move(alg),
                            std::move(cd), std::move(tau), std::nullopt,
                            std::nullopt};
}

// K[x]/(x^2) with cells low < top, C[low] = x, C[top] = 1, i = id,
// tau(a + b x) = b. The smallest non-semisimple symmetric cellular algebra.
template <class K>
WorkbenchTriple<K> gen_dual_numbers(const FieldSpec& fs) {
  const K zero = zero_of<K>(fs);
  const K one = zero.one();
  // basis order: x, 1
  std::vector<StructureEntry<K>> entries = {
      {0, 1, 0, one}, {1, 0, 0, one}, {1, 1, 1, one}};
  Vec<K> unit = {zero, one};
  AlgebraDescriptor<K> alg(fs, {"x", "1"}, std::move(entries),
                           std::move(unit));
  CellPoset poset({"low", "top"}, {{0, 1}});
  CellDatum<K> cd(std::move(poset), {1, 1}, {{0, 0, 0}, {1, 0, 0}},
                  Matrix<K>::identity(2, zero));
  TraceForm<K> tau(alg, {one, zero});
  return WorkbenchTriple<K>{"dual-numbers", std::move(alg), std::move(cd),
                            std::move(tau), std::nullopt, std::nullopt};
}

// Componentwise direct sum: block structure constants, disjoint-union poset
// with labels prefixed by the component ordinal, concatenated traces.
template <class K>
WorkbenchTriple<K> gen_direct_sum(std::vector<WorkbenchTriple<K>> parts) {
  if (parts.empty())
    throw ValidationError("direct sum: at least one component required");
  if (parts.size() == 1) return std::move(parts[0]);
  const FieldSpec fs = parts[0].alg.field();
  for (const auto& p : parts)
    if (p.alg.field() != fs)
      throw FieldMismatch("direct sum: components over different fields");
  const K zero = zero_of<K>(fs);

  std::size_t dim = 0, cells = 0;
  for (const auto& p : parts) {
    dim += p.alg.dim();
    cells += p.cd.cell_count();
  }

  std::vector<std::string> labels;
  std::vector<StructureEntry<K>> entries;
  Vec<K> unit(dim, zero);
  Vec<K> tau_row(dim, zero);
  Matrix<K> invol(dim, dim, zero);
  std::vector<std::string> poset_labels;
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  std::vector<std::size_t> m_sizes;
  std::vector<CellIndex> labeling;
  std::string name = "direct-sum:";

  std::size_t base = 0, cell_base = 0;
  for (std::size_t c = 0; c < parts.size(); ++c) {
    const auto& p = parts[c];
    const std::string prefix = std::to_string(c) + ":";
    if (c) name += "+";
    name += p.name;
    for (const auto& l : p.alg.basis_labels()) labels.push_back(prefix + l);
    for (const auto& e : p.alg.structure())
      entries.push_back({base + e.i, base + e.j, base + e.k, e.value});
    for (std::size_t i = 0; i < p.alg.dim(); ++i) {
      unit[base + i] = p.alg.unit()[i];
      tau_row[base + i] = p.tau.row()[i];
      for (std::size_t j = 0; j < p.alg.dim(); ++j)
        invol.at(base + i, base + j) = p.cd.involution().at(i, j);
    }
    for (const auto& l : p.cd.poset().labels())
      poset_labels.push_back(prefix + l);
    for (const auto& [a, bb] : p.cd.poset().relations())
      relations.emplace_back(cell_base + a, cell_base + bb);
    for (std::size_t l = 0; l < p.cd.cell_count(); ++l)
      m_sizes.push_back(p.cd.m_size(l));
    for (const auto& ci : p.cd.labeling())
      labeling.push_back({cell_base + ci.lambda, ci.s, ci.t});
    base += p.alg.dim();
    cell_base += p.cd.cell_count();
  }

  AlgebraDescriptor<K> alg(fs, std::move(labels), std::move(entries),
                           std::move(unit));
  CellPoset poset(std::move(poset_labels), std::move(relations));
  CellDatum<K> cd(std::move(poset), std::move(m_sizes), std::move(labeling),
                  std::move(invol));
  TraceForm<K> tau(alg, std::move(tau_row));
  return WorkbenchTriple<K>{std::move(name), std::move(alg), std::move(cd),
                            std::move(tau), std::nullopt, std::nullopt};
}

// "paper-s3", "group-s3", "matrix:<n>", "dual-numbers",
// "direct-sum:<a>+<b>+..."
template <class K>
WorkbenchTriple<K> make_generator(const std::string& spec,
                                  const FieldSpec& fs) {
  if (spec == "paper-s3") return gen_paper_s3<K>(fs);
  if (spec == "group-s3") return gen_group_s3<K>(fs);
  if (spec == "dual-numbers") return gen_dual_numbers<K>(fs);
  if (spec.rfind("matrix:", 0) == 0) {
    const std::string num = spec.substr(7);
    std::size_t n = 0;
    for (char ch : num) {
      if (ch < '0' || ch > '9')
        throw ParseError("bad generator spec: '" + spec + "'");
      n = n * 10 + static_cast<std::size_t>(ch - '0');
    }
    return gen_matrix_algebra<K>(fs, n);
  }
  if (spec.rfind("direct-sum:", 0) == 0) {
    std::vector<WorkbenchTriple<K>> parts;
    std::string rest = spec.substr(11);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const std::size_t next = rest.find('+', pos);
      const std::string part = rest.substr(
          pos, next == std::string::npos ? std::string::npos : next - pos);
      if (part.empty() || part.rfind("direct-sum:", 0) == 0)
        throw ParseError("bad generator spec: '" + spec + "'");
      parts.push_back(make_generator<K>(part, fs));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return gen_direct_sum<K>(std::move(parts));
  }
  throw ParseError("unknown generator: '" + spec + "'");
}

// The field a generator name is most naturally read over when the user gives
// none: GF(3) for the worked example, Q otherwise.
inline FieldSpec default_field_for(const std::string& spec) {
  if (spec == "paper-s3" || spec.rfind("direct-sum:paper-s3", 0) == 0)
    return FieldSpec::gf(3);
  return FieldSpec::rationals();
}

}  // namespace cellalg
