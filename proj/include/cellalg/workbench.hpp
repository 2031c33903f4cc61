#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cellalg/errors.hpp"
#include "cellalg/generators.hpp"
#include "cellalg/trace.hpp"

namespace cellalg {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kWorkbenchFormat = "cellalg-workbench";
inline constexpr int kWorkbenchVersion = 1;

namespace detail {

template <class K>
ordered_json matrix_to_json(const Matrix<K>& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class K>
Matrix<K> matrix_from_json(const ordered_json& j, const FieldSpec& fs,
                           const std::string& what) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw ParseError(what + ": expected a non-empty array of rows");
  const std::size_t rows = j.size(), cols = j[0].size();
  Matrix<K> m(rows, cols, zero_of<K>(fs));
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw ParseError(what + ": ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(i, c) = parse_scalar<K>(j[i][c].template get<std::string>(), fs);
  }
  return m;
}

template <class K>
ordered_json vec_to_json(const Vec<K>& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

template <class K>
Vec<K> vec_from_json(const ordered_json& j, const FieldSpec& fs,
                     const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array");
  Vec<K> v;
  v.reserve(j.size());
  for (const auto& x : j)
    v.push_back(parse_scalar<K>(x.template get<std::string>(), fs));
  return v;
}

}  // namespace detail

template <class K>
ordered_json workbench_to_json(const WorkbenchTriple<K>& t) {
  ordered_json j;
  j["format"] = kWorkbenchFormat;
  j["version"] = kWorkbenchVersion;
  j["name"] = t.name;
  if (t.alg.field().is_rationals()) {
    j["field"] = {{"kind", "rationals"}};
  } else {
    j["field"] = {{"kind", "gf"}, {"modulus", t.alg.field().modulus()}};
  }
  j["dim"] = t.alg.dim();
  j["basis_labels"] = t.alg.basis_labels();
  j["unit"] = detail::vec_to_json(t.alg.unit());
  ordered_json structure = ordered_json::array();
  for (const auto& e : t.alg.structure())
    structure.push_back({e.i, e.j, e.k, e.value.str()});
  j["structure"] = std::move(structure);
  j["poset"] = {{"labels", t.cd.poset().labels()},
                {"relations", t.cd.poset().relations()}};
  j["m_sizes"] = t.cd.m_sizes();
  ordered_json labeling = ordered_json::array();
  for (const auto& ci : t.cd.labeling())
    labeling.push_back({ci.lambda, ci.s, ci.t});
  j["labeling"] = std::move(labeling);
  j["involution"] = detail::matrix_to_json(t.cd.involution());
  j["trace"] = detail::vec_to_json(t.tau.row());
  if (t.presentation) {
    j["presentation"] = {
        {"labels", t.presentation->labels},
        {"basis_columns", detail::matrix_to_json(t.presentation->basis_columns)}};
  }
  if (t.expected) {
    ordered_json e;
    if (t.expected->dim_rad) e["dim_rad"] = *t.expected->dim_rad;
    if (t.expected->dim_ideal) e["dim_ideal"] = *t.expected->dim_ideal;
    if (t.expected->semisimple) e["semisimple"] = *t.expected->semisimple;
    if (t.expected->dual_in_presentation)
      e["dual_in_presentation"] =
          detail::matrix_to_json(*t.expected->dual_in_presentation);
    j["expected"] = std::move(e);
  }
  return j;
}

inline FieldSpec workbench_field(const ordered_json& j) {
  try {
    const auto& f = j.at("field");
    const std::string kind = f.at("kind").get<std::string>();
    if (kind == "rationals") return FieldSpec::rationals();
    if (kind == "gf") return FieldSpec::gf(f.at("modulus").get<std::uint64_t>());
    throw ParseError("field.kind must be 'rationals' or 'gf'");
  } catch (const UnsupportedField& e) {
    throw ParseError(std::string("field: ") + e.what());
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("field: ") + e.what());
  }
}

// Rebuild the triple and re-run every validation. A trace row may be absent
// in hand-written files; callers that can fall back to a sampled trace pass
// a seed.
template <class K>
WorkbenchTriple<K> workbench_from_json(
    const ordered_json& j,
    std::optional<std::uint64_t> random_trace_seed = std::nullopt) {
  FieldSpec fs = workbench_field(j);
  try {
    if (j.at("format").get<std::string>() != kWorkbenchFormat)
      throw ParseError("unrecognized format tag");
    if (j.at("version").get<int>() != kWorkbenchVersion)
      throw ParseError("unsupported version");

    const std::size_t dim = j.at("dim").get<std::size_t>();
    auto labels = j.at("basis_labels").get<std::vector<std::string>>();
    if (labels.size() != dim)
      throw ParseError("basis_labels length != dim");
    std::vector<StructureEntry<K>> entries;
    for (const auto& e : j.at("structure")) {
      if (!e.is_array() || e.size() != 4)
        throw ParseError("structure entries must be [i, j, k, value]");
      entries.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(),
                         e[2].get<std::size_t>(),
                         parse_scalar<K>(e[3].get<std::string>(), fs)});
    }
    Vec<K> unit = detail::vec_from_json<K>(j.at("unit"), fs, "unit");
    AlgebraDescriptor<K> alg(fs, std::move(labels), std::move(entries),
                             std::move(unit));

    const auto& jp = j.at("poset");
    CellPoset poset(
        jp.at("labels").get<std::vector<std::string>>(),
        jp.at("relations")
            .get<std::vector<std::pair<std::size_t, std::size_t>>>());
    auto m_sizes = j.at("m_sizes").get<std::vector<std::size_t>>();
    std::vector<CellIndex> labeling;
    for (const auto& l : j.at("labeling")) {
      if (!l.is_array() || l.size() != 3)
        throw ParseError("labeling entries must be [lambda, s, t]");
      labeling.push_back({l[0].get<std::size_t>(), l[1].get<std::size_t>(),
                          l[2].get<std::size_t>()});
    }
    Matrix<K> invol =
        detail::matrix_from_json<K>(j.at("involution"), fs, "involution");
    CellDatum<K> cd(std::move(poset), std::move(m_sizes), std::move(labeling),
                    std::move(invol));

    validate_algebra(alg).require("algebra validation");
    std::optional<TraceForm<K>> tau;
    if (j.contains("trace")) {
      tau.emplace(alg, detail::vec_from_json<K>(j.at("trace"), fs, "trace"));
      validate_symmetrizing_trace(alg, *tau).require("trace validation");
    } else if (random_trace_seed) {
      tau.emplace(random_symmetrizing_trace(alg, *random_trace_seed));
    } else {
      throw ValidationError(
          "file has no trace row; rerun with --trace random:<seed>");
    }
    validate_cell_datum(alg, cd).require("cell datum validation");

    WorkbenchTriple<K> t{j.value("name", std::string("workbench")),
                         std::move(alg), std::move(cd), std::move(*tau),
                         std::nullopt, std::nullopt};
    if (j.contains("presentation")) {
      const auto& p = j.at("presentation");
      t.presentation = Presentation<K>{
          p.at("labels").get<std::vector<std::string>>(),
          detail::matrix_from_json<K>(p.at("basis_columns"), fs,
                                      "presentation")};
    }
    if (j.contains("expected")) {
      const auto& e = j.at("expected");
      ExpectedResults<K> exp;
      if (e.contains("dim_rad")) exp.dim_rad = e["dim_rad"].get<std::size_t>();
      if (e.contains("dim_ideal"))
        exp.dim_ideal = e["dim_ideal"].get<std::size_t>();
      if (e.contains("semisimple"))
        exp.semisimple = e["semisimple"].get<bool>();
      if (e.contains("dual_in_presentation"))
        exp.dual_in_presentation = detail::matrix_from_json<K>(
            e["dual_in_presentation"], fs, "expected.dual_in_presentation");
      t.expected = std::move(exp);
    }
    return t;
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("workbench: ") + e.what());
  }
}

inline ordered_json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return ordered_json::parse(in);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

template <class K>
WorkbenchTriple<K> load_workbench(
    const std::string& path,
    std::optional<std::uint64_t> random_trace_seed = std::nullopt) {
  return workbench_from_json<K>(read_json_file(path), random_trace_seed);
}

template <class K>
void save_workbench(const WorkbenchTriple<K>& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << workbench_to_json(t).dump(2) << "\n";
}

}  // namespace cellalg
