// Command-line front end: validation, per-cell reports, the dual basis, the
// nilpotent ideal I, the Jacobson radical, the semisimplicity battery, and
// the full selftest over the built-in instances.
//
// Exit codes: 0 all requested assertions passed, 1 a validation or assertion
// failed, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <cellalg/cellalg.hpp>

namespace {

using cellalg::ordered_json;

struct Options {
  std::string command;
  std::string file;
  std::string gen;
  std::string field;
  std::string trace = "canonical";
  std::string format = "text";
  std::size_t lemma17_cap = 2000;
  std::size_t traces = 5;
};

std::optional<std::uint64_t> random_trace_seed(const std::string& trace) {
  if (trace == "canonical") return std::nullopt;
  if (trace.rfind("random:", 0) == 0) {
    const std::string digits = trace.substr(7);
    if (digits.empty()) throw cellalg::ParseError("--trace random:<seed>");
    std::uint64_t seed = 0;
    for (char c : digits) {
      if (c < '0' || c > '9')
        throw cellalg::ParseError("bad --trace seed: '" + digits + "'");
      seed = seed * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return seed;
  }
  throw cellalg::ParseError("--trace must be 'canonical' or 'random:<seed>'");
}

void emit(const Options& opt, const ordered_json& structured,
          const std::string& text) {
  if (opt.format == "structured")
    std::cout << structured.dump(2) << "\n";
  else
    std::cout << text;
}

ordered_json checks_json(const cellalg::Report& rep) {
  ordered_json arr = ordered_json::array();
  for (const auto& it : rep.items()) {
    ordered_json e;
    e["name"] = it.name;
    e["passed"] = it.passed;
    if (!it.witness.empty()) e["witness"] = it.witness;
    arr.push_back(std::move(e));
  }
  return arr;
}

template <class K>
ordered_json subspace_json(const cellalg::SubspaceBasis<K>& s) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (const auto& x : s.basis_vector(i)) row.push_back(x.str());
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class K>
std::string coords_str(const cellalg::Vec<K>& v,
                       const std::vector<std::string>& labels) {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) out += " + ";
    first = false;
    out += "(" + v[i].str() + ")*" + labels[i];
  }
  return first ? "0" : out;
}

// Everything the subcommands consume, computed once.
template <class K>
struct Pipeline {
  cellalg::WorkbenchTriple<K> t;
  cellalg::DualCellBasis<K> dcb;
  std::vector<cellalg::GramData<K>> grams;
  std::vector<cellalg::DualGramData<K>> dgrams;

  explicit Pipeline(cellalg::WorkbenchTriple<K> triple)
      : t(std::move(triple)), dcb(t.alg, t.cd, t.tau),
        grams(cellalg::all_gram_data(t.alg, t.cd)),
        dgrams(cellalg::all_dual_gram_data(t.alg, t.cd, dcb, grams)) {}
};

template <class K>
ordered_json header_json(const cellalg::WorkbenchTriple<K>& t,
                         const char* what) {
  ordered_json j;
  j["format"] = std::string("cellalg-") + what;
  j["version"] = 1;
  j["instance"] = t.name;
  j["field"] = t.alg.field().str();
  return j;
}

template <class K>
int cmd_validate(const Options& opt, const cellalg::WorkbenchTriple<K>& t) {
  cellalg::Report rep;
  rep.merge(cellalg::validate_algebra(t.alg));
  rep.merge(cellalg::validate_symmetrizing_trace(t.alg, t.tau));
  rep.merge(cellalg::validate_cell_datum(t.alg, t.cd));
  ordered_json j = header_json(t, "validation");
  j["checks"] = checks_json(rep);
  j["passed"] = rep.passed();
  emit(opt, j, rep.summary());
  return rep.passed() ? 0 : 1;
}

template <class K>
int cmd_report(const Options& opt, Pipeline<K>& p) {
  const auto& cd = p.t.cd;
  const auto strata = cellalg::classify_strata(cd, p.grams);
  const auto ideal =
      cellalg::build_ideal_I(p.t.alg, cd, p.dcb, p.grams, p.dgrams);
  const auto rad = cellalg::jacobson_radical(p.t.alg, cd, p.grams);
  const auto battery =
      cellalg::semisimplicity_battery(p.t.alg, cd, p.dcb, p.grams, p.dgrams);

  ordered_json j = header_json(p.t, "report");
  ordered_json cells = ordered_json::array();
  std::string text = "cell            n  rank G  dim L  k          stratum\n";
  for (std::size_t l = 0; l < cd.cell_count(); ++l) {
    const auto& g = p.grams[l];
    std::string stratum;
    if (cellalg::Stratification::member(strata.lambda1, l))
      stratum = "Lambda1";
    else if (cellalg::Stratification::member(strata.lambda2, l))
      stratum = "Lambda2";
    else
      stratum = "Lambda3";
    const bool in4 = cellalg::Stratification::member(ideal.lambda4, l);
    if (in4) stratum += "+Lambda4";
    ordered_json c;
    c["lambda"] = cd.poset().label(l);
    c["n"] = cd.m_size(l);
    c["gram_rank"] = g.gram_rank;
    if (g.phi_nonzero())
      c["dim_simple"] = g.gram_rank;
    else
      c["dim_simple"] = nullptr;
    c["k"] = p.dgrams[l].k.str();
    c["stratum"] = stratum;
    cells.push_back(std::move(c));
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-14s %2zu  %6zu  %5s  %-9s  %s\n",
                  cd.poset().label(l).c_str(), cd.m_size(l), g.gram_rank,
                  g.phi_nonzero() ? std::to_string(g.gram_rank).c_str() : "-",
                  p.dgrams[l].k.str().c_str(), stratum.c_str());
    text += buf;
  }
  j["cells"] = std::move(cells);
  j["dim"] = p.t.alg.dim();
  j["dim_rad"] = rad.dim();
  j["dim_ideal"] = ideal.dim();
  j["ideal_equals_radical"] = (ideal.total == rad);
  j["semisimple"] = battery.verdict;
  text += "dim A = " + std::to_string(p.t.alg.dim()) +
          ", dim rad A = " + std::to_string(rad.dim()) +
          ", dim I = " + std::to_string(ideal.dim()) +
          ", I == rad A: " + (ideal.total == rad ? "yes" : "no") +
          ", semisimple: " + (battery.verdict ? "yes" : "no") + "\n";

  bool expected_ok = true;
  if (p.t.expected) {
    const auto& e = *p.t.expected;
    if (e.dim_rad && rad.dim() != *e.dim_rad) expected_ok = false;
    if (e.dim_ideal && ideal.dim() != *e.dim_ideal) expected_ok = false;
    if (e.semisimple && battery.verdict != *e.semisimple) expected_ok = false;
    j["expected_match"] = expected_ok;
    text += std::string("expected-results block: ") +
            (expected_ok ? "match" : "MISMATCH") + "\n";
  }
  emit(opt, j, text);
  return expected_ok ? 0 : 1;
}

template <class K>
int cmd_dualbasis(const Options& opt, Pipeline<K>& p) {
  const auto& cd = p.t.cd;
  ordered_json j = header_json(p.t, "dualbasis");
  ordered_json arr = ordered_json::array();
  std::string text;
  for (std::size_t f = 0; f < p.t.alg.dim(); ++f) {
    ordered_json e;
    e["label"] = cd.display(f, "D");
    ordered_json coords = ordered_json::array();
    for (const auto& x : p.dcb.at_flat(f)) coords.push_back(x.str());
    e["coords"] = std::move(coords);
    text += cd.display(f, "D") + " = " +
            coords_str(p.dcb.at_flat(f), p.t.alg.basis_labels());
    if (p.t.presentation) {
      const auto pres = p.t.presentation->coords(p.dcb.at_flat(f));
      ordered_json pc = ordered_json::array();
      for (const auto& x : pres) pc.push_back(x.str());
      e["presentation"] = std::move(pc);
      text += "  =  " + coords_str(pres, p.t.presentation->labels);
    }
    arr.push_back(std::move(e));
    text += "\n";
  }
  j["elements"] = std::move(arr);
  emit(opt, j, text);
  return 0;
}

template <class K>
int cmd_ideal(const Options& opt, Pipeline<K>& p) {
  const auto& cd = p.t.cd;
  const auto ideal =
      cellalg::build_ideal_I(p.t.alg, cd, p.dcb, p.grams, p.dgrams);
  ordered_json j = header_json(p.t, "ideal");
  ordered_json per = ordered_json::array();
  std::string text;
  for (std::size_t l = 0; l < cd.cell_count(); ++l) {
    ordered_json c;
    c["lambda"] = cd.poset().label(l);
    c["k"] = p.dgrams[l].k.str();
    c["dim_CD"] = ideal.ideal_c[l].dim();
    c["dim_DC"] = ideal.ideal_d[l].dim();
    c["included"] = p.dgrams[l].k.is_zero();
    per.push_back(std::move(c));
    text += cd.poset().label(l) + ": k = " + p.dgrams[l].k.str() +
            ", dim I^lambda = " + std::to_string(ideal.ideal_c[l].dim()) +
            ", dim I_D^lambda = " + std::to_string(ideal.ideal_d[l].dim()) +
            (p.dgrams[l].k.is_zero() ? "  (summed into I)" : "") + "\n";
  }
  ordered_json l4 = ordered_json::array();
  for (auto l : ideal.lambda4) l4.push_back(cd.poset().label(l));
  j["per_cell"] = std::move(per);
  j["lambda4"] = std::move(l4);
  j["dim"] = ideal.dim();
  j["basis"] = subspace_json(ideal.total);
  text += "dim I = " + std::to_string(ideal.dim()) + "\n";
  for (std::size_t i = 0; i < ideal.total.dim(); ++i)
    text += "  " +
            coords_str(ideal.total.basis_vector(i), p.t.alg.basis_labels()) +
            "\n";
  emit(opt, j, text);
  return 0;
}

template <class K>
int cmd_radical(const Options& opt, Pipeline<K>& p) {
  const auto rad = cellalg::jacobson_radical(p.t.alg, p.t.cd, p.grams);
  ordered_json j = header_json(p.t, "radical");
  j["dim"] = rad.dim();
  j["basis"] = subspace_json(rad);
  std::string text = "dim rad A = " + std::to_string(rad.dim()) + "\n";
  for (std::size_t i = 0; i < rad.dim(); ++i)
    text +=
        "  " + coords_str(rad.basis_vector(i), p.t.alg.basis_labels()) + "\n";
  emit(opt, j, text);
  return 0;
}

template <class K>
int cmd_semisimple(const Options& opt, Pipeline<K>& p) {
  const auto battery = cellalg::semisimplicity_battery(p.t.alg, p.t.cd, p.dcb,
                                                       p.grams, p.dgrams);
  ordered_json j = header_json(p.t, "semisimple");
  j["flags"] = {{"rad_zero", battery.rad_zero},
                {"k_all_nonzero", battery.k_all_nonzero},
                {"cd_full_rank", battery.cd_full_rank},
                {"square_exists", battery.square_exists},
                {"square_all", battery.square_all}};
  j["verdict"] = battery.verdict;
  std::string text;
  text += std::string("(1) rad A = 0:                      ") +
          (battery.rad_zero ? "yes" : "no") + "\n";
  text += std::string("(2) all k != 0:                     ") +
          (battery.k_all_nonzero ? "yes" : "no") + "\n";
  text += std::string("(3) C[S,T] D[T,T] is a basis:       ") +
          (battery.cd_full_rank ? "yes" : "no") + "\n";
  text += std::string("(4) each cell has a nonzero square: ") +
          (battery.square_exists ? "yes" : "no") + "\n";
  text += std::string("(5) every square is nonzero:        ") +
          (battery.square_all ? "yes" : "no") + "\n";
  text += std::string("verdict: ") +
          (battery.verdict ? "semisimple" : "not semisimple") + "\n";
  emit(opt, j, text);
  return 0;
}

int cmd_selftest(const Options& opt) {
  cellalg::SelftestOptions sopt;
  sopt.quad_tuple_cap = opt.lemma17_cap;
  sopt.trace_samples = opt.traces;
  const auto rep = cellalg::run_selftest(sopt);
  ordered_json j;
  j["format"] = "cellalg-selftest";
  j["version"] = 1;
  j["checks"] = checks_json(rep);
  j["passed"] = rep.passed();
  std::string text = rep.summary();
  text += std::to_string(rep.items().size()) + " checks, " +
          std::to_string(rep.failure_count()) + " failures\n";
  emit(opt, j, text);
  return rep.passed() ? 0 : 1;
}

template <class K>
int dispatch(const Options& opt, cellalg::WorkbenchTriple<K> triple) {
  if (const auto seed = random_trace_seed(opt.trace)) {
    triple.tau = cellalg::random_symmetrizing_trace(triple.alg, *seed);
    triple.expected.reset();  // fixtures are tied to the canonical trace
  }
  if (opt.command == "validate") return cmd_validate(opt, triple);
  Pipeline<K> p(std::move(triple));
  if (opt.command == "report") return cmd_report(opt, p);
  if (opt.command == "dualbasis") return cmd_dualbasis(opt, p);
  if (opt.command == "ideal") return cmd_ideal(opt, p);
  if (opt.command == "radical") return cmd_radical(opt, p);
  if (opt.command == "semisimple") return cmd_semisimple(opt, p);
  throw cellalg::Error("unhandled command " + opt.command);
}

int run(const Options& opt) {
  if (opt.command == "selftest") return cmd_selftest(opt);

  if (opt.file.empty() == opt.gen.empty()) {
    std::cerr << "error: exactly one of <file> or --gen is required\n";
    return 2;
  }
  if (!opt.file.empty()) {
    if (!opt.field.empty()) {
      std::cerr << "error: --field applies to --gen; files carry their own "
                   "field\n";
      return 2;
    }
    const auto j = cellalg::read_json_file(opt.file);
    const auto fs = cellalg::workbench_field(j);
    return cellalg::with_field(fs, [&](auto zero) {
      using K = decltype(zero);
      return dispatch<K>(
          opt, cellalg::workbench_from_json<K>(j, random_trace_seed(opt.trace)));
    });
  }
  const auto fs = opt.field.empty() ? cellalg::default_field_for(opt.gen)
                                    : cellalg::FieldSpec::parse(opt.field);
  return cellalg::with_field(fs, [&](auto zero) {
    using K = decltype(zero);
    return dispatch<K>(opt, cellalg::make_generator<K>(opt.gen, fs));
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric cellular algebra workbench"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool takes_source) {
    if (takes_source) {
      sub->add_option("file", opt.file, "workbench file");
      sub->add_option("--gen", opt.gen,
                      "built-in generator: paper-s3, group-s3, matrix:<n>, "
                      "dual-numbers, direct-sum:<a>+<b>");
      sub->add_option("--field", opt.field, "Q or gf:<p> (with --gen)");
      sub->add_option("--trace", opt.trace, "canonical or random:<seed>");
    }
    sub->add_option("--format", opt.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--lemma17-cap", opt.lemma17_cap,
                    "cap on sampled tuples in the quadruple-product check");
    sub->add_option("--traces", opt.traces,
                    "number of random traces for independence checks");
  };

  for (const char* name : {"validate", "report", "dualbasis", "ideal",
                           "radical", "semisimple"}) {
    auto* sub = app.add_subcommand(
        name, std::string("run the ") + name + " command");
    add_common(sub, true);
    sub->callback([&, name] { opt.command = name; });
  }
  auto* st = app.add_subcommand("selftest",
                                "run every invariant suite on the built-ins");
  add_common(st, false);
  st->callback([&] { opt.command = "selftest"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    return run(opt);
  } catch (const cellalg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cellalg::UnsupportedField& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cellalg::ValidationError& e) {
    std::cerr << "validation failed: " << e.what() << "\n";
    return 1;
  } catch (const cellalg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
