#pragma once

/// Command implementations behind the zeroalpha binary.
///
/// Each cmd_* returns the finished report as JSON (field order fixed, every
/// rational rendered exactly as "p/q", arbitrary-size integers as decimal
/// strings) so both the binary and the tests can call them directly.  Library
/// errors propagate to the caller; the binary maps parameter-type errors to
/// exit code 2 and everything else to 1.  Reports are deterministic except
/// for the trailing elapsed_ms field.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "zeroalpha/bounds.hpp"
#include "zeroalpha/codes.hpp"
#include "zeroalpha/construction.hpp"
#include "zeroalpha/errors.hpp"
#include "zeroalpha/graphs.hpp"
#include "zeroalpha/optimality.hpp"
#include "zeroalpha/spectra.hpp"

namespace za {

using Json = nlohmann::ordered_json;

struct CliOptions {
  std::optional<KasamiParams> kasami;
  std::optional<std::string> out_dir;
  bool deep = false;
};

// "q=<q>,variant=<i|ii>[,j=<j>,m=<m>]"
inline KasamiParams parse_kasami_spec(const std::string& spec) {
  KasamiParams kp{0, 0, 0, 0};
  bool have_q = false, have_variant = false;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', pos), spec.size());
    const std::string part = spec.substr(pos, comma - pos);
    pos = comma + 1;
    const std::size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw ParameterError("kasami spec needs key=value parts: " + spec);
    const std::string key = part.substr(0, eq);
    const std::string value = part.substr(eq + 1);
    if (key == "variant") {
      if (value == "i") kp.variant = 1;
      else if (value == "ii") kp.variant = 2;
      else throw ParameterError("kasami variant must be i or ii, got " + value);
      have_variant = true;
      continue;
    }
    int number = 0;
    try {
      std::size_t used = 0;
      number = std::stoi(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ParameterError("kasami spec value for " + key + " is not a number: " + value);
    }
    if (key == "q") { kp.q = number; have_q = true; }
    else if (key == "j") kp.j = number;
    else if (key == "m") kp.m = number;
    else throw ParameterError("unknown kasami spec key: " + key);
  }
  if (!have_q || !have_variant)
    throw ParameterError("kasami spec needs at least q=<q>,variant=<i|ii>");
  return kp;
}

inline Field parse_field(const std::string& name) {
  if (name == "real") return Field::real;
  if (name == "complex") return Field::complex;
  throw ParameterError("field must be real or complex, got " + name);
}

inline std::string field_letter(Field f) { return f == Field::real ? "R" : "C"; }

inline Family family_by_name(const std::string& name, const CliOptions& opts) {
  if (name == "8-cycle") return build_8_cycle();
  if (name == "4-cube") return build_4_cube();
  if (name == "folded-8-cube") return build_folded_8_cube();
  if (name == "vls") return build_vls();
  if (name == "golay") return build_golay();
  if (name == "kasami") {
    if (!opts.kasami)
      throw ParameterError("kasami needs --kasami q=<q>,variant=<i|ii>[,j=<j>,m=<m>]");
    return build_kasami(*opts.kasami);
  }
  throw ParameterError("unknown graph name: " + name);
}

inline std::string family_slug(const std::string& name, const CliOptions& opts) {
  if (name != "kasami" || !opts.kasami) return name;
  std::string s = "kasami-q" + std::to_string(opts.kasami->q);
  s += opts.kasami->variant == 1 ? "-i-j" + std::to_string(opts.kasami->j) +
                                       "-m" + std::to_string(opts.kasami->m)
                                 : "-ii";
  return s;
}

namespace detail {

class Stopwatch {
 public:
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline Json graph_json(const BipartiteGraph& bg, const IntersectionArray& ia,
                       const Spectrum& sp) {
  Json j;
  j["vertices"] = static_cast<std::int64_t>(bg.vertex_count());
  j["k"] = ia.k;
  j["c2"] = ia.c2;
  j["c3"] = ia.c3;
  j["theta1_squared"] = sp.theta1_squared;
  return j;
}

inline Json set_json(const FlatVectorSet& s, const std::set<Rat>& angles) {
  Json j;
  j["n"] = static_cast<std::int64_t>(s.vectors.size());
  j["k"] = s.dim;
  j["e"] = s.root_order;
  j["field"] = is_real(s) ? "real" : "complex";
  Json a = Json::array();
  for (const Rat& r : angles) a.push_back(rat_str(r));
  j["angles"] = a;
  return j;
}

inline Json bounds_json(const BoundReport& r) {
  Json j;
  j["field"] = r.field == Field::real ? "real" : "complex";
  j["dgs"] = int_str(r.dgs);
  j["flat"] = int_str(r.flat);
  j["satisfied"] = r.satisfied;
  j["flat_tight"] = r.flat_tight;
  j["dgs_tight"] = r.dgs_tight;
  return j;
}

inline Json write_family_files(const std::string& slug, const BipartiteGraph& bg,
                               const FlatVectorSet& s, const Rat& alpha,
                               const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const fs::path adj = fs::path(out_dir) / (slug + "-adjacency.txt");
  const fs::path vec = fs::path(out_dir) / (slug + "-vectors.txt");
  {
    std::ofstream os(adj);
    if (!os) throw ParameterError("cannot write " + adj.string());
    write_adjacency(os, bg);
  }
  {
    std::ofstream os(vec);
    if (!os) throw ParameterError("cannot write " + vec.string());
    write_vectors(os, s, alpha);
  }
  Json j;
  j["adjacency"] = adj.string();
  j["vectors"] = vec.string();
  return j;
}

}  // namespace detail

inline Json cmd_build(const std::string& graph_name, const CliOptions& opts) {
  const detail::Stopwatch clock;
  const Family fam = family_by_name(graph_name, opts);

  const IntersectionArray ia = verify_distance_regular(fam.graph);
  const Spectrum sp = spectrum_from_array(ia);
  const auto [y, z] = default_base_pair(fam.graph);
  const FlatVectorSet s = godsil_roy(fam.graph, fam.action, y, z);

  const Rat alpha = sp.alpha();
  const std::set<Rat> angles = angle_set(s);
  const std::set<Rat> expected_angles = {Rat(0), alpha};
  if (angles != expected_angles)
    throw VerificationError("angle set differs from {0, theta1^2/k^2}",
                            static_cast<int>(ia.k), static_cast<int>(sp.theta1_squared));
  if (Int(s.vectors.size()) != class_size_from_array(ia))
    throw VerificationError("vector count differs from the colour class size",
                            static_cast<int>(s.vectors.size()), static_cast<int>(ia.k));

  const BoundReport bounds = evaluate_bounds(s);

  Json rep;
  rep["schema"] = 1;
  rep["command"] = "build";
  rep["parameters"] = Json{{"graph", family_slug(graph_name, opts)}, {"deep", opts.deep}};
  rep["graph"] = detail::graph_json(fam.graph, ia, sp);
  rep["set"] = detail::set_json(s, angles);
  rep["set"]["alpha"] = rat_str(alpha);
  rep["bounds"] = detail::bounds_json(bounds);
  rep["tight"] = Json{{"real_equation", real_tight(ia)}, {"complex_equation", complex_tight(ia)}};
  Json verification;
  verification["distance_regular"] = true;  // verify_distance_regular throws otherwise
  verification["angles_match"] = true;
  if (opts.deep) {
    std::pair<std::int32_t, std::int32_t> witness;
    if (!verify_spectral_identity(fam.graph.graph(), sp, &witness))
      throw VerificationError("annihilating polynomial identity failed", witness.first,
                              witness.second);
    verification["spectral_identity"] = true;
    const TensorRankReport t = tensor_rank_check(s);
    rep["tensor"] = Json{{"count", t.count},
                         {"reduced_dim", t.reduced_dim},
                         {"rank", t.rank},
                         {"independent", t.independent}};
  }
  rep["verification"] = verification;
  if (opts.out_dir)
    rep["exports"] = detail::write_family_files(family_slug(graph_name, opts), fam.graph, s,
                                                alpha, *opts.out_dir);
  rep["elapsed_ms"] = clock.ms();
  return rep;
}

inline Json cmd_search(std::int64_t max_k, Field field) {
  const detail::Stopwatch clock;
  const std::vector<TightnessReport> reports = search_tight(max_k, field);

  Json rep;
  rep["schema"] = 1;
  rep["command"] = "search";
  rep["parameters"] = Json{{"max_k", max_k},
                           {"field", field == Field::real ? "real" : "complex"}};
  Json rows = Json::array();
  for (const TightnessReport& r : reports) {
    Json row;
    row["k"] = r.array.k;
    row["c2"] = r.array.c2;
    row["c3"] = r.array.c3;
    row["theta1_squared"] = r.spectrum.theta1_squared;
    row["alpha"] = rat_str(r.alpha);
    row["class_size"] = int_str(r.class_size);
    row["realization"] = r.realization;
    row["angle_compatible"] = r.angle_compatible;
    rows.push_back(std::move(row));
  }
  rep["count"] = static_cast<std::int64_t>(reports.size());
  rep["rows"] = std::move(rows);
  rep["elapsed_ms"] = clock.ms();
  return rep;
}

struct Table1Row {
  std::string graph;
  std::int64_t k = 0;
  std::int64_t c2 = 0;
  std::int64_t c3 = 0;
  Rat alpha;
  Int n;
  Field field = Field::real;
};

inline std::vector<Table1Row> table1_expected() {
  return {
      {"4-cube", 4, 2, 3, make_rat(1, 4), Int(8), Field::real},
      {"folded-8-cube", 8, 2, 3, make_rat(1, 4), Int(64), Field::real},
      {"golay", 24, 2, 3, make_rat(1, 9), Int(2048), Field::real},
      {"8-cycle", 2, 1, 1, make_rat(1, 2), Int(4), Field::complex},
  };
}

// Builds the four bound-attaining families and checks every cell of each row
// (k, c2, c3, alpha, n, space) plus tightness.  Never throws on a mismatch:
// the report lists the offending cells and ok turns false.
inline Json cmd_table1(const CliOptions& opts,
                       const std::vector<Table1Row>* expected_override = nullptr) {
  const detail::Stopwatch clock;
  const std::vector<Table1Row> expected =
      expected_override ? *expected_override : table1_expected();

  Json rep;
  rep["schema"] = 1;
  rep["command"] = "table1";
  rep["parameters"] = Json{{"deep", opts.deep}};
  Json rows = Json::array();
  std::vector<std::string> mismatches;

  for (const Table1Row& want : expected) {
    const Family fam = family_by_name(want.graph, opts);
    const IntersectionArray ia = verify_distance_regular(fam.graph);
    const Spectrum sp = spectrum_from_array(ia);
    const auto [y, z] = default_base_pair(fam.graph);
    const FlatVectorSet s = godsil_roy(fam.graph, fam.action, y, z);
    const std::set<Rat> angles = angle_set(s);
    const BoundReport bounds = evaluate_bounds(s);

    auto cell = [&](const std::string& name, bool match) {
      if (!match) mismatches.push_back(want.graph + "." + name);
      return match;
    };
    Json row;
    row["graph"] = want.graph;
    row["k"] = Json{{"value", ia.k}, {"match", cell("k", ia.k == want.k)}};
    row["c2"] = Json{{"value", ia.c2}, {"match", cell("c2", ia.c2 == want.c2)}};
    row["c3"] = Json{{"value", ia.c3}, {"match", cell("c3", ia.c3 == want.c3)}};
    row["alpha"] = Json{{"value", rat_str(sp.alpha())},
                        {"match", cell("alpha", sp.alpha() == want.alpha)}};
    row["n"] = Json{{"value", static_cast<std::int64_t>(s.vectors.size())},
                    {"match", cell("n", Int(s.vectors.size()) == want.n)}};
    const std::string space =
        field_letter(bounds.field) + "^" + std::to_string(s.dim);
    const std::string want_space =
        field_letter(want.field) + "^" + std::to_string(want.k);
    row["space"] = Json{{"value", space}, {"match", cell("space", space == want_space)}};
    row["angles"] = Json{{"value", Json::array({rat_str(Rat(0)), rat_str(sp.alpha())})},
                         {"match", cell("angles", angles == std::set<Rat>{Rat(0), sp.alpha()})}};
    row["flat_bound"] = Json{{"value", int_str(bounds.flat)},
                             {"match", cell("flat_bound", bounds.flat_tight)}};
    if (opts.deep) {
      const TensorRankReport t = tensor_rank_check(s);
      row["tensor_rank"] = Json{{"value", t.rank}, {"match", cell("tensor_rank", t.independent)}};
    }
    rows.push_back(std::move(row));
  }

  rep["rows"] = std::move(rows);
  rep["mismatches"] = mismatches;
  rep["ok"] = mismatches.empty();
  rep["elapsed_ms"] = clock.ms();
  return rep;
}

inline Json cmd_export(const std::string& graph_name, const CliOptions& opts) {
  if (!opts.out_dir) throw ParameterError("export needs --out <dir>");
  Json rep = cmd_build(graph_name, opts);
  rep["command"] = "export";
  return rep;
}

}  // namespace za
