#pragma once

#include "json.hpp"

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "cocycle.hpp"
#include "error.hpp"
#include "group.hpp"
#include "gyro.hpp"
#include "invariants.hpp"
#include "mapping_groups.hpp"
#include "report.hpp"
#include "search.hpp"

#ifndef GYROLAB_VERSION
#define GYROLAB_VERSION "0.0.0"
#endif

namespace gyrolab {

using Json = nlohmann::ordered_json;

constexpr const char* kReportSchema = "gyrolab.report/1";
constexpr const char* kAnalysisSchema = "gyrolab.analysis/1";
constexpr const char* kSearchSchema = "gyrolab.search/1";
constexpr const char* kToolVersion = GYROLAB_VERSION;

struct LoadedGroup {
  FiniteGroup group;
  /// e.g. identity relabeling.
  std::vector<std::string> notes;
};

namespace detail {

inline std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) line += text[i] == '\n' ? 1 : 0;
  return line;
}

[[noreturn]] inline void field_error(const std::string& source, const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, source + ": field '" + field + "': " + what);
}

inline long long int_field(const Json& v, const std::string& source, const std::string& field) {
  if (!v.is_number_integer()) field_error(source, field, "expected an integer");
  return v.get<long long>();
}

inline std::vector<long long> int_array(const Json& v, const std::string& source, const std::string& field) {
  if (!v.is_array()) field_error(source, field, "expected an array");
  std::vector<long long> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(int_field(v[i], source, field + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::string matrix_rows(const std::vector<std::vector<long long>>& rows, const std::string& indent) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += indent + "  " + Json(rows[i]).dump() + (i + 1 < rows.size() ? ",\n" : "\n");
  }
  return out + indent + "]";
}

template <typename Cell>
std::vector<std::vector<long long>> matrix(std::size_t rows, std::size_t cols, const Cell& cell) {
  std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = static_cast<long long>(cell(i, j));
  }
  return m;
}

}  // namespace detail

/// Parses the group-file schema: {"name", "order", "table", "names"} or
/// {"name", "degree", "generators"}. `source` labels error messages.
inline LoadedGroup parse_group_json(const std::string& text, const std::string& source = "<input>",
                                    std::size_t cap = kDefaultOrderCap) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                source + ": line " + std::to_string(detail::line_of(text, e.byte == 0 ? 0 : e.byte - 1)) + ": " +
                    e.what());
  }
  if (!doc.is_object()) detail::field_error(source, "<root>", "expected an object");
  const bool has_table = doc.contains("table");
  const bool has_gens = doc.contains("generators");
  if (has_table == has_gens) detail::field_error(source, "table|generators", "exactly one of the two is required");

  std::string name = "file";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) detail::field_error(source, "name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  LoadedGroup out;
  if (has_gens) {
    if (!doc.contains("degree")) detail::field_error(source, "degree", "required with generators");
    const long long degree = detail::int_field(doc["degree"], source, "degree");
    if (degree < 1) detail::field_error(source, "degree", "must be positive");
    const Json& gens = doc["generators"];
    if (!gens.is_array()) detail::field_error(source, "generators", "expected an array");
    std::vector<std::vector<long long>> images;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      images.push_back(detail::int_array(gens[g], source, "generators[" + std::to_string(g) + "]"));
    }
    out.group = group_from_permutations(static_cast<std::size_t>(degree), images, cap, name);
    return out;
  }

  const Json& table = doc["table"];
  if (!table.is_array()) detail::field_error(source, "table", "expected an array of rows");
  const std::size_t n = table.size();
  if (doc.contains("order")) {
    const long long order = detail::int_field(doc["order"], source, "order");
    if (order < 1 || static_cast<std::size_t>(order) != n) {
      detail::field_error(source, "order", "does not match the " + std::to_string(n) + " table rows");
    }
  }
  if (n > cap) throw Error(ErrorCode::OrderCapExceeded, source + ": order " + std::to_string(n) + " exceeds cap");
  std::vector<std::vector<long long>> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(detail::int_array(table[i], source, "table[" + std::to_string(i) + "]"));
    if (rows.back().size() != n) {
      detail::field_error(source, "table[" + std::to_string(i) + "]", "expected " + std::to_string(n) + " entries");
    }
  }
  std::vector<std::string> names;
  if (doc.contains("names")) {
    const Json& ns = doc["names"];
    if (!ns.is_array() || ns.size() != n) {
      detail::field_error(source, "names", "expected an array of " + std::to_string(n) + " strings");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!ns[i].is_string()) detail::field_error(source, "names[" + std::to_string(i) + "]", "expected a string");
      names.push_back(ns[i].get<std::string>());
    }
  }
  bool identity_at_zero = n > 0;
  for (std::size_t j = 0; j < n && identity_at_zero; ++j) {
    identity_at_zero = rows[0][j] == static_cast<long long>(j) && rows[j][0] == static_cast<long long>(j);
  }
  out.group = group_from_table(rows, std::move(names), name);
  if (!identity_at_zero) {
    for (std::size_t i = 0; i < n; ++i) {
      bool is_identity = true;
      for (std::size_t j = 0; j < n && is_identity; ++j) is_identity = rows[i][j] == static_cast<long long>(j);
      if (is_identity) {
        out.notes.push_back("identity found at index " + std::to_string(i) + " and relabeled to 0 (swapped with 0)");
        break;
      }
    }
  }
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

inline LoadedGroup load_group_file(const std::string& path, std::size_t cap = kDefaultOrderCap) {
  return parse_group_json(read_text_file(path), path, cap);
}

inline FiniteGroup parse_group_file(const std::string& path, std::size_t cap = kDefaultOrderCap) {
  return load_group_file(path, cap).group;
}

/// "file:PATH" loads a group file; anything else is a catalog spec.
inline LoadedGroup resolve_group(const std::string& spec, std::size_t cap = kDefaultOrderCap) {
  constexpr std::string_view prefix = "file:";
  if (spec.rfind(prefix, 0) == 0) return load_group_file(spec.substr(prefix.size()), cap);
  return {catalog_group(spec, cap), {}};
}

/// Group-file text; parsing it back yields the same group and the same text.
inline std::string group_to_json(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::string out = "{\n";
  out += "  \"name\": " + Json(g.label()).dump() + ",\n";
  out += "  \"order\": " + std::to_string(n) + ",\n";
  out += "  \"names\": " + Json(g.names()).dump() + ",\n";
  out += "  \"table\": " +
         detail::matrix_rows(detail::matrix(n, n, [&](std::size_t i, std::size_t j) {
                               return g.mul(static_cast<Elem>(i), static_cast<Elem>(j));
                             }),
                             "  ") +
         "\n}\n";
  return out;
}

inline std::string loop_to_json(const FiniteLoop& l) {
  const std::size_t n = l.order();
  std::string out = "{\n";
  out += "  \"name\": " + Json(l.label()).dump() + ",\n";
  out += "  \"order\": " + std::to_string(n) + ",\n";
  out += "  \"table\": " +
         detail::matrix_rows(detail::matrix(n, n, [&](std::size_t i, std::size_t j) {
                               return l.mul(static_cast<Elem>(i), static_cast<Elem>(j));
                             }),
                             "  ") +
         "\n}\n";
  return out;
}

inline std::string matrix_to_csv(const std::vector<std::vector<long long>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? "," : "") + std::to_string(row[j]);
    out += "\n";
  }
  return out;
}

inline std::vector<std::vector<long long>> circ_matrix(const FiniteLoop& l) {
  return detail::matrix(l.order(), l.order(), [&](std::size_t i, std::size_t j) {
    return l.mul(static_cast<Elem>(i), static_cast<Elem>(j));
  });
}

inline std::vector<std::vector<long long>> gyration_id_matrix(const GyrationTable& gt) {
  return detail::matrix(gt.order, gt.order, [&](std::size_t y, std::size_t z) {
    return gt.id(static_cast<Elem>(y), static_cast<Elem>(z));
  });
}

inline std::string gyration_table_to_json(const FiniteLoop& l, const GyrationTable& gt) {
  std::vector<std::vector<long long>> perms;
  for (const auto& p : gt.distinct) perms.emplace_back(p.images().begin(), p.images().end());
  std::string out = "{\n";
  out += "  \"loop\": " + Json(l.label()).dump() + ",\n";
  out += "  \"order\": " + std::to_string(gt.order) + ",\n";
  out += "  \"ids\": " + detail::matrix_rows(gyration_id_matrix(gt), "  ") + ",\n";
  out += "  \"gyrations\": " + detail::matrix_rows(perms, "  ") + "\n}\n";
  return out;
}

inline std::vector<std::vector<long long>> factor_matrix(std::size_t q, const std::vector<Elem>& values) {
  return detail::matrix(q, q, [&](std::size_t i, std::size_t j) { return values[i * q + j]; });
}

/// Factor sets as matrices of indices into `center`, which lists the
/// kernel's elements as G indices.
inline std::string factor_set_to_json(const FiniteGroup& g, const ExtensionPipeline& p) {
  const std::size_t q = p.factors.quotient_order;
  std::vector<long long> center(p.transversal.kernel.embedding.begin(), p.transversal.kernel.embedding.end());
  std::vector<long long> reps(p.transversal.rep.begin(), p.transversal.rep.end());
  std::string out = "{\n";
  out += "  \"group\": " + Json(g.label()).dump() + ",\n";
  out += "  \"center\": " + Json(center).dump() + ",\n";
  out += "  \"quotient_order\": " + std::to_string(q) + ",\n";
  out += "  \"representatives\": " + Json(reps).dump() + ",\n";
  out += "  \"factor_set\": " + detail::matrix_rows(factor_matrix(q, p.factors.values), "  ") + ",\n";
  out += "  \"gyro_factor_set\": " + detail::matrix_rows(factor_matrix(q, p.gyro_factors.values), "  ") + ",\n";
  out += "  \"reconstruction\": " + Json(p.check.ok ? "isomorphic" : p.check.detail).dump() + "\n}\n";
  return out;
}

inline Json witness_json(const std::vector<Elem>& w) {
  Json a = Json::array();
  for (Elem e : w) a.push_back(e);
  return a;
}

inline Json check_to_json(const CheckReport& r, bool include_timing) {
  Json j;
  j["id"] = r.check_id;
  j["statement"] = r.statement;
  j["status"] = to_string(r.status);
  if (r.skipped()) j["reason"] = r.reason;
  j["witness"] = witness_json(r.witness);
  j["detail"] = r.detail;
  if (include_timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

inline Json group_descriptor(const FiniteGroup& g) {
  Json j;
  j["label"] = g.label();
  j["order"] = g.order();
  const auto cls = nilpotency_class(g);
  j["nilpotency_class"] = cls ? Json(*cls) : Json(nullptr);
  return j;
}

/// Report file. Key order is fixed and timings are written only on request.
inline std::string report_to_json(const FiniteGroup& g, const std::vector<CheckReport>& reports,
                                  bool include_timing = false, const std::vector<std::string>& notes = {}) {
  Json doc;
  doc["schema"] = kReportSchema;
  doc["tool"] = {{"name", "gyrolab"}, {"version", kToolVersion}};
  doc["group"] = group_descriptor(g);
  if (!notes.empty()) doc["notes"] = notes;
  Json checks = Json::array();
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  for (const auto& r : reports) {
    checks.push_back(check_to_json(r, include_timing));
    passed += r.passed() ? 1 : 0;
    failed += r.failed() ? 1 : 0;
    skipped += r.skipped() ? 1 : 0;
  }
  doc["checks"] = std::move(checks);
  doc["summary"] = {{"total", reports.size()}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}};
  return doc.dump(2) + "\n";
}

inline Json set_json(const ElementSet& s) {
  Json a = Json::array();
  for (Elem e : s.members()) a.push_back(e);
  return a;
}

/// Invariant bundle of oG. Permutation-group closures stop at `closure_cap`
/// elements; a capped order is written as null with a note.
inline std::string analysis_to_json(const FiniteGroup& g, unsigned jobs = 0,
                                    std::size_t closure_cap = kDefaultClosureCap,
                                    const std::vector<std::string>& notes = {}) {
  const GyroConstruction c = build_gyro(g);
  const FiniteLoop& l = c.loop;
  Json doc;
  doc["schema"] = kAnalysisSchema;
  doc["tool"] = {{"name", "gyrolab"}, {"version", kToolVersion}};
  doc["group"] = group_descriptor(g);
  if (!notes.empty()) doc["notes"] = notes;
  doc["warnings"] = c.warnings;
  Json loop;
  loop["is_right_loop"] = l.is_right_loop();
  loop["is_loop"] = l.is_loop();
  if (!l.is_loop()) {
    doc["loop"] = std::move(loop);
    return doc.dump(2) + "\n";
  }
  loop["associative"] = is_associative(l);
  loop["commutative"] = !commutativity_witness(l);
  const auto lc = loop_nilpotency_class(l, jobs);
  loop["nilpotency_class"] = lc ? Json(*lc) : Json(nullptr);
  doc["loop"] = std::move(loop);

  const InvariantBundle inv = compute_invariants(l, jobs);
  doc["nuclei"] = {{"left", set_json(inv.n_left)},
                   {"middle", set_json(inv.n_middle)},
                   {"right", set_json(inv.n_right)},
                   {"nucleus", set_json(inv.nucleus)}};
  doc["commutant"] = set_json(inv.commutant);
  doc["center"] = set_json(inv.center);
  doc["group_center"] = set_json(group_center(g));

  const CheckReport axioms = is_gyrogroup(c, jobs);
  doc["gyrogroup"] = check_to_json(axioms, false);

  Json inner;
  const InnerAbelianResult ab = is_inner_abelian(l);
  inner["abelian"] = ab.abelian;
  if (ab.witness) inner["witness"] = {ab.witness->first.describe(), ab.witness->second.describe()};
  auto closure_order = [&](bool mlt, Json& target) {
    try {
      const PermGroup p = mlt ? multiplication_group(l, closure_cap) : inner_mapping_group(l, closure_cap);
      target["order"] = p.order();
      target["generators"] = p.generators().size();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::OrderCapExceeded) throw;
      target["order"] = nullptr;
      target["note"] = e.what();
    }
  };
  closure_order(false, inner);
  doc["inner_mapping_group"] = std::move(inner);
  Json mlt;
  closure_order(true, mlt);
  doc["multiplication_group"] = std::move(mlt);
  return doc.dump(2) + "\n";
}

inline Json search_record_json(const SearchRecord& r) {
  Json j;
  j["id"] = r.id;
  j["order"] = r.order;
  j["status"] = to_string(r.status);
  if (r.status != SearchStatus::Evaluated) {
    j["reason"] = r.reason;
    return j;
  }
  j["c1"] = r.c1;
  j["c1_witness"] = witness_json(r.c1_witness);
  j["c2"] = r.c2;
  j["derived_exponent"] = r.derived_exponent;
  j["c3"] = r.c3;
  j["c3_witness"] = witness_json(r.c3_witness);
  j["hit"] = r.hit;
  if (r.inner_abelian) j["inner_abelian"] = *r.inner_abelian;
  if (r.loop_class) j["loop_class"] = *r.loop_class;
  return j;
}

inline std::string search_to_json(const SearchResult& result) {
  Json doc;
  doc["schema"] = kSearchSchema;
  doc["tool"] = {{"name", "gyrolab"}, {"version", kToolVersion}};
  const SearchSummary& s = result.summary;
  doc["summary"] = {{"total", s.total},     {"evaluated", s.evaluated}, {"skipped", s.skipped},
                    {"errors", s.errors},   {"c1", s.c1},               {"c2", s.c2},
                    {"c3", s.c3},           {"hits", s.hits}};
  Json records = Json::array();
  for (const auto& r : result.records) records.push_back(search_record_json(r));
  doc["records"] = std::move(records);
  return doc.dump(2) + "\n";
}

}  // namespace gyrolab
