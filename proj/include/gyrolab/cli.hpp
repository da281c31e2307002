#pragma once

#include "CLI11.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "cocycle.hpp"
#include "error.hpp"
#include "gyro.hpp"
#include "io.hpp"
#include "search.hpp"
#include "theorems.hpp"

namespace gyrolab {

namespace detail {

inline std::size_t env_cap(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long parsed = std::stoull(v, &used);
    if (used == std::string(v).size() && parsed > 0) return static_cast<std::size_t>(parsed);
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be a positive integer, got '" + v + "'");
}

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

/// A directory of *.json group files (sorted by name), or a list file with
/// one entry per line: a .json path (relative to the list file) or a catalog
/// spec. Blank lines and lines starting with '#' are ignored.
inline std::vector<SearchInput> search_inputs(const std::string& where, std::size_t cap) {
  namespace fs = std::filesystem;
  std::vector<SearchInput> inputs;
  auto file_input = [cap](const fs::path& p) {
    const std::string s = p.string();
    return SearchInput{s, [s, cap] { return load_group_file(s, cap).group; }};
  };
  std::error_code ec;
  if (fs::is_directory(where, ec)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(where)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) inputs.push_back(file_input(f));
    return inputs;
  }
  if (!fs::is_regular_file(where, ec)) throw Error(ErrorCode::IoError, "no such input directory or list file '" + where + "'");
  std::istringstream lines(read_text_file(where));
  const fs::path base = fs::path(where).parent_path();
  std::string line;
  while (std::getline(lines, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string entry = line.substr(first, last - first + 1);
    if (entry.size() > 5 && entry.ends_with(".json")) {
      const fs::path p(entry);
      inputs.push_back(file_input(p.is_absolute() ? p : base / p));
    } else {
      inputs.push_back(catalog_input(entry, cap));
    }
  }
  return inputs;
}

inline std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
  std::vector<std::string> ids;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (!id.empty()) ids.push_back(id);
    }
  }
  return ids;
}

}  // namespace detail

/// 1 when any check failed, else 0. Skips do not count as failures.
inline int verify_exit_code(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.failed(); }) ? 1 : 0;
}

/// Exit codes: 0 success, 1 at least one failed check, 2 usage or I/O error.
inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Gyrogroups of finite groups: invariants, checks and searches", "gyrolab"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string group_spec;
  std::string out_path;
  unsigned jobs = 0;
  bool timing = false;
  std::vector<std::string> checks_raw;

  auto* analyze = app.add_subcommand("analyze", "invariant bundle of oG as JSON");
  analyze->add_option("--group", group_spec, "catalog spec or file:PATH")->required();
  analyze->add_option("--out", out_path, "output file (default stdout)");
  analyze->add_option("--jobs", jobs, "worker threads (0 = all cores)");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--group", group_spec, "catalog spec or file:PATH (required unless --list)");
  verify->add_option("--checks", checks_raw, "comma-separated check ids")->delimiter(',');
  verify->add_option("--out", out_path, "output file (default stdout)");
  verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  verify->add_flag("--timing", timing, "include per-check timings in the report");
  bool list_checks = false;
  verify->add_flag("--list", list_checks, "print the check ids and exit");

  std::string inputs;
  std::size_t max_order = 0;
  auto* search = app.add_subcommand("search", "scan a stream of groups for the search conditions");
  search->add_option("--inputs", inputs, "directory of group files or list file")->required();
  search->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  search->add_option("--max-order", max_order, "skip groups above this order (0 = no limit)");
  search->add_option("--out", out_path, "output file (default stdout)");

  std::string what;
  std::string format = "json";
  auto* exp = app.add_subcommand("export", "dump a table");
  exp->add_option("--group", group_spec, "catalog spec or file:PATH")->required();
  exp->add_option("--what", what, "table to export")
      ->required()
      ->check(CLI::IsMember({"circ-table", "gyration-table", "factor-set", "group-table"}));
  exp->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  exp->add_option("--out", out_path, "output file (default stdout)");
  exp->add_option("--jobs", jobs, "worker threads (0 = all cores)");

  auto* catalog = app.add_subcommand("catalog", "list catalog spec strings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::size_t order_cap = detail::env_cap("GYROLAB_ORDER_CAP", kDefaultOrderCap);
    const std::size_t closure_cap = detail::env_cap("GYROLAB_CLOSURE_CAP", kDefaultClosureCap);

    if (catalog->parsed()) {
      for (const auto& s : catalog_specs()) out << s << "\n";
      return 0;
    }
    if (search->parsed()) {
      SearchConfig config;
      config.jobs = jobs;
      config.max_order = max_order;
      const SearchResult result = search_scan(detail::search_inputs(inputs, order_cap), config);
      detail::emit(search_to_json(result), out_path, out);
      return 0;
    }
    if (verify->parsed() && list_checks) {
      for (const auto& c : suite_checks()) out << c.id << "\t" << c.statement << "\n";
      return 0;
    }
    if (group_spec.empty()) {
      err << "error: --group is required\n";
      return 2;
    }

    const LoadedGroup loaded = resolve_group(group_spec, order_cap);
    const FiniteGroup& g = loaded.group;
    for (const auto& note : loaded.notes) err << "note: " << note << "\n";

    if (analyze->parsed()) {
      // Permutation closures hold order * degree entries; keep them bounded.
      const std::size_t bounded = std::min(closure_cap, std::max<std::size_t>(1, 100000000 / g.order()));
      detail::emit(analysis_to_json(g, jobs, bounded, loaded.notes), out_path, out);
      return 0;
    }
    if (verify->parsed()) {
      const auto reports = verify_suite(g, detail::split_ids(checks_raw), jobs);
      detail::emit(report_to_json(g, reports, timing, loaded.notes), out_path, out);
      return verify_exit_code(reports);
    }
    if (exp->parsed()) {
      const bool csv = format == "csv";
      std::string text;
      if (what == "group-table") {
        text = csv ? matrix_to_csv(detail::matrix(g.order(), g.order(), [&](std::size_t i, std::size_t j) {
                       return g.mul(static_cast<Elem>(i), static_cast<Elem>(j));
                     }))
                   : group_to_json(g);
      } else if (what == "circ-table") {
        const FiniteLoop l = circ_loop(g);
        text = csv ? matrix_to_csv(circ_matrix(l)) : loop_to_json(l);
      } else if (what == "gyration-table") {
        const FiniteLoop l = circ_loop(g);
        const GyrationTable gt = gyration_table(l, jobs);
        text = csv ? matrix_to_csv(gyration_id_matrix(gt)) : gyration_table_to_json(l, gt);
      } else {
        const ExtensionPipeline p = run_extension_pipeline(g);
        text = csv ? matrix_to_csv(factor_matrix(p.factors.quotient_order, p.factors.values))
                   : factor_set_to_json(g, p);
      }
      detail::emit(text, out_path, out);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace gyrolab
