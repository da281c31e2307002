#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "error.hpp"
#include "group.hpp"
#include "gyro.hpp"
#include "invariants.hpp"
#include "mapping_groups.hpp"
#include "parallel.hpp"
#include "theorems.hpp"

namespace gyrolab {

/// One candidate group; the loader runs on a worker thread.
struct SearchInput {
  std::string id;
  std::function<FiniteGroup()> load;
};

inline SearchInput catalog_input(std::string spec, std::size_t cap = kDefaultOrderCap) {
  return {spec, [spec, cap] { return catalog_group(spec, cap); }};
}

enum class SearchStatus { Evaluated, Skipped, Error };

constexpr const char* to_string(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::Evaluated: return "evaluated";
    case SearchStatus::Skipped: return "skipped";
    case SearchStatus::Error: return "error";
  }
  return "unknown";
}

/// Per-group outcome. c1: some [x,y]^3 lies outside C(oG); c2: the exponent
/// of [G,G] is not 3; c3: [[x,y],z]^9 = [x,[y,z]]^9 holds.
struct SearchRecord {
  std::string id;
  std::size_t order = 0;
  SearchStatus status = SearchStatus::Evaluated;
  std::string reason;
  bool c1 = false;
  bool c2 = false;
  bool c3 = false;
  std::vector<Elem> c1_witness;
  std::vector<Elem> c3_witness;
  std::size_t derived_exponent = 0;
  bool hit = false;
  std::optional<bool> inner_abelian;
  std::optional<int> loop_class;
};

struct SearchConfig {
  unsigned jobs = 0;
  /// 0 means no limit.
  std::size_t max_order = 0;
  /// Compute Inn abelianness and loop class on hits.
  bool payoff = true;
};

struct SearchSummary {
  std::size_t total = 0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  std::size_t errors = 0;
  std::size_t c1 = 0;
  std::size_t c2 = 0;
  std::size_t c3 = 0;
  std::size_t hits = 0;
};

struct SearchResult {
  std::vector<SearchRecord> records;
  SearchSummary summary;
};

inline bool is_power_of_three(std::size_t n) {
  if (n < 3) return false;
  while (n % 3 == 0) n /= 3;
  return n == 1;
}

/// Evaluates one group. Inner loops run single-threaded; parallelism is
/// across groups.
inline SearchRecord search_one(const FiniteGroup& g, std::string id, const SearchConfig& config) {
  SearchRecord r;
  r.id = std::move(id);
  r.order = g.order();
  if (config.max_order != 0 && g.order() > config.max_order) {
    r.status = SearchStatus::Skipped;
    r.reason = "order " + std::to_string(g.order()) + " exceeds max order " + std::to_string(config.max_order);
    return r;
  }
  if (!is_power_of_three(g.order())) {
    r.status = SearchStatus::Skipped;
    r.reason = "not a 3-group: order " + std::to_string(g.order());
    return r;
  }
  const auto cls = nilpotency_class(g);
  if (cls != 3) {
    r.status = SearchStatus::Skipped;
    r.reason = "class " + std::to_string(cls.value_or(-1)) + " is not 3";
    return r;
  }
  const Verdict crit = class2_criterion(g, 1);
  r.c1 = !crit.holds;
  r.c1_witness = crit.witness;
  r.derived_exponent = subset_exponent(g, derived_subgroup(g));
  r.c2 = r.derived_exponent != 3;
  const Verdict nine = nine_identity(g, 1);
  r.c3 = nine.holds;
  r.c3_witness = nine.witness;
  r.hit = r.c1 && r.c2 && r.c3;
  if (r.hit && config.payoff) {
    const FiniteLoop l = circ_loop(g);
    r.inner_abelian = is_inner_abelian(l).abelian;
    r.loop_class = loop_nilpotency_class(l, 1);
  }
  return r;
}

/// Scans the stream; per-group errors are recorded and the scan continues.
/// Records are returned in input order whatever the number of jobs.
inline SearchResult search_scan(const std::vector<SearchInput>& inputs, const SearchConfig& config = {}) {
  SearchResult result;
  result.records.resize(inputs.size());
  parallel_for(inputs.size(), config.jobs, [&](std::size_t i) {
    SearchRecord& slot = result.records[i];
    try {
      slot = search_one(inputs[i].load(), inputs[i].id, config);
    } catch (const std::exception& e) {
      slot = SearchRecord{};
      slot.id = inputs[i].id;
      slot.status = SearchStatus::Error;
      slot.reason = e.what();
    }
  });
  SearchSummary& s = result.summary;
  s.total = inputs.size();
  for (const auto& r : result.records) {
    switch (r.status) {
      case SearchStatus::Evaluated: ++s.evaluated; break;
      case SearchStatus::Skipped: ++s.skipped; break;
      case SearchStatus::Error: ++s.errors; break;
    }
    if (r.status != SearchStatus::Evaluated) continue;
    s.c1 += r.c1 ? 1 : 0;
    s.c2 += r.c2 ? 1 : 0;
    s.c3 += r.c3 ? 1 : 0;
    s.hits += r.hit ? 1 : 0;
  }
  return result;
}

}  // namespace gyrolab
