#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "group.hpp"
#include "loop.hpp"
#include "parallel.hpp"
#include "perm.hpp"
#include "report.hpp"

namespace gyrolab {

/// The loop (G, o) with x o y = y^-1 x y^2, together with its source group.
struct GyroConstruction {
  FiniteGroup source;
  FiniteLoop loop;
  /// nullopt when the source group is not nilpotent.
  std::optional<int> class_of_source;
  std::vector<std::string> warnings;
};

/// The o table of a group. Always a right loop; a loop whenever the source
/// is nilpotent of class at most 3.
inline FiniteLoop circ_loop(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Elem> table(n * n);
  for (std::size_t y = 0; y < n; ++y) {
    const Elem ye = static_cast<Elem>(y);
    const Elem yinv = g.inv(ye);
    const Elem ysq = g.mul(ye, ye);
    for (std::size_t x = 0; x < n; ++x) table[x * n + y] = g.mul(g.mul(yinv, static_cast<Elem>(x)), ysq);
  }
  return FiniteLoop::build(n, std::move(table), g.names(), "circ(" + g.label() + ")", LoopMode::Lenient);
}

/// Accepts any finite group; a missing class hypothesis becomes a warning.
inline GyroConstruction build_gyro(const FiniteGroup& g) {
  GyroConstruction c{g, circ_loop(g), nilpotency_class(g), {}};
  if (!c.class_of_source) {
    c.warnings.emplace_back("source group is not nilpotent");
  } else if (*c.class_of_source > 3) {
    c.warnings.emplace_back("source group has nilpotency class " + std::to_string(*c.class_of_source) + " > 3");
  }
  if (!c.loop.is_loop()) c.warnings.emplace_back("o table is not left-solvable (not a loop)");
  return c;
}

/// The bijection f(y,z) with (x o y) o z = f(y,z)(x) o (y o z).
inline PermMap gyration(const FiniteLoop& l, Elem y, Elem z) {
  if (!l.is_right_loop()) throw Error(ErrorCode::NotRightLoop, "gyrations need a right loop");
  const Elem yz = l.mul(y, z);
  std::vector<Elem> images(l.order());
  for (std::size_t x = 0; x < l.order(); ++x) {
    images[x] = l.solve_right(yz, l.mul(l.mul(static_cast<Elem>(x), y), z));
  }
  return PermMap(std::move(images));
}

/// All n^2 gyrations, deduplicated: id(y, z) indexes into `distinct`.
struct GyrationTable {
  std::size_t order = 0;
  std::vector<std::uint32_t> ids;
  std::vector<PermMap> distinct;

  std::uint32_t id(Elem y, Elem z) const noexcept { return ids[static_cast<std::size_t>(y) * order + z]; }
  const PermMap& at(Elem y, Elem z) const noexcept { return distinct[id(y, z)]; }
};

inline GyrationTable gyration_table(const FiniteLoop& l, unsigned jobs = 0) {
  if (!l.is_right_loop()) throw Error(ErrorCode::NotRightLoop, "gyrations need a right loop");
  const std::size_t n = l.order();
  // Right translations and their inverses as contiguous rows.
  std::vector<Elem> right(n * n);
  std::vector<Elem> right_inv(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      right[a * n + x] = l.mul(static_cast<Elem>(x), static_cast<Elem>(a));
      right_inv[a * n + x] = l.solve_right(static_cast<Elem>(a), static_cast<Elem>(x));
    }
  }
  struct RowResult {
    std::vector<std::uint32_t> local_ids;
    std::vector<std::vector<Elem>> perms;
  };
  std::vector<RowResult> rows(n);
  parallel_for(n, jobs, [&](std::size_t y) {
    RowResult& out = rows[y];
    out.local_ids.resize(n);
    std::unordered_map<std::vector<Elem>, std::uint32_t, detail::VectorHash> seen;
    std::vector<Elem> images(n);
    const Elem* ry = &right[y * n];
    for (std::size_t z = 0; z < n; ++z) {
      const Elem* rz = &right[z * n];
      const Elem* back = &right_inv[static_cast<std::size_t>(l.mul(static_cast<Elem>(y), static_cast<Elem>(z))) * n];
      for (std::size_t x = 0; x < n; ++x) images[x] = back[rz[ry[x]]];
      auto [it, inserted] = seen.try_emplace(images, static_cast<std::uint32_t>(out.perms.size()));
      if (inserted) out.perms.push_back(images);
      out.local_ids[z] = it->second;
    }
  });
  GyrationTable table;
  table.order = n;
  table.ids.resize(n * n);
  std::unordered_map<std::vector<Elem>, std::uint32_t, detail::VectorHash> global;
  for (std::size_t y = 0; y < n; ++y) {
    std::vector<std::uint32_t> remap(rows[y].perms.size());
    for (std::size_t k = 0; k < rows[y].perms.size(); ++k) {
      auto [it, inserted] = global.try_emplace(rows[y].perms[k], static_cast<std::uint32_t>(table.distinct.size()));
      if (inserted) table.distinct.emplace_back(rows[y].perms[k]);
      remap[k] = it->second;
    }
    for (std::size_t z = 0; z < n; ++z) table.ids[y * n + z] = remap[rows[y].local_ids[z]];
    rows[y] = {};
  }
  return table;
}

/// First (x, y) with p(x o y) != p(x) o p(y), or nullopt for an automorphism.
inline std::optional<std::pair<Elem, Elem>> automorphism_defect(const FiniteLoop& l, const PermMap& p) {
  const std::size_t n = l.order();
  for (std::size_t x = 0; x < n; ++x) {
    const Elem px = p(static_cast<Elem>(x));
    for (std::size_t y = 0; y < n; ++y) {
      if (p(l.mul(static_cast<Elem>(x), static_cast<Elem>(y))) != l.mul(px, p(static_cast<Elem>(y)))) {
        return std::pair{static_cast<Elem>(x), static_cast<Elem>(y)};
      }
    }
  }
  return std::nullopt;
}

namespace detail {

/// Least (a, b) where f(a,b) != f(product(a,b), a)^-1 under the given product.
template <typename Product>
std::optional<std::pair<Elem, Elem>> inverse_law_defect(const GyrationTable& gt, const Product& product) {
  std::unordered_map<PermMap, std::uint32_t, PermMapHash> lookup;
  for (std::uint32_t k = 0; k < gt.distinct.size(); ++k) lookup.emplace(gt.distinct[k], k);
  constexpr std::uint32_t kAbsent = 0xFFFFFFFFU;
  std::vector<std::uint32_t> inverse_id(gt.distinct.size(), kAbsent);
  for (std::uint32_t k = 0; k < gt.distinct.size(); ++k) {
    auto it = lookup.find(gt.distinct[k].inverse());
    if (it != lookup.end()) inverse_id[k] = it->second;
  }
  const std::size_t n = gt.order;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Elem ae = static_cast<Elem>(a);
      const Elem be = static_cast<Elem>(b);
      if (gt.id(ae, be) != inverse_id[gt.id(product(ae, be), ae)]) return std::pair{ae, be};
    }
  }
  return std::nullopt;
}

inline CheckReport gyrogroup_report(const FiniteLoop& l, const GyrationTable& gt, unsigned jobs) {
  const std::string id = "gyro.axioms";
  const std::string statement = "gyrations are automorphisms and f(a,b) = f(a o b, a)^-1";
  std::vector<std::optional<std::pair<Elem, Elem>>> defect(gt.distinct.size());
  parallel_for(gt.distinct.size(), jobs, [&](std::size_t k) { defect[k] = automorphism_defect(l, gt.distinct[k]); });
  const auto inverse_bad = inverse_law_defect(gt, [&](Elem a, Elem b) { return l.mul(a, b); });
  const std::size_t n = l.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Elem ae = static_cast<Elem>(a);
      const Elem be = static_cast<Elem>(b);
      if (const auto& d = defect[gt.id(ae, be)]) {
        return CheckReport::fail(id, statement, {ae, be, d->first, d->second},
                                 "f(a,b) is not an automorphism: f(x o y) != f(x) o f(y)");
      }
      if (inverse_bad && inverse_bad->first == ae && inverse_bad->second == be) {
        return CheckReport::fail(id, statement, {ae, be}, "f(a,b) != f(a o b, a)^-1");
      }
    }
  }
  return CheckReport::pass(id, statement, std::to_string(gt.distinct.size()) + " distinct gyrations");
}

}  // namespace detail

/// Gyrogroup axioms on a right loop: every gyration f(a,b) is an automorphism
/// and f(a,b) = f(a o b, a)^-1. The witness is the least failing (a, b),
/// followed by the offending (x, y) for an automorphism failure.
inline CheckReport is_gyrogroup(const FiniteLoop& l, unsigned jobs = 0) {
  if (!l.is_right_loop()) {
    return CheckReport::fail("gyro.axioms", "gyrations are automorphisms and f(a,b) = f(a o b, a)^-1", {},
                             "table is not a right loop");
  }
  return detail::gyrogroup_report(l, gyration_table(l, jobs), jobs);
}

/// As above, and additionally records whether the inverse law would also hold
/// with a b read as the group product (diagnostic only).
inline CheckReport is_gyrogroup(const GyroConstruction& c, unsigned jobs = 0) {
  if (!c.loop.is_right_loop()) return is_gyrogroup(c.loop, jobs);
  const GyrationTable gt = gyration_table(c.loop, jobs);
  CheckReport r = detail::gyrogroup_report(c.loop, gt, jobs);
  const auto alt = detail::inverse_law_defect(gt, [&](Elem a, Elem b) { return c.source.mul(a, b); });
  std::string note = alt ? "group-product reading of f(ab,a) fails at (" + std::to_string(alt->first) + "," +
                               std::to_string(alt->second) + ")"
                         : "group-product reading of f(ab,a) also holds";
  r.detail = r.detail.empty() ? note : r.detail + "; " + note;
  return r;
}

}  // namespace gyrolab
