#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "element_set.hpp"
#include "group.hpp"
#include "gyro.hpp"
#include "loop.hpp"
#include "parallel.hpp"
#include "report.hpp"

namespace gyrolab {

enum class NucleusKind { Left, Middle, Right, Full };

namespace detail {

/// a associates in the given position with every pair.
inline bool associates_at(const FiniteLoop& l, NucleusKind kind, Elem a) {
  const std::size_t n = l.order();
  for (std::size_t x = 0; x < n; ++x) {
    const Elem xe = static_cast<Elem>(x);
    for (std::size_t y = 0; y < n; ++y) {
      const Elem ye = static_cast<Elem>(y);
      switch (kind) {
        case NucleusKind::Left:
          if (l.mul(l.mul(a, xe), ye) != l.mul(a, l.mul(xe, ye))) return false;
          break;
        case NucleusKind::Middle:
          if (l.mul(l.mul(xe, a), ye) != l.mul(xe, l.mul(a, ye))) return false;
          break;
        case NucleusKind::Right:
          if (l.mul(l.mul(xe, ye), a) != l.mul(xe, l.mul(ye, a))) return false;
          break;
        case NucleusKind::Full:
          return associates_at(l, NucleusKind::Left, a) && associates_at(l, NucleusKind::Middle, a) &&
                 associates_at(l, NucleusKind::Right, a);
      }
    }
  }
  return true;
}

template <typename Pred>
ElementSet collect(std::size_t n, unsigned jobs, const Pred& pred, const ElementSet* restrict_to = nullptr) {
  std::vector<char> in(n, 0);
  parallel_for(n, jobs, [&](std::size_t a) {
    if (restrict_to != nullptr && !restrict_to->contains(a)) return;
    in[a] = pred(static_cast<Elem>(a)) ? 1 : 0;
  });
  ElementSet out(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (in[a]) out.insert(static_cast<Elem>(a));
  }
  return out;
}

}  // namespace detail

/// Brute-force nucleus by definition, O(n^3) per kind.
inline ElementSet nucleus(const FiniteLoop& l, NucleusKind kind, unsigned jobs = 0) {
  return detail::collect(l.order(), jobs, [&](Elem a) { return detail::associates_at(l, kind, a); });
}

/// {a : x a = a x for all x}
inline ElementSet commutant(const FiniteLoop& l, unsigned jobs = 0) {
  return detail::collect(l.order(), jobs, [&](Elem a) {
    for (std::size_t x = 0; x < l.order(); ++x) {
      if (l.mul(static_cast<Elem>(x), a) != l.mul(a, static_cast<Elem>(x))) return false;
    }
    return true;
  });
}

/// C(L) intersected with N(L). Nuclear conditions are only tested on
/// commutant members.
inline ElementSet loop_center(const FiniteLoop& l, unsigned jobs = 0) {
  const ElementSet c = commutant(l, jobs);
  return detail::collect(
      l.order(), jobs, [&](Elem a) { return detail::associates_at(l, NucleusKind::Full, a); }, &c);
}

struct InvariantBundle {
  ElementSet n_left;
  ElementSet n_middle;
  ElementSet n_right;
  ElementSet nucleus;
  ElementSet commutant;
  ElementSet center;
};

inline InvariantBundle compute_invariants(const FiniteLoop& l, unsigned jobs = 0) {
  InvariantBundle b;
  b.n_left = nucleus(l, NucleusKind::Left, jobs);
  b.n_middle = nucleus(l, NucleusKind::Middle, jobs);
  b.n_right = nucleus(l, NucleusKind::Right, jobs);
  b.nucleus = b.n_left.intersect(b.n_middle).intersect(b.n_right);
  b.commutant = commutant(l, jobs);
  b.center = b.commutant.intersect(b.nucleus);
  return b;
}

/// The w with x o y = w o (y o x).
inline Elem loop_commutator(const FiniteLoop& l, Elem x, Elem y) {
  if (!l.is_right_loop()) throw Error(ErrorCode::NotRightLoop, "commutators need a right loop");
  return l.solve_right(l.mul(y, x), l.mul(x, y));
}

/// The w with (x o y) o z = w o (x o (y o z)).
inline Elem loop_associator(const FiniteLoop& l, Elem x, Elem y, Elem z) {
  if (!l.is_right_loop()) throw Error(ErrorCode::NotRightLoop, "associators need a right loop");
  return l.solve_right(l.mul(x, l.mul(y, z)), l.mul(l.mul(x, y), z));
}

/// Z_0 = {1}, Z_{i+1} = preimage of Z(L / Z_i). The last entry is L for a
/// nilpotent loop, otherwise the stalled term.
inline std::vector<ElementSet> upper_central_series(const FiniteLoop& l, unsigned jobs = 0) {
  std::vector<ElementSet> series{ElementSet::identity_only(l.order())};
  while (!series.back().full()) {
    const LoopQuotient q = quotient_loop(l, series.back());
    const ElementSet zq = loop_center(q.loop, jobs);
    ElementSet next(l.order());
    for (std::size_t x = 0; x < l.order(); ++x) {
      if (zq.contains(q.projection[x])) next.insert(static_cast<Elem>(x));
    }
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

/// Length of the upper central series, or nullopt (not nilpotent) when it
/// stalls below L. The trivial loop has class 0; abelian groups class 1.
inline std::optional<int> loop_nilpotency_class(const FiniteLoop& l, unsigned jobs = 0) {
  const auto series = upper_central_series(l, jobs);
  if (!series.back().full()) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

/// Compares the brute-force nuclei and commutant of oG with the subsets
/// defined by group identities:
///   left    [a,[x,y^-1]] = 1
///   middle  [x,[a,y^-1]] = 1
///   right   [x,[y,a^-1]] = 1
///   C       (a x)^3 = a^3 x^3
/// for all x, y. Requires class(G) <= 3.
inline CheckReport nucleus_characterization_check(const FiniteGroup& g, unsigned jobs = 0) {
  const auto cls = nilpotency_class(g);
  if (!cls || *cls > 3) throw Error(ErrorCode::WrongClass, "characterizations need nilpotency class <= 3");
  const std::string id = "nuclei.characterization";
  const std::string statement = "nuclei and commutant of oG match their group-identity characterizations";
  const FiniteLoop l = circ_loop(g);
  const std::size_t n = g.order();
  auto all_pairs = [&](auto&& pred) {
    return [&, pred](Elem a) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (!pred(a, static_cast<Elem>(x), static_cast<Elem>(y))) return false;
        }
      }
      return true;
    };
  };
  struct Row {
    const char* name;
    ElementSet brute;
    ElementSet characterized;
  };
  std::vector<Row> rows;
  rows.push_back({"left nucleus", nucleus(l, NucleusKind::Left, jobs),
                  detail::collect(n, jobs, all_pairs([&](Elem a, Elem x, Elem y) {
                                    return g.comm(a, g.comm(x, g.inv(y))) == 0;
                                  }))});
  rows.push_back({"middle nucleus", nucleus(l, NucleusKind::Middle, jobs),
                  detail::collect(n, jobs, all_pairs([&](Elem a, Elem x, Elem y) {
                                    return g.comm(x, g.comm(a, g.inv(y))) == 0;
                                  }))});
  rows.push_back({"right nucleus", nucleus(l, NucleusKind::Right, jobs),
                  detail::collect(n, jobs, all_pairs([&](Elem a, Elem x, Elem y) {
                                    return g.comm(x, g.comm(y, g.inv(a))) == 0;
                                  }))});
  rows.push_back({"commutant", commutant(l, jobs), detail::collect(n, jobs, [&](Elem a) {
                    for (std::size_t x = 0; x < n; ++x) {
                      const Elem xe = static_cast<Elem>(x);
                      if (g.pow(g.mul(a, xe), 3) != g.mul(g.pow(a, 3), g.pow(xe, 3))) return false;
                    }
                    return true;
                  })});
  for (const Row& r : rows) {
    if (!(r.brute == r.characterized)) {
      for (std::size_t a = 0; a < n; ++a) {
        if (r.brute.contains(a) != r.characterized.contains(a)) {
          return CheckReport::fail(id, statement, {static_cast<Elem>(a)},
                                   std::string(r.name) + ": element " + std::to_string(a) +
                                       (r.brute.contains(a) ? " is in the brute-force set only"
                                                            : " satisfies the identity only"));
        }
      }
    }
  }
  return CheckReport::pass(id, statement);
}

}  // namespace gyrolab
