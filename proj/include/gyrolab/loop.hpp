#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "error.hpp"
#include "group.hpp"

namespace gyrolab {

enum class LoopMode {
  /// Reject tables that are not right loops.
  Strict,
  /// Keep non-right-loop tables as a magma with the flags cleared so they can
  /// still be inspected.
  Lenient,
};

/// Finite magma with two-sided identity 0, possibly non-associative.
///
/// is_right_loop: X o a = b is uniquely solvable (every column is a
/// permutation). is_loop: additionally a o X = b is (every row is one). The
/// division tables are precomputed when the matching flag is set.
class FiniteLoop {
 public:
  FiniteLoop() : FiniteLoop(1, std::vector<Elem>{0}, {}, "trivial") {}

  std::size_t order() const noexcept { return n_; }
  const std::string& label() const noexcept { return label_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Elem e) const { return names_.at(e); }
  std::span<const Elem> table() const noexcept { return table_; }
  bool is_right_loop() const noexcept { return right_loop_; }
  bool is_loop() const noexcept { return loop_; }

  Elem mul(Elem a, Elem b) const noexcept { return table_[static_cast<std::size_t>(a) * n_ + b]; }

  /// The x with x o a = b. Requires is_right_loop().
  Elem solve_right(Elem a, Elem b) const noexcept { return right_div_[static_cast<std::size_t>(b) * n_ + a]; }
  /// The y with a o y = b. Requires is_loop().
  Elem solve_left(Elem a, Elem b) const noexcept { return left_div_[static_cast<std::size_t>(a) * n_ + b]; }

  /// Builds a loop; see loop_from_table for the checks performed.
  static FiniteLoop build(std::size_t n, std::vector<Elem> table, std::vector<std::string> names, std::string label,
                          LoopMode mode) {
    if (n == 0 || table.size() != n * n) {
      throw Error(ErrorCode::DimensionMismatch, "loop table must have n*n entries with n >= 1");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[j] != j || table[j * n] != j) {
        throw Error(ErrorCode::NoIdentity, "element 0 is not a two-sided identity (index " + std::to_string(j) + ")");
      }
    }
    FiniteLoop loop(n, std::move(table), std::move(names), std::move(label));
    if (!loop.right_loop_ && mode == LoopMode::Strict) {
      throw Error(ErrorCode::NotRightLoop, "column " + std::to_string(loop.first_bad_column_) +
                                               " repeats a value");
    }
    return loop;
  }

  friend bool operator==(const FiniteLoop& a, const FiniteLoop& b) noexcept {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  FiniteLoop(std::size_t n, std::vector<Elem> table, std::vector<std::string> names, std::string label)
      : n_(n), table_(std::move(table)), names_(std::move(names)), label_(std::move(label)) {
    if (names_.size() != n_) {
      names_.clear();
      names_.emplace_back("1");
      for (std::size_t i = 1; i < n_; ++i) names_.push_back("e" + std::to_string(i));
    }
    constexpr Elem kUnset = 0xFFFF;
    right_div_.assign(n_ * n_, kUnset);
    right_loop_ = true;
    for (std::size_t a = 0; a < n_ && right_loop_; ++a) {
      for (std::size_t x = 0; x < n_; ++x) {
        Elem& slot = right_div_[static_cast<std::size_t>(table_[x * n_ + a]) * n_ + a];
        if (slot != kUnset) {
          right_loop_ = false;
          first_bad_column_ = a;
          break;
        }
        slot = static_cast<Elem>(x);
      }
    }
    if (!right_loop_) {
      right_div_.clear();
      return;
    }
    left_div_.assign(n_ * n_, kUnset);
    loop_ = true;
    for (std::size_t a = 0; a < n_ && loop_; ++a) {
      for (std::size_t y = 0; y < n_; ++y) {
        Elem& slot = left_div_[a * n_ + table_[a * n_ + y]];
        if (slot != kUnset) {
          loop_ = false;
          break;
        }
        slot = static_cast<Elem>(y);
      }
    }
    if (!loop_) left_div_.clear();
  }

  std::size_t n_;
  std::vector<Elem> table_;
  std::vector<std::string> names_;
  std::string label_;
  bool right_loop_ = false;
  bool loop_ = false;
  std::size_t first_bad_column_ = 0;
  std::vector<Elem> right_div_;
  std::vector<Elem> left_div_;
};

/// Validates a magma table with identity 0 and precomputes divisions.
/// Strict mode throws NotRightLoop naming the first repeating column.
inline FiniteLoop loop_from_table(const std::vector<std::vector<long long>>& rows, LoopMode mode = LoopMode::Strict,
                                  std::vector<std::string> names = {}, std::string label = "table") {
  const std::size_t n = rows.size();
  if (n == 0 || n > kMaxTableOrder) throw Error(ErrorCode::InvalidArgument, "loop order out of range");
  std::vector<Elem> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      const long long v = rows[i][j];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw Error(ErrorCode::InvalidArgument, "entry at cell " + detail::cell(i, j) + " out of range");
      }
      table.push_back(static_cast<Elem>(v));
    }
  }
  return FiniteLoop::build(n, std::move(table), std::move(names), std::move(label), mode);
}

inline FiniteLoop loop_from_group(const FiniteGroup& g) {
  return FiniteLoop::build(g.order(), std::vector<Elem>(g.table().begin(), g.table().end()), g.names(), g.label(),
                           LoopMode::Strict);
}

enum class DivisionSide { Right, Left };

/// Right: the x with x o a = b. Left: the y with a o y = b.
inline Elem divide(const FiniteLoop& l, DivisionSide side, Elem a, Elem b) {
  if (side == DivisionSide::Right) {
    if (!l.is_right_loop()) throw Error(ErrorCode::NotRightLoop, "right division needs a right loop");
    return l.solve_right(a, b);
  }
  if (!l.is_loop()) throw Error(ErrorCode::NotALoop, "left division needs a loop");
  return l.solve_left(a, b);
}

/// Least (x, y, z) with (x y) z != x (y z).
inline std::optional<std::array<Elem, 3>> associativity_witness(const FiniteLoop& l) {
  const std::size_t n = l.order();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem xy = l.mul(static_cast<Elem>(x), static_cast<Elem>(y));
      for (std::size_t z = 0; z < n; ++z) {
        if (l.mul(xy, static_cast<Elem>(z)) !=
            l.mul(static_cast<Elem>(x), l.mul(static_cast<Elem>(y), static_cast<Elem>(z)))) {
          return std::array<Elem, 3>{static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z)};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_associative(const FiniteLoop& l) { return !associativity_witness(l); }

inline std::optional<std::pair<Elem, Elem>> commutativity_witness(const FiniteLoop& l) {
  for (std::size_t x = 0; x < l.order(); ++x) {
    for (std::size_t y = x + 1; y < l.order(); ++y) {
      if (l.mul(static_cast<Elem>(x), static_cast<Elem>(y)) != l.mul(static_cast<Elem>(y), static_cast<Elem>(x))) {
        return std::pair{static_cast<Elem>(x), static_cast<Elem>(y)};
      }
    }
  }
  return std::nullopt;
}

/// Closed under o and under whichever divisions the loop supports, and
/// contains the identity.
inline bool is_subloop(const FiniteLoop& l, const ElementSet& s) {
  if (s.universe() != l.order() || !s.contains(0)) return false;
  const auto m = s.members();
  for (Elem a : m) {
    for (Elem b : m) {
      if (!s.contains(l.mul(a, b))) return false;
      if (l.is_right_loop() && !s.contains(l.solve_right(a, b))) return false;
      if (l.is_loop() && !s.contains(l.solve_left(a, b))) return false;
    }
  }
  return true;
}

/// Smallest subset containing s and 0 closed under o and the divisions.
inline ElementSet subloop_generated(const FiniteLoop& l, const ElementSet& s) {
  ElementSet out = s;
  out.insert(0);
  std::vector<Elem> elems = out.members();
  // Saturate pairwise: each newly added element is combined with every member.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem a = elems[i];
      const Elem b = elems[j];
      std::array<Elem, 6> cand{l.mul(a, b), l.mul(b, a), 0, 0, 0, 0};
      std::size_t k = 2;
      if (l.is_right_loop()) {
        cand[k++] = l.solve_right(a, b);
        cand[k++] = l.solve_right(b, a);
      }
      if (l.is_loop()) {
        cand[k++] = l.solve_left(a, b);
        cand[k++] = l.solve_left(b, a);
      }
      for (std::size_t c = 0; c < k; ++c) {
        if (!out.contains(cand[c])) {
          out.insert(cand[c]);
          elems.push_back(cand[c]);
        }
      }
    }
  }
  return out;
}

struct NormalityReport {
  bool normal = true;
  /// 1: x N = N x, 2: x (y N) = (x y) N, 3: (N x) y = N (x y); 0 when normal.
  int condition = 0;
  Elem x = 0;
  Elem y = 0;
};

namespace detail {

inline ElementSet image_set(std::size_t n, const std::vector<Elem>& members, auto&& fn) {
  ElementSet out(n);
  for (Elem a : members) out.insert(fn(a));
  return out;
}

}  // namespace detail

/// Checks the three coset conditions for every x, y and reports the first
/// violated condition with its witness.
inline NormalityReport is_normal_subloop(const FiniteLoop& l, const ElementSet& n_set) {
  if (!is_subloop(l, n_set)) throw Error(ErrorCode::NotASubloop, "normality test needs a subloop");
  const std::size_t n = l.order();
  const auto members = n_set.members();
  std::vector<ElementSet> left_coset;
  std::vector<ElementSet> right_coset;
  left_coset.reserve(n);
  right_coset.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem xe = static_cast<Elem>(x);
    left_coset.push_back(detail::image_set(n, members, [&](Elem a) { return l.mul(xe, a); }));
    right_coset.push_back(detail::image_set(n, members, [&](Elem a) { return l.mul(a, xe); }));
    if (!(left_coset.back() == right_coset.back())) return {false, 1, xe, 0};
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem xe = static_cast<Elem>(x);
      const Elem ye = static_cast<Elem>(y);
      const Elem xy = l.mul(xe, ye);
      const auto lhs = detail::image_set(n, members, [&](Elem a) { return l.mul(xe, l.mul(ye, a)); });
      if (!(lhs == left_coset[xy])) return {false, 2, xe, ye};
      const auto rhs = detail::image_set(n, members, [&](Elem a) { return l.mul(l.mul(a, xe), ye); });
      if (!(rhs == right_coset[xy])) return {false, 3, xe, ye};
    }
  }
  return {};
}

struct LoopQuotient {
  FiniteLoop loop;
  std::vector<Elem> projection;
  std::vector<Elem> representatives;
};

/// L/N on the cosets x N, each labeled by its least element. Every cell is
/// checked for well-definedness; a failure means N was not normal.
inline LoopQuotient quotient_loop(const FiniteLoop& l, const ElementSet& n_set) {
  if (!is_subloop(l, n_set)) throw Error(ErrorCode::NotASubloop, "quotient by a non-subloop");
  const std::size_t n = l.order();
  constexpr Elem kUnassigned = 0xFFFF;
  std::vector<Elem> proj(n, kUnassigned);
  std::vector<Elem> reps;
  const auto members = n_set.members();
  for (std::size_t x = 0; x < n; ++x) {
    if (proj[x] != kUnassigned) continue;
    const Elem c = static_cast<Elem>(reps.size());
    reps.push_back(static_cast<Elem>(x));
    for (Elem a : members) {
      const Elem y = l.mul(static_cast<Elem>(x), a);
      if (proj[y] != kUnassigned) {
        throw Error(ErrorCode::NotWellDefined,
                    "cosets of " + std::to_string(x) + " and " + std::to_string(reps[proj[y]]) + " overlap");
      }
      proj[y] = c;
    }
  }
  const std::size_t q = reps.size();
  std::vector<Elem> table(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = proj[l.mul(reps[i], reps[j])];
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (proj[l.mul(static_cast<Elem>(x), static_cast<Elem>(y))] !=
          table[static_cast<std::size_t>(proj[x]) * q + proj[y]]) {
        throw Error(ErrorCode::NotWellDefined, "product of cosets depends on representatives at " + detail::cell(x, y));
      }
    }
  }
  std::vector<std::string> names;
  for (Elem r : reps) names.push_back(r == 0 ? std::string("1") : "[" + l.name(r) + "]");
  return LoopQuotient{FiniteLoop::build(q, std::move(table), std::move(names), l.label() + "/N", LoopMode::Lenient),
                      std::move(proj), std::move(reps)};
}

}  // namespace gyrolab
