#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "invariants.hpp"
#include "loop.hpp"
#include "perm.hpp"
#include "report.hpp"

namespace gyrolab {

constexpr std::size_t kDefaultClosureCap = 1000000;

/// How an inner-mapping generator was produced; kept for witnesses.
struct GeneratorLabel {
  enum class Kind { LeftTranslation, RightTranslation, RightInner, LeftInner, Middle } kind;
  Elem x = 0;
  Elem y = 0;

  std::string describe() const {
    const std::string xs = std::to_string(x);
    const std::string ys = std::to_string(y);
    switch (kind) {
      case Kind::LeftTranslation: return "L_" + xs;
      case Kind::RightTranslation: return "R_" + xs;
      case Kind::RightInner: return "R(" + xs + "," + ys + ")";
      case Kind::LeftInner: return "L(" + xs + "," + ys + ")";
      case Kind::Middle: return "T(" + xs + ")";
    }
    return "?";
  }
};

/// Permutation group given by generators, with the closure enumerated when
/// requested (breadth-first, hash-set frontier).
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<PermMap> generators, std::vector<GeneratorLabel> labels = {})
      : degree_(degree), generators_(std::move(generators)), labels_(std::move(labels)) {
    for (const auto& g : generators_) {
      if (g.degree() != degree_) throw Error(ErrorCode::DimensionMismatch, "generator degree mismatch");
    }
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<PermMap>& generators() const noexcept { return generators_; }
  const std::vector<GeneratorLabel>& labels() const noexcept { return labels_; }
  bool enumerated() const noexcept { return !elements_.empty(); }
  const std::vector<PermMap>& elements() const noexcept { return elements_; }
  std::size_t order() const {
    if (!enumerated()) throw Error(ErrorCode::InvalidArgument, "closure not enumerated");
    return elements_.size();
  }

  bool contains(const PermMap& p) const {
    if (!enumerated()) throw Error(ErrorCode::InvalidArgument, "closure not enumerated");
    return index_.find(p) != index_.end();
  }

  /// Enumerates the closure. Generators already in the partial closure are
  /// skipped, so only a generating subset drives the frontier.
  void enumerate(std::size_t cap = kDefaultClosureCap) {
    if (enumerated()) return;
    std::vector<PermMap> elements{PermMap::identity(degree_)};
    std::unordered_map<PermMap, std::size_t, PermMapHash> index{{elements.front(), 0}};
    std::vector<PermMap> used;
    for (const auto& g : generators_) {
      if (index.find(g) != index.end()) continue;
      used.push_back(g);
      detail::close_right(elements, index, used, used.size() - 1,
                          [](const PermMap& a, const PermMap& b) { return compose(a, b); }, cap);
    }
    elements_ = std::move(elements);
    index_ = std::move(index);
  }

  /// True iff every pair of generators commutes; witness = first pair.
  std::optional<std::pair<std::size_t, std::size_t>> noncommuting_generators() const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      for (std::size_t j = i + 1; j < generators_.size(); ++j) {
        if (!(compose(generators_[i], generators_[j]) == compose(generators_[j], generators_[i]))) {
          return std::pair{i, j};
        }
      }
    }
    return std::nullopt;
  }

 private:
  std::size_t degree_;
  std::vector<PermMap> generators_;
  std::vector<GeneratorLabel> labels_;
  std::vector<PermMap> elements_;
  std::unordered_map<PermMap, std::size_t, PermMapHash> index_;
};

struct Translations {
  PermMap left;   // y -> x o y
  PermMap right;  // y -> y o x
};

inline Translations translations(const FiniteLoop& l, Elem x) {
  if (!l.is_loop()) throw Error(ErrorCode::NotALoop, "translations need a loop");
  std::vector<Elem> left(l.order());
  std::vector<Elem> right(l.order());
  for (std::size_t y = 0; y < l.order(); ++y) {
    left[y] = l.mul(x, static_cast<Elem>(y));
    right[y] = l.mul(static_cast<Elem>(y), x);
  }
  return {PermMap(std::move(left)), PermMap(std::move(right))};
}

namespace detail {

class GeneratorCollector {
 public:
  void add(PermMap p, GeneratorLabel label) {
    if (p.is_identity() || !seen_.insert(p).second) return;
    gens_.push_back(std::move(p));
    labels_.push_back(label);
  }
  PermGroup finish(std::size_t degree) { return PermGroup(degree, std::move(gens_), std::move(labels_)); }

 private:
  std::unordered_set<PermMap, PermMapHash> seen_;
  std::vector<PermMap> gens_;
  std::vector<GeneratorLabel> labels_;
};

}  // namespace detail

/// Mlt(L) = <L_x, R_x>. The closure is enumerated up to `cap`.
inline PermGroup multiplication_group(const FiniteLoop& l, std::size_t cap = kDefaultClosureCap,
                                      bool enumerate = true) {
  if (!l.is_loop()) throw Error(ErrorCode::NotALoop, "Mlt needs a loop");
  detail::GeneratorCollector c;
  for (std::size_t x = 1; x < l.order(); ++x) {
    auto t = translations(l, static_cast<Elem>(x));
    c.add(std::move(t.left), {GeneratorLabel::Kind::LeftTranslation, static_cast<Elem>(x), 0});
    c.add(std::move(t.right), {GeneratorLabel::Kind::RightTranslation, static_cast<Elem>(x), 0});
  }
  PermGroup g = c.finish(l.order());
  if (enumerate) g.enumerate(cap);
  return g;
}

/// Inn(L), generated by (maps act on the left)
///   R(x,y) = R_{x o y}^-1 R_y R_x
///   L(x,y) = L_{y o x}^-1 L_y L_x
///   T(x)   = L_x^-1 R_x
/// each of which fixes the identity. Identity and duplicate generators are
/// dropped; labels record where each surviving generator came from.
inline PermGroup inner_mapping_group(const FiniteLoop& l, std::size_t cap = kDefaultClosureCap,
                                     bool enumerate = true) {
  if (!l.is_loop()) throw Error(ErrorCode::NotALoop, "Inn needs a loop");
  const std::size_t n = l.order();
  std::vector<Translations> tr;
  tr.reserve(n);
  for (std::size_t x = 0; x < n; ++x) tr.push_back(translations(l, static_cast<Elem>(x)));
  std::vector<PermMap> left_inv;
  std::vector<PermMap> right_inv;
  for (const auto& t : tr) {
    left_inv.push_back(t.left.inverse());
    right_inv.push_back(t.right.inverse());
  }
  detail::GeneratorCollector c;
  for (std::size_t x = 1; x < n; ++x) {
    for (std::size_t y = 1; y < n; ++y) {
      const Elem xe = static_cast<Elem>(x);
      const Elem ye = static_cast<Elem>(y);
      c.add(compose(right_inv[l.mul(xe, ye)], compose(tr[y].right, tr[x].right)),
            {GeneratorLabel::Kind::RightInner, xe, ye});
      c.add(compose(left_inv[l.mul(ye, xe)], compose(tr[y].left, tr[x].left)),
            {GeneratorLabel::Kind::LeftInner, xe, ye});
    }
    c.add(compose(left_inv[x], tr[x].right), {GeneratorLabel::Kind::Middle, static_cast<Elem>(x), 0});
  }
  PermGroup g = c.finish(n);
  if (enumerate) g.enumerate(cap);
  return g;
}

struct InnerAbelianResult {
  bool abelian = true;
  std::optional<std::pair<GeneratorLabel, GeneratorLabel>> witness;
};

/// Inn(L) is abelian iff its generators commute pairwise.
inline InnerAbelianResult is_inner_abelian(const FiniteLoop& l) {
  const PermGroup inn = inner_mapping_group(l, kDefaultClosureCap, false);
  if (auto w = inn.noncommuting_generators()) {
    return {false, std::pair{inn.labels()[w->first], inn.labels()[w->second]}};
  }
  return {};
}

/// Least (x, y, z) with [[x,y],z] != [x,[y,z]] for the loop commutator.
inline std::optional<std::array<Elem, 3>> bracket_associativity_witness(const FiniteLoop& l, unsigned jobs = 0) {
  if (!l.is_right_loop()) throw Error(ErrorCode::NotRightLoop, "commutators need a right loop");
  const std::size_t n = l.order();
  std::vector<Elem> br(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) br[x * n + y] = loop_commutator(l, static_cast<Elem>(x), static_cast<Elem>(y));
  }
  std::vector<std::optional<std::array<Elem, 3>>> first(n);
  parallel_for(n, jobs, [&](std::size_t x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = br[x * n + y];
      for (std::size_t z = 0; z < n; ++z) {
        if (br[xy * n + z] != br[x * n + br[y * n + z]]) {
          first[x] = std::array<Elem, 3>{static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z)};
          return;
        }
      }
    }
  });
  for (const auto& f : first) {
    if (f) return f;
  }
  return std::nullopt;
}

/// The hypotheses and conclusion of the abelian-inner-mapping criterion:
///   (a) L/N(L) is an abelian group
///   (b) L/Z(L) is a group
///   (c) the loop commutator bracket is associative
///   conclusion: Inn(L) is abelian
/// Each is reported separately so any reading of the bracket can be audited.
inline std::vector<CheckReport> kinyon_check(const FiniteLoop& l, unsigned jobs = 0) {
  if (!l.is_loop()) throw Error(ErrorCode::NotALoop, "criterion needs a loop");
  std::vector<CheckReport> out;
  const InvariantBundle inv = compute_invariants(l, jobs);

  auto quotient_report = [&](const std::string& id, const std::string& statement, const ElementSet& s,
                             bool need_commutative) {
    LoopQuotient q;
    try {
      q = quotient_loop(l, s);
    } catch (const Error& e) {
      return CheckReport::fail(id, statement, {}, e.what());
    }
    if (auto w = associativity_witness(q.loop)) {
      return CheckReport::fail(id, statement, {q.representatives[(*w)[0]], q.representatives[(*w)[1]],
                                               q.representatives[(*w)[2]]},
                               "quotient is not associative");
    }
    if (need_commutative) {
      if (auto w = commutativity_witness(q.loop)) {
        return CheckReport::fail(id, statement, {q.representatives[w->first], q.representatives[w->second]},
                                 "quotient is not commutative");
      }
    }
    return CheckReport::pass(id, statement, "quotient order " + std::to_string(q.loop.order()));
  };
  out.push_back(quotient_report("kinyon.nucleus-quotient-abelian", "L/N(L) is an abelian group", inv.nucleus, true));
  out.push_back(quotient_report("kinyon.center-quotient-group", "L/Z(L) is a group", inv.center, false));

  const std::string bid = "kinyon.bracket-associative";
  const std::string bst = "[[x,y],z] = [x,[y,z]] for the loop commutator";
  if (auto w = bracket_associativity_witness(l, jobs)) {
    out.push_back(CheckReport::fail(bid, bst, {(*w)[0], (*w)[1], (*w)[2]}, "bracket is not associative"));
  } else {
    out.push_back(CheckReport::pass(bid, bst));
  }

  const std::string iid = "kinyon.inner-abelian";
  const std::string ist = "Inn(L) is abelian";
  const PermGroup inn = inner_mapping_group(l, kDefaultClosureCap, false);
  if (auto w = inn.noncommuting_generators()) {
    const auto& a = inn.labels()[w->first];
    const auto& b = inn.labels()[w->second];
    out.push_back(CheckReport::fail(iid, ist, {a.x, a.y, b.x, b.y},
                                    a.describe() + " and " + b.describe() + " do not commute"));
  } else {
    out.push_back(CheckReport::pass(iid, ist));
  }
  return out;
}

}  // namespace gyrolab
