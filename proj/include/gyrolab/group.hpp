#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "error.hpp"

namespace gyrolab {

/// Default cap on the order of any group built by closure or by a product.
constexpr std::size_t kDefaultOrderCap = 10000;

/// Finite group stored as a Cayley table with the identity at index 0.
///
/// Instances are immutable once built and are safe to share between threads.
/// Use group_from_table / group_from_permutations / catalog_group to build
/// one; the table is validated (or constructed correct by formula) there.
///
/// Commutators follow [x,y] = x y x^-1 y^-1 throughout the library.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(1, std::vector<Elem>{0}, {}, "trivial") {}

  std::size_t order() const noexcept { return n_; }
  const std::string& label() const noexcept { return label_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Elem e) const { return names_.at(e); }
  std::span<const Elem> table() const noexcept { return table_; }
  std::span<const Elem> row(Elem a) const noexcept {
    return std::span<const Elem>(table_).subspan(static_cast<std::size_t>(a) * n_, n_);
  }

  Elem mul(Elem a, Elem b) const noexcept { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }

  /// x y x^-1 y^-1
  Elem comm(Elem x, Elem y) const noexcept { return mul(mul(x, y), mul(inverse_[x], inverse_[y])); }

  Elem pow(Elem a, long long k) const noexcept {
    Elem base = k < 0 ? inverse_[a] : a;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
    Elem acc = 0;
    while (e != 0) {
      if (e & 1ULL) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1ULL;
    }
    return acc;
  }

  std::size_t element_order(Elem a) const noexcept {
    std::size_t k = 1;
    for (Elem p = a; p != 0; p = mul(p, a)) ++k;
    return k;
  }

  bool commutes(Elem a, Elem b) const noexcept { return mul(a, b) == mul(b, a); }

  bool is_abelian() const noexcept {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = a + 1; b < n_; ++b) {
        if (!commutes(static_cast<Elem>(a), static_cast<Elem>(b))) return false;
      }
    }
    return true;
  }

  FiniteGroup relabeled(std::string label) const {
    FiniteGroup copy = *this;
    copy.label_ = std::move(label);
    return copy;
  }

  /// Builds a group from a table that is known to be a valid group table with
  /// identity 0. No validation is done beyond sizes.
  static FiniteGroup from_trusted_table(std::size_t n, std::vector<Elem> table, std::vector<std::string> names,
                                        std::string label) {
    return FiniteGroup(n, std::move(table), std::move(names), std::move(label));
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup(std::size_t n, std::vector<Elem> table, std::vector<std::string> names, std::string label)
      : n_(n), table_(std::move(table)), names_(std::move(names)), label_(std::move(label)) {
    if (n_ == 0 || table_.size() != n_ * n_) {
      throw Error(ErrorCode::DimensionMismatch, "group table must have n*n entries with n >= 1");
    }
    if (names_.size() != n_) {
      names_.clear();
      names_.reserve(n_);
      names_.emplace_back("1");
      for (std::size_t i = 1; i < n_; ++i) names_.push_back("g" + std::to_string(i));
    }
    inverse_.assign(n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (table_[a * n_ + b] == 0) {
          inverse_[a] = static_cast<Elem>(b);
          break;
        }
      }
    }
  }

  std::size_t n_;
  std::vector<Elem> table_;
  std::vector<std::string> names_;
  std::string label_;
  std::vector<Elem> inverse_;
};

namespace detail {

inline std::string cell(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

/// Returns the first (row-major) cell whose value repeats within its row or
/// column, or nullopt when the table is a Latin square.
inline std::optional<std::pair<std::size_t, std::size_t>> latin_square_defect(std::size_t n,
                                                                              std::span<const Elem> table) {
  std::vector<std::uint32_t> seen_row(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Elem v = table[i * n + j];
      if (seen_row[v] == i + 1) return std::pair{i, j};
      seen_row[v] = static_cast<std::uint32_t>(i + 1);
    }
  }
  std::vector<std::uint32_t> seen_col(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Elem v = table[i * n + j];
      if (seen_col[v] == j + 1) return std::pair{i, j};
      seen_col[v] = static_cast<std::uint32_t>(j + 1);
    }
  }
  return std::nullopt;
}

/// Index of the two-sided identity of a magma table, if any.
inline std::optional<Elem> find_identity(std::size_t n, std::span<const Elem> table) {
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      ok = table[e * n + j] == j && table[j * n + e] == j;
    }
    if (ok) return static_cast<Elem>(e);
  }
  return std::nullopt;
}

/// Swaps the labels 0 and e in a table (and its names).
inline void swap_labels(std::size_t n, std::vector<Elem>& table, std::vector<std::string>& names, Elem e) {
  if (e == 0) return;
  auto relabel = [e](Elem v) -> Elem { return v == 0 ? e : (v == e ? Elem{0} : v); };
  std::vector<Elem> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[static_cast<std::size_t>(relabel(static_cast<Elem>(i))) * n + relabel(static_cast<Elem>(j))] =
          relabel(table[i * n + j]);
    }
  }
  table = std::move(out);
  if (names.size() == n) std::swap(names[0], names[e]);
}

/// Right-multiplication closure: grows `elements` (already closed under the
/// first `closed_gens` generators) until it is closed under every generator.
/// `index` maps an element to its position in `elements`.
template <typename T, typename Map, typename Mul>
void close_right(std::vector<T>& elements, Map& index, const std::vector<T>& gens, std::size_t closed_gens,
                 const Mul& mul, std::size_t cap) {
  std::size_t existing = elements.size();
  auto push = [&](T&& candidate) {
    if (index.find(candidate) != index.end()) return;
    if (elements.size() >= cap) {
      throw Error(ErrorCode::OrderCapExceeded, "closure exceeds cap " + std::to_string(cap));
    }
    index.emplace(candidate, elements.size());
    elements.push_back(std::move(candidate));
  };
  for (std::size_t i = 0; i < existing; ++i) {
    for (std::size_t g = closed_gens; g < gens.size(); ++g) push(mul(elements[i], gens[g]));
  }
  for (std::size_t i = existing; i < elements.size(); ++i) {
    for (std::size_t g = 0; g < gens.size(); ++g) push(mul(elements[i], gens[g]));
  }
}

struct VectorHash {
  template <typename T>
  std::size_t operator()(const std::vector<T>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace detail

/// Validates a Cayley table and returns the group. The identity is moved to
/// index 0 by swapping labels when needed.
inline FiniteGroup group_from_table(std::size_t n, std::span<const long long> flat,
                                    std::vector<std::string> names = {}, std::string label = "table") {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "group order must be at least 1");
  if (n > kMaxTableOrder) throw Error(ErrorCode::OrderCapExceeded, "table order " + std::to_string(n));
  if (flat.size() != n * n) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(n * n) + " entries, got " + std::to_string(flat.size()));
  }
  if (!names.empty() && names.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "names must have one entry per element");
  }
  std::vector<Elem> table(n * n);
  for (std::size_t k = 0; k < flat.size(); ++k) {
    if (flat[k] < 0 || static_cast<std::size_t>(flat[k]) >= n) {
      throw Error(ErrorCode::InvalidArgument, "entry at cell " + detail::cell(k / n, k % n) + " out of range");
    }
    table[k] = static_cast<Elem>(flat[k]);
  }
  if (auto bad = detail::latin_square_defect(n, table)) {
    throw Error(ErrorCode::NotLatinSquare, "repeated value at cell " + detail::cell(bad->first, bad->second));
  }
  const auto e = detail::find_identity(n, table);
  if (!e) throw Error(ErrorCode::NoIdentity, "no row/column pair acts as a two-sided identity");
  detail::swap_labels(n, table, names, *e);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t ij = table[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        if (table[ij * n + k] != table[i * n + table[j * n + k]]) {
          throw Error(ErrorCode::NotAssociative, "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                                     std::to_string(k) + ") after identity relabeling");
        }
      }
    }
  }
  return FiniteGroup::from_trusted_table(n, std::move(table), std::move(names), std::move(label));
}

inline FiniteGroup group_from_table(const std::vector<std::vector<long long>>& rows,
                                    std::vector<std::string> names = {}, std::string label = "table") {
  const std::size_t n = rows.size();
  std::vector<long long> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(i) + " has " +
                                                    std::to_string(rows[i].size()) + " entries, expected " +
                                                    std::to_string(n));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return group_from_table(n, flat, std::move(names), std::move(label));
}

/// Enumerates the group generated by elements of type T (any hashable value
/// type with an associative product) and returns its Cayley table. Element 0
/// is `identity`; the rest appear in breadth-first order of right
/// multiplication by the generators. Products are read off the Cayley graph
/// so no hashing is needed after enumeration.
template <typename T, typename Mul, typename Hash = std::hash<T>>
FiniteGroup group_from_generators(const T& identity, const std::vector<T>& generators, const Mul& mul,
                                  std::size_t cap, std::vector<std::string> names = {},
                                  std::string label = "generated") {
  std::vector<T> elements{identity};
  std::unordered_map<T, std::size_t, Hash> index{{identity, 0}};
  std::vector<std::size_t> parent{0};
  std::vector<std::size_t> via{0};
  // BFS recording the spanning tree so that element j = element parent[j] * gen[via[j]].
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      T p = mul(elements[i], generators[g]);
      if (index.find(p) != index.end()) continue;
      if (elements.size() >= std::min(cap, kMaxTableOrder)) {
        throw Error(ErrorCode::OrderCapExceeded, "generated group exceeds order cap " + std::to_string(cap));
      }
      index.emplace(p, elements.size());
      elements.push_back(std::move(p));
      parent.push_back(i);
      via.push_back(g);
    }
  }
  const std::size_t n = elements.size();
  const std::size_t k = generators.size();
  std::vector<Elem> right_gen(n * std::max<std::size_t>(k, 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t g = 0; g < k; ++g) {
      right_gen[i * k + g] = static_cast<Elem>(index.at(mul(elements[i], generators[g])));
    }
  }
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    table[i * n] = static_cast<Elem>(i);
    for (std::size_t j = 1; j < n; ++j) {
      table[i * n + j] = right_gen[static_cast<std::size_t>(table[i * n + parent[j]]) * k + via[j]];
    }
  }
  return FiniteGroup::from_trusted_table(n, std::move(table), std::move(names), std::move(label));
}

/// Group generated by permutations of {0..degree-1}, composed as maps acting
/// on the left: (g h)(x) = g(h(x)). Element 0 is the identity permutation.
inline FiniteGroup group_from_permutations(std::size_t degree, const std::vector<std::vector<long long>>& generators,
                                           std::size_t cap = kDefaultOrderCap, std::string label = "permutations") {
  std::vector<std::vector<Elem>> gens;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& images = generators[g];
    if (images.size() != degree) {
      throw Error(ErrorCode::NotABijection, "generator " + std::to_string(g) + " has " +
                                                std::to_string(images.size()) + " images for degree " +
                                                std::to_string(degree));
    }
    std::vector<bool> hit(degree, false);
    std::vector<Elem> perm(degree);
    for (std::size_t x = 0; x < degree; ++x) {
      const long long y = images[x];
      if (y < 0 || static_cast<std::size_t>(y) >= degree || hit[static_cast<std::size_t>(y)]) {
        throw Error(ErrorCode::NotABijection,
                    "generator " + std::to_string(g) + " at point " + std::to_string(x));
      }
      hit[static_cast<std::size_t>(y)] = true;
      perm[x] = static_cast<Elem>(y);
    }
    gens.push_back(std::move(perm));
  }
  std::vector<Elem> identity(degree);
  std::iota(identity.begin(), identity.end(), Elem{0});
  auto compose = [](const std::vector<Elem>& g, const std::vector<Elem>& h) {
    std::vector<Elem> out(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) out[x] = g[h[x]];
    return out;
  };
  return group_from_generators<std::vector<Elem>, decltype(compose), detail::VectorHash>(identity, gens, compose, cap, {}, std::move(label));
}

/// [x,y] = x y x^-1 y^-1
inline Elem group_commutator(const FiniteGroup& g, Elem x, Elem y) noexcept { return g.comm(x, y); }

inline bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.universe() != g.order() || !s.contains(0)) return false;
  const auto m = s.members();
  for (Elem a : m) {
    if (!s.contains(g.inv(a))) return false;
    for (Elem b : m) {
      if (!s.contains(g.mul(a, b))) return false;
    }
  }
  return true;
}

/// Smallest subgroup containing s (and the identity).
inline ElementSet subgroup_generated(const FiniteGroup& g, const ElementSet& s) {
  ElementSet out = ElementSet::identity_only(g.order());
  std::vector<Elem> elements{0};
  std::vector<Elem> gens;
  for (Elem candidate : s.members()) {
    if (out.contains(candidate)) continue;
    gens.push_back(candidate);
    const std::size_t existing = elements.size();
    auto push = [&](Elem p) {
      if (!out.contains(p)) {
        out.insert(p);
        elements.push_back(p);
      }
    };
    for (std::size_t i = 0; i < existing; ++i) push(g.mul(elements[i], candidate));
    for (std::size_t i = existing; i < elements.size(); ++i) {
      for (Elem gen : gens) push(g.mul(elements[i], gen));
    }
  }
  return out;
}

inline ElementSet group_center(const FiniteGroup& g) {
  ElementSet z(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (std::size_t x = 0; x < g.order() && central; ++x) {
      central = g.commutes(static_cast<Elem>(a), static_cast<Elem>(x));
    }
    if (central) z.insert(static_cast<Elem>(a));
  }
  return z;
}

/// Subgroup generated by all [a, b] with a in `left`, b in `right`.
inline ElementSet commutator_subgroup(const FiniteGroup& g, const ElementSet& left, const ElementSet& right) {
  ElementSet comms(g.order());
  const auto rm = right.members();
  for (Elem a : left.members()) {
    for (Elem b : rm) comms.insert(g.comm(a, b));
  }
  return subgroup_generated(g, comms);
}

inline ElementSet derived_subgroup(const FiniteGroup& g) {
  const auto all = ElementSet::all(g.order());
  return commutator_subgroup(g, all, all);
}

/// gamma_1 = G, gamma_{i+1} = <[gamma_i, G]> until the series stabilises.
/// The last entry is either {1} or the stalled term.
inline std::vector<ElementSet> lower_central_series(const FiniteGroup& g) {
  const auto all = ElementSet::all(g.order());
  std::vector<ElementSet> series{all};
  while (series.back().size() > 1) {
    ElementSet next = commutator_subgroup(g, series.back(), all);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

/// Nilpotency class, or nullopt when the lower central series stalls above {1}.
/// The trivial group has class 0.
inline std::optional<int> nilpotency_class(const FiniteGroup& g) {
  const auto series = lower_central_series(g);
  if (series.back().size() != 1) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

/// lcm of the element orders of a subgroup.
inline std::size_t subset_exponent(const FiniteGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) throw Error(ErrorCode::NotASubgroup, "subset is not closed under product and inverse");
  std::size_t e = 1;
  for (Elem a : s.members()) e = std::lcm(e, g.element_order(a));
  return e;
}

inline std::size_t group_exponent(const FiniteGroup& g) { return subset_exponent(g, ElementSet::all(g.order())); }

/// [[x,y],y] = 1 for all x, y.
inline bool is_two_engel(const FiniteGroup& g) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t y = 0; y < g.order(); ++y) {
      const Elem c = g.comm(static_cast<Elem>(x), static_cast<Elem>(y));
      if (g.comm(c, static_cast<Elem>(y)) != 0) return false;
    }
  }
  return true;
}

/// First (g, n) with g n g^-1 outside n_set, or nullopt when normal.
inline std::optional<std::pair<Elem, Elem>> normality_witness(const FiniteGroup& g, const ElementSet& n_set) {
  const auto members = n_set.members();
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Elem xe = static_cast<Elem>(x);
    for (Elem a : members) {
      if (!n_set.contains(g.mul(g.mul(xe, a), g.inv(xe)))) return std::pair{xe, a};
    }
  }
  return std::nullopt;
}

inline bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s) {
  return is_subgroup(g, s) && !normality_witness(g, s);
}

struct GroupQuotient {
  FiniteGroup group;
  /// element of G -> coset index
  std::vector<Elem> projection;
  /// coset index -> least element of the coset
  std::vector<Elem> representatives;
};

/// G/N with cosets labeled by their least element; the identity coset is 0.
inline GroupQuotient quotient_group(const FiniteGroup& g, const ElementSet& n_set) {
  if (!is_subgroup(g, n_set)) throw Error(ErrorCode::NotASubgroup, "quotient by a non-subgroup");
  if (auto w = normality_witness(g, n_set)) {
    throw Error(ErrorCode::NotNormal, "conjugate of " + std::to_string(w->second) + " by " +
                                          std::to_string(w->first) + " leaves the subgroup");
  }
  const std::size_t n = g.order();
  constexpr Elem kUnassigned = 0xFFFF;
  std::vector<Elem> proj(n, kUnassigned);
  std::vector<Elem> reps;
  const auto members = n_set.members();
  for (std::size_t x = 0; x < n; ++x) {
    if (proj[x] != kUnassigned) continue;
    const Elem c = static_cast<Elem>(reps.size());
    reps.push_back(static_cast<Elem>(x));
    for (Elem a : members) proj[g.mul(static_cast<Elem>(x), a)] = c;
  }
  const std::size_t q = reps.size();
  std::vector<Elem> table(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = proj[g.mul(reps[i], reps[j])];
  }
  std::vector<std::string> names;
  names.reserve(q);
  for (Elem r : reps) names.push_back(r == 0 ? std::string("1") : "[" + g.name(r) + "]");
  return GroupQuotient{FiniteGroup::from_trusted_table(q, std::move(table), std::move(names), g.label() + "/N"),
                       std::move(proj), std::move(reps)};
}

/// A x B with (a, b) stored at index a + |A| b.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap = kDefaultOrderCap) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  const std::size_t n = na * nb;
  if (n > std::min(cap, kMaxTableOrder)) {
    throw Error(ErrorCode::OrderCapExceeded, "product order " + std::to_string(n) + " exceeds cap");
  }
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t pa = a.mul(static_cast<Elem>(i % na), static_cast<Elem>(j % na));
      const std::size_t pb = b.mul(static_cast<Elem>(i / na), static_cast<Elem>(j / na));
      table[i * n + j] = static_cast<Elem>(pa + na * pb);
    }
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i == 0 ? std::string("1")
                           : "(" + a.name(static_cast<Elem>(i % na)) + "," + b.name(static_cast<Elem>(i / na)) + ")");
  }
  return FiniteGroup::from_trusted_table(n, std::move(table), std::move(names),
                                         "product:" + a.label() + "," + b.label());
}

struct EmbeddedSubgroup {
  FiniteGroup group;
  /// local index -> index in the ambient group
  std::vector<Elem> embedding;
  /// ambient index -> local index, or -1
  std::vector<int> local;
};

/// A subgroup as a standalone group; local index 0 is the identity and the
/// remaining members keep their ambient order.
inline EmbeddedSubgroup embedded_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) throw Error(ErrorCode::NotASubgroup, "cannot embed a non-subgroup");
  std::vector<Elem> emb = s.members();
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < emb.size(); ++i) local[emb[i]] = static_cast<int>(i);
  const std::size_t m = emb.size();
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = static_cast<Elem>(local[g.mul(emb[i], emb[j])]);
  }
  std::vector<std::string> names;
  for (Elem e : emb) names.push_back(g.name(e));
  return EmbeddedSubgroup{FiniteGroup::from_trusted_table(m, std::move(table), std::move(names), g.label() + "|sub"),
                          std::move(emb), std::move(local)};
}

/// Returns the first failing associativity triple of a (supposedly) group
/// table, for re-asserting the invariant in tests.
inline std::optional<std::array<Elem, 3>> associativity_witness(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Elem ij = g.mul(static_cast<Elem>(i), static_cast<Elem>(j));
      for (std::size_t k = 0; k < n; ++k) {
        if (g.mul(ij, static_cast<Elem>(k)) !=
            g.mul(static_cast<Elem>(i), g.mul(static_cast<Elem>(j), static_cast<Elem>(k)))) {
          return std::array<Elem, 3>{static_cast<Elem>(i), static_cast<Elem>(j), static_cast<Elem>(k)};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace gyrolab
