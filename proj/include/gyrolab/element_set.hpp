#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "error.hpp"

namespace gyrolab {

/// Index of an element in a Cayley table. Tables never exceed 65535 rows.
using Elem = std::uint16_t;

constexpr std::size_t kMaxTableOrder = 65535;

/// Subset of {0, ..., n-1}; used as the handle for subgroups, subloops and
/// nuclei. Membership is O(1).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe, false) {}

  ElementSet(std::size_t universe, std::initializer_list<Elem> members) : bits_(universe, false) {
    for (Elem m : members) insert(m);
  }

  static ElementSet all(std::size_t universe) {
    ElementSet s;
    s.bits_.assign(universe, true);
    s.count_ = universe;
    return s;
  }

  static ElementSet identity_only(std::size_t universe) { return ElementSet(universe, {0}); }

  template <typename Range>
  static ElementSet from(std::size_t universe, const Range& members) {
    ElementSet s(universe);
    for (auto m : members) s.insert(static_cast<Elem>(m));
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  bool full() const noexcept { return count_ == bits_.size(); }

  bool contains(std::size_t e) const noexcept { return e < bits_.size() && bits_[e]; }

  void insert(Elem e) {
    if (e >= bits_.size()) {
      throw Error(ErrorCode::InvalidArgument,
                  "element " + std::to_string(e) + " outside universe of size " + std::to_string(bits_.size()));
    }
    if (!bits_[e]) {
      bits_[e] = true;
      ++count_;
    }
  }

  void erase(Elem e) {
    if (contains(e)) {
      bits_[e] = false;
      --count_;
    }
  }

  std::vector<Elem> members() const {
    std::vector<Elem> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i]) out.push_back(static_cast<Elem>(i));
    }
    return out;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    if (other.universe() != universe()) return false;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] && !other.bits_[i]) return false;
    }
    return true;
  }

  ElementSet intersect(const ElementSet& other) const {
    ElementSet out(universe());
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] && other.contains(i)) out.insert(static_cast<Elem>(i));
    }
    return out;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept { return a.bits_ == b.bits_; }

 private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

}  // namespace gyrolab
