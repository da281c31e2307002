#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "element_set.hpp"
#include "error.hpp"
#include "group.hpp"

namespace gyrolab {

/// Bijection on {0..n-1} stored as its image array. Maps act on the left:
/// compose(f, g)(x) = f(g(x)).
class PermMap {
 public:
  PermMap() = default;

  static PermMap identity(std::size_t n) {
    PermMap p;
    p.images_.resize(n);
    std::iota(p.images_.begin(), p.images_.end(), Elem{0});
    return p;
  }

  /// Throws NotABijection when `images` repeats a point or leaves the range.
  explicit PermMap(std::vector<Elem> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (std::size_t x = 0; x < images_.size(); ++x) {
      const Elem y = images_[x];
      if (y >= images_.size() || hit[y]) {
        throw Error(ErrorCode::NotABijection, "image of point " + std::to_string(x) + " repeats or is out of range");
      }
      hit[y] = true;
    }
  }

  std::size_t degree() const noexcept { return images_.size(); }
  const std::vector<Elem>& images() const noexcept { return images_; }
  Elem operator()(Elem x) const noexcept { return images_[x]; }

  bool is_identity() const noexcept {
    for (std::size_t x = 0; x < images_.size(); ++x) {
      if (images_[x] != x) return false;
    }
    return true;
  }

  PermMap inverse() const {
    PermMap out;
    out.images_.resize(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) out.images_[images_[x]] = static_cast<Elem>(x);
    return out;
  }

  friend PermMap compose(const PermMap& f, const PermMap& g) {
    PermMap out;
    out.images_.resize(g.images_.size());
    for (std::size_t x = 0; x < g.images_.size(); ++x) out.images_[x] = f.images_[g.images_[x]];
    return out;
  }

  friend bool operator==(const PermMap& a, const PermMap& b) noexcept { return a.images_ == b.images_; }

 private:
  std::vector<Elem> images_;
};

struct PermMapHash {
  std::size_t operator()(const PermMap& p) const noexcept { return detail::VectorHash{}(p.images()); }
};

}  // namespace gyrolab
