#pragma once

#include <array>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "group.hpp"

namespace gyrolab {

/// Catalog spec strings understood by catalog_group. Generator conventions:
///
///   cyclic:n            element k is g^k.
///   dihedral:2m         element k < m is r^k, element m+k is s r^k;
///                       s r s^-1 = r^-1, s^2 = 1.
///   quaternion:2^k      same layout with m = 2^(k-1); s r s^-1 = r^-1,
///                       s^2 = r^(m/2).
///   semidihedral:2^k    same layout; s r s^-1 = r^(m/2 - 1), s^2 = 1.
///   heisenberg:p        3x3 upper unitriangular over F_p; entries
///                       (a12,a13,a23) stored in mixed radix p, so x = index 1
///                       and y = index p^2 generate and [x,y] = index p.
///   unitriangular4:p    4x4 upper unitriangular over F_p; entries
///                       (a12,a13,a14,a23,a24,a34) stored in mixed radix p.
///   wreath33            C3 wr C3 = (v, k) with v in (Z/3)^3, k in Z/3,
///                       (v, k)(w, l) = (v + shift_k(w), k + l),
///                       shift_k(w)_i = w_{i-k}; index v0 + 3 v1 + 9 v2 + 27 k.
///   product:A,B         A x B, index a + |A| b. B may itself be a product.
inline const std::vector<std::string>& catalog_specs() {
  static const std::vector<std::string> specs{
      "trivial",        "cyclic:n",          "dihedral:2n",   "quaternion:2^k", "semidihedral:2^k",
      "heisenberg:p",   "unitriangular4:p",  "wreath33",      "product:specA,specB",
  };
  return specs;
}

namespace detail {

inline std::size_t parse_count(std::string_view text, std::string_view spec) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw Error(ErrorCode::UnknownSpec, "bad numeric parameter in '" + std::string(spec) + "'");
  }
  return value;
}

inline bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

inline bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

inline std::string power_name(std::string_view base, std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return std::string(base);
  return std::string(base) + "^" + std::to_string(k);
}

inline void check_cap(std::size_t order, std::size_t cap, std::string_view spec) {
  if (order > std::min(cap, kMaxTableOrder)) {
    throw Error(ErrorCode::OrderCapExceeded,
                "'" + std::string(spec) + "' has order " + std::to_string(order) + " above cap " + std::to_string(cap));
  }
}

/// Groups r^i, s r^i (i < m) with r^i s = s r^(i t) and s^2 = r^c, where t^2 = 1 mod m.
inline FiniteGroup metacyclic_two_generator(std::size_t m, std::size_t t, std::size_t c, std::string label) {
  const std::size_t n = 2 * m;
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const bool xs = x >= m;
    const std::size_t i = x % m;
    for (std::size_t y = 0; y < n; ++y) {
      const bool ys = y >= m;
      const std::size_t j = y % m;
      std::size_t out = 0;
      if (!xs && !ys) {
        out = (i + j) % m;
      } else if (!xs && ys) {
        out = m + (i * t + j) % m;
      } else if (xs && !ys) {
        out = m + (i + j) % m;
      } else {
        out = (c + i * t + j) % m;
      }
      table[x * n + y] = static_cast<Elem>(out);
    }
  }
  std::vector<std::string> names;
  for (std::size_t k = 0; k < m; ++k) names.push_back(power_name("r", k));
  for (std::size_t k = 0; k < m; ++k) names.push_back(k == 0 ? std::string("s") : "s" + power_name("r", k));
  return FiniteGroup::from_trusted_table(n, std::move(table), std::move(names), std::move(label));
}

/// Upper unitriangular d x d matrices over F_p, entries above the diagonal in
/// row-major order, stored in mixed radix p.
inline FiniteGroup unitriangular(std::size_t d, std::size_t p, std::string label, std::size_t cap) {
  const std::size_t slots = d * (d - 1) / 2;
  std::size_t n = 1;
  for (std::size_t k = 0; k < slots; ++k) n *= p;
  check_cap(n, cap, label);
  std::vector<std::array<std::size_t, 2>> pos;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = r + 1; c < d; ++c) pos.push_back({r, c});
  }
  auto decode = [&](std::size_t idx) {
    std::vector<std::size_t> m(d * d, 0);
    for (std::size_t r = 0; r < d; ++r) m[r * d + r] = 1;
    for (std::size_t k = 0; k < slots; ++k) {
      m[pos[k][0] * d + pos[k][1]] = idx % p;
      idx /= p;
    }
    return m;
  };
  std::vector<std::vector<std::size_t>> mats(n);
  for (std::size_t i = 0; i < n; ++i) mats[i] = decode(i);
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t idx = 0;
      std::size_t radix = 1;
      for (std::size_t k = 0; k < slots; ++k) {
        const std::size_t r = pos[k][0];
        const std::size_t c = pos[k][1];
        std::size_t v = 0;
        for (std::size_t l = r; l <= c; ++l) v += mats[i][r * d + l] * mats[j][l * d + c];
        idx += (v % p) * radix;
        radix *= p;
      }
      table[i * n + j] = static_cast<Elem>(idx);
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      names.emplace_back("1");
      continue;
    }
    std::string s = "[";
    std::size_t idx = i;
    for (std::size_t k = 0; k < slots; ++k) {
      if (k) s += ",";
      s += std::to_string(idx % p);
      idx /= p;
    }
    names.push_back(s + "]");
  }
  return FiniteGroup::from_trusted_table(n, std::move(table), std::move(names), std::move(label));
}

inline FiniteGroup wreath_c3_c3() {
  constexpr std::size_t n = 81;
  auto decode = [](std::size_t idx) {
    return std::array<std::size_t, 4>{idx % 3, (idx / 3) % 3, (idx / 9) % 3, idx / 27};
  };
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto a = decode(x);
    for (std::size_t y = 0; y < n; ++y) {
      const auto b = decode(y);
      std::size_t idx = 0;
      std::size_t radix = 1;
      for (std::size_t i = 0; i < 3; ++i) {
        idx += ((a[i] + b[(i + 3 - a[3]) % 3]) % 3) * radix;
        radix *= 3;
      }
      idx += ((a[3] + b[3]) % 3) * 27;
      table[x * n + y] = static_cast<Elem>(idx);
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = decode(i);
    names.push_back(i == 0 ? std::string("1")
                           : "(" + std::to_string(a[0]) + std::to_string(a[1]) + std::to_string(a[2]) + ";" +
                                 std::to_string(a[3]) + ")");
  }
  return FiniteGroup::from_trusted_table(n, std::move(table), std::move(names), "wreath33");
}

}  // namespace detail

/// Builds a named group from a catalog spec string (see catalog_specs).
inline FiniteGroup catalog_group(std::string_view spec, std::size_t cap = kDefaultOrderCap) {
  const std::string label(spec);
  if (spec == "trivial") return FiniteGroup();
  if (spec == "wreath33") return detail::wreath_c3_c3();

  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorCode::UnknownSpec, "'" + label + "'");
  const std::string_view family = spec.substr(0, colon);
  const std::string_view arg = spec.substr(colon + 1);

  if (family == "product") {
    const auto comma = arg.find(',');
    if (comma == std::string_view::npos) throw Error(ErrorCode::UnknownSpec, "product needs two factors: '" + label + "'");
    const FiniteGroup a = catalog_group(arg.substr(0, comma), cap);
    const FiniteGroup b = catalog_group(arg.substr(comma + 1), cap);
    return direct_product(a, b, cap).relabeled(label);
  }

  const std::size_t v = detail::parse_count(arg, spec);
  if (family == "cyclic") {
    if (v == 0) throw Error(ErrorCode::UnknownSpec, "cyclic order must be positive");
    detail::check_cap(v, cap, spec);
    std::vector<Elem> table(v * v);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < v; ++i) {
      names.push_back(detail::power_name("g", i));
      for (std::size_t j = 0; j < v; ++j) table[i * v + j] = static_cast<Elem>((i + j) % v);
    }
    return FiniteGroup::from_trusted_table(v, std::move(table), std::move(names), label);
  }
  if (family == "dihedral") {
    if (v < 2 || v % 2 != 0) throw Error(ErrorCode::UnknownSpec, "dihedral order must be even: '" + label + "'");
    detail::check_cap(v, cap, spec);
    const std::size_t m = v / 2;
    return detail::metacyclic_two_generator(m, m - 1, 0, label);
  }
  if (family == "quaternion") {
    if (v < 8 || !detail::is_power_of_two(v)) {
      throw Error(ErrorCode::UnknownSpec, "quaternion order must be 2^k with k >= 3: '" + label + "'");
    }
    detail::check_cap(v, cap, spec);
    const std::size_t m = v / 2;
    return detail::metacyclic_two_generator(m, m - 1, m / 2, label);
  }
  if (family == "semidihedral") {
    if (v < 16 || !detail::is_power_of_two(v)) {
      throw Error(ErrorCode::UnknownSpec, "semidihedral order must be 2^k with k >= 4: '" + label + "'");
    }
    detail::check_cap(v, cap, spec);
    const std::size_t m = v / 2;
    return detail::metacyclic_two_generator(m, m / 2 - 1, 0, label);
  }
  if (family == "heisenberg") {
    if (!detail::is_prime(v)) throw Error(ErrorCode::UnknownSpec, "heisenberg needs a prime: '" + label + "'");
    return detail::unitriangular(3, v, label, cap);
  }
  if (family == "unitriangular4") {
    if (!detail::is_prime(v)) throw Error(ErrorCode::UnknownSpec, "unitriangular4 needs a prime: '" + label + "'");
    return detail::unitriangular(4, v, label, cap);
  }
  throw Error(ErrorCode::UnknownSpec, "'" + label + "'");
}

}  // namespace gyrolab
