#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "error.hpp"
#include "group.hpp"
#include "gyro.hpp"
#include "loop.hpp"

namespace gyrolab {

enum class TransversalPolicy { LeastIndex, Random };

/// Coset representatives for a central subgroup Z, normalized so that the
/// identity coset is represented by the identity.
struct Transversal {
  EmbeddedSubgroup kernel;
  GroupQuotient quotient;
  /// quotient index -> element of G
  std::vector<Elem> rep;

  std::size_t quotient_order() const noexcept { return rep.size(); }
  Elem project(Elem g) const noexcept { return quotient.projection[g]; }
};

inline Transversal make_transversal(const FiniteGroup& g, const ElementSet& z,
                                    TransversalPolicy policy = TransversalPolicy::LeastIndex,
                                    std::uint64_t seed = 0) {
  if (!is_subgroup(g, z)) throw Error(ErrorCode::NotASubgroup, "transversal needs a subgroup");
  const ElementSet center = group_center(g);
  for (Elem a : z.members()) {
    if (!center.contains(a)) throw Error(ErrorCode::NotCentral, "element " + std::to_string(a) + " is not central");
  }
  Transversal t{embedded_subgroup(g, z), quotient_group(g, z), {}};
  t.rep = t.quotient.representatives;
  if (policy == TransversalPolicy::Random) {
    std::mt19937_64 rng(seed);
    const auto members = z.members();
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    for (std::size_t q = 1; q < t.rep.size(); ++q) t.rep[q] = g.mul(t.rep[q], members[pick(rng)]);
  }
  return t;
}

/// Normalized 2-cocycle Q x Q -> Z with values as local indices of Z.
struct FactorSet {
  EmbeddedSubgroup kernel;
  std::size_t quotient_order = 0;
  std::vector<Elem> values;

  Elem at(Elem x, Elem y) const noexcept { return values[static_cast<std::size_t>(x) * quotient_order + y]; }
};

/// Same layout, for the loop o(G/Z).
struct GyroFactorSet {
  EmbeddedSubgroup kernel;
  std::size_t quotient_order = 0;
  std::vector<Elem> values;

  Elem at(Elem x, Elem y) const noexcept { return values[static_cast<std::size_t>(x) * quotient_order + y]; }
};

/// Least (x, y, z) violating f(x,y) f(xy,z) = f(y,z) f(x,yz).
inline std::optional<std::array<Elem, 3>> cocycle_defect(const FactorSet& f, const FiniteGroup& q) {
  const FiniteGroup& z = f.kernel.group;
  const std::size_t n = f.quotient_order;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem xe = static_cast<Elem>(x);
      const Elem ye = static_cast<Elem>(y);
      for (std::size_t w = 0; w < n; ++w) {
        const Elem we = static_cast<Elem>(w);
        if (z.mul(f.at(xe, ye), f.at(q.mul(xe, ye), we)) != z.mul(f.at(ye, we), f.at(xe, q.mul(ye, we)))) {
          return std::array<Elem, 3>{xe, ye, we};
        }
      }
    }
  }
  return std::nullopt;
}

/// f(x, y) = rep(x) rep(y) rep(xy)^-1, so that (a rep x)(b rep y) = a b f(x,y) rep(xy).
inline FactorSet factor_set(const FiniteGroup& g, const Transversal& t) {
  const std::size_t n = t.quotient_order();
  const FiniteGroup& q = t.quotient.group;
  FactorSet f{t.kernel, n, std::vector<Elem>(n * n)};
  const ElementSet center = group_center(g);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem xy = q.mul(static_cast<Elem>(x), static_cast<Elem>(y));
      const Elem v = g.mul(g.mul(t.rep[x], t.rep[y]), g.inv(t.rep[xy]));
      const int local = t.kernel.local[v];
      if (local < 0 || !center.contains(v)) {
        throw Error(ErrorCode::ValueOutsideCenter, "f" + detail::cell(x, y) + " = " + std::to_string(v));
      }
      f.values[x * n + y] = static_cast<Elem>(local);
    }
  }
  if (f.at(0, 0) != 0) throw Error(ErrorCode::InvalidArgument, "transversal is not normalized");
  if (auto bad = cocycle_defect(f, q)) {
    throw Error(ErrorCode::NotCentral, "cocycle identity fails at (" + std::to_string((*bad)[0]) + "," +
                                           std::to_string((*bad)[1]) + "," + std::to_string((*bad)[2]) + ")");
  }
  return f;
}

/// of(x, y) = f(y, y^-1)^-1 f(y^-1, x) f(y, y) f(y^-1 x, y^2), evaluated in Z
/// with the group operations of Q = G/Z.
inline GyroFactorSet gyro_factor_set(const FactorSet& f, const FiniteGroup& q) {
  if (q.order() != f.quotient_order) throw Error(ErrorCode::DimensionMismatch, "quotient order mismatch");
  const FiniteGroup& z = f.kernel.group;
  const std::size_t n = f.quotient_order;
  GyroFactorSet cf{f.kernel, n, std::vector<Elem>(n * n)};
  for (std::size_t x = 0; x < n; ++x) {
    const Elem xe = static_cast<Elem>(x);
    for (std::size_t y = 0; y < n; ++y) {
      const Elem ye = static_cast<Elem>(y);
      const Elem yi = q.inv(ye);
      Elem v = z.inv(f.at(ye, yi));
      v = z.mul(v, f.at(yi, xe));
      v = z.mul(v, f.at(ye, ye));
      v = z.mul(v, f.at(q.mul(yi, xe), q.mul(ye, ye)));
      cf.values[x * n + y] = v;
    }
  }
  return cf;
}

inline GyroFactorSet gyro_factor_set(const FactorSet& f, const Transversal& t) {
  return gyro_factor_set(f, t.quotient.group);
}

/// Loop on pairs (a, x) stored at a + |Z| x with
/// (a, x) o (b, y) = (a o b o cf(x, y), x o y), where a o b = b^-1 a b^2 in Z
/// and x o y is read from q_part.
inline FiniteLoop build_gyro_extension(const FiniteGroup& z_part, const FiniteLoop& q_part, const GyroFactorSet& cf) {
  if (cf.kernel.group.order() != z_part.order() || cf.quotient_order != q_part.order()) {
    throw Error(ErrorCode::DimensionMismatch, "factor set does not match the kernel and quotient sizes");
  }
  const std::size_t nz = z_part.order();
  const std::size_t nq = q_part.order();
  const std::size_t n = nz * nq;
  auto circ = [&](Elem a, Elem b) { return z_part.mul(z_part.mul(z_part.inv(b), a), z_part.mul(b, b)); };
  std::vector<Elem> table(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    const Elem a = static_cast<Elem>(u % nz);
    const Elem x = static_cast<Elem>(u / nz);
    for (std::size_t v = 0; v < n; ++v) {
      const Elem b = static_cast<Elem>(v % nz);
      const Elem y = static_cast<Elem>(v / nz);
      const Elem c = circ(circ(a, b), cf.at(x, y));
      table[u * n + v] = static_cast<Elem>(c + nz * q_part.mul(x, y));
    }
  }
  return FiniteLoop::build(n, std::move(table), {}, "extension", LoopMode::Lenient);
}

struct IsomorphismCheck {
  bool ok = true;
  /// first violated cell (u, v) of the built loop, or a colliding pair.
  std::optional<std::pair<Elem, Elem>> witness;
  std::string detail;
};

/// Checks that (a, x) -> a rep(x) is a loop isomorphism from `built` onto `target`.
inline IsomorphismCheck verify_extension_isomorphism(const FiniteGroup& g, const FiniteLoop& built,
                                                     const FiniteLoop& target, const Transversal& t) {
  if (built.order() != target.order() || target.order() != g.order()) {
    return {false, std::nullopt, "orders differ"};
  }
  const std::size_t nz = t.kernel.group.order();
  const std::size_t n = built.order();
  std::vector<Elem> phi(n);
  std::vector<int> seen(n, -1);
  for (std::size_t u = 0; u < n; ++u) {
    phi[u] = g.mul(t.kernel.embedding[u % nz], t.rep[u / nz]);
    if (seen[phi[u]] >= 0) {
      return {false, std::pair{static_cast<Elem>(seen[phi[u]]), static_cast<Elem>(u)}, "map is not injective"};
    }
    seen[phi[u]] = static_cast<int>(u);
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (phi[built.mul(static_cast<Elem>(u), static_cast<Elem>(v))] != target.mul(phi[u], phi[v])) {
        return {false, std::pair{static_cast<Elem>(u), static_cast<Elem>(v)},
                "phi(u o v) != phi(u) o phi(v) at cell " + detail::cell(u, v)};
      }
    }
  }
  return {};
}

/// tau(x) = rep2(x) rep1(x)^-1 as local indices of Z; both transversals must
/// come from the same quotient labeling.
inline std::vector<Elem> induced_tau(const FiniteGroup& g, const Transversal& t1, const Transversal& t2) {
  if (t1.quotient_order() != t2.quotient_order()) throw Error(ErrorCode::DimensionMismatch, "transversal sizes");
  std::vector<Elem> tau(t1.quotient_order());
  for (std::size_t x = 0; x < tau.size(); ++x) {
    const int local = t1.kernel.local[g.mul(t2.rep[x], g.inv(t1.rep[x]))];
    if (local < 0) throw Error(ErrorCode::ValueOutsideCenter, "representatives differ outside the kernel");
    tau[x] = static_cast<Elem>(local);
  }
  return tau;
}

struct CoboundaryResult {
  bool holds = true;
  /// per (x, y), row-major
  std::vector<bool> cells;
  std::optional<std::pair<Elem, Elem>> first_failure;
};

namespace detail {

template <typename Table, typename Correction>
CoboundaryResult relate(const Table& f, const Table& g, const std::vector<Elem>& tau, const Correction& correction) {
  const FiniteGroup& z = f.kernel.group;
  const std::size_t n = f.quotient_order;
  if (g.quotient_order != n || tau.size() != n || g.kernel.group.order() != z.order()) {
    throw Error(ErrorCode::DimensionMismatch, "factor sets and tau must share Q and Z");
  }
  if (tau[0] != 0) throw Error(ErrorCode::InvalidArgument, "tau must be normalized");
  CoboundaryResult r;
  r.cells.assign(n * n, true);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem xe = static_cast<Elem>(x);
      const Elem ye = static_cast<Elem>(y);
      const Elem expected = z.mul(z.mul(z.mul(tau[x], tau[y]), f.at(xe, ye)), z.inv(tau[correction(xe, ye)]));
      if (g.at(xe, ye) != expected) {
        r.cells[x * n + y] = false;
        if (r.holds) r.first_failure = std::pair{xe, ye};
        r.holds = false;
      }
    }
  }
  return r;
}

}  // namespace detail

/// g(x, y) = tau(x) tau(y) f(x, y) tau(x y)^-1 for every pair.
inline CoboundaryResult coboundary_relate(const FactorSet& f, const FactorSet& g, const std::vector<Elem>& tau,
                                          const FiniteGroup& q) {
  return detail::relate(f, g, tau, [&](Elem x, Elem y) { return q.mul(x, y); });
}

/// Which product of Q indexes the tau correction term in the loop relation.
enum class TauCorrection {
  /// tau(x o y)^-1, the product of o(G/Z).
  LoopProduct,
  /// tau(x y)^-1, the product of G/Z.
  GroupProduct,
};

/// og(x, y) = tau(x) o tau(y) o of(x, y) o tau(x * y)^-1, with * chosen by
/// `correction`. Z is abelian so o agrees with the product there.
inline CoboundaryResult gyro_coboundary_relate(const GyroFactorSet& cf, const GyroFactorSet& cg,
                                               const std::vector<Elem>& tau, const FiniteGroup& q,
                                               TauCorrection correction = TauCorrection::LoopProduct) {
  if (correction == TauCorrection::GroupProduct) {
    return detail::relate(cf, cg, tau, [&](Elem x, Elem y) { return q.mul(x, y); });
  }
  return detail::relate(cf, cg, tau,
                        [&](Elem x, Elem y) { return q.mul(q.mul(q.inv(y), x), q.mul(y, y)); });
}

/// Factor set obtained from f by the coboundary of tau.
inline FactorSet apply_coboundary(const FactorSet& f, const std::vector<Elem>& tau, const FiniteGroup& q) {
  const FiniteGroup& z = f.kernel.group;
  FactorSet g = f;
  const std::size_t n = f.quotient_order;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem xy = q.mul(static_cast<Elem>(x), static_cast<Elem>(y));
      g.values[x * n + y] = z.mul(z.mul(z.mul(tau[x], tau[y]), f.at(static_cast<Elem>(x), static_cast<Elem>(y))),
                                  z.inv(tau[xy]));
    }
  }
  return g;
}

/// The full pipeline for Z = Z(G): transversal, f, of, rebuilt loop and the
/// isomorphism check against oG.
struct ExtensionPipeline {
  Transversal transversal;
  FactorSet factors;
  GyroFactorSet gyro_factors;
  FiniteLoop rebuilt;
  IsomorphismCheck check;
};

inline ExtensionPipeline run_extension_pipeline(const FiniteGroup& g,
                                                TransversalPolicy policy = TransversalPolicy::LeastIndex,
                                                std::uint64_t seed = 0) {
  Transversal t = make_transversal(g, group_center(g), policy, seed);
  FactorSet f = factor_set(g, t);
  GyroFactorSet cf = gyro_factor_set(f, t);
  FiniteLoop rebuilt = build_gyro_extension(t.kernel.group, circ_loop(t.quotient.group), cf);
  IsomorphismCheck check = verify_extension_isomorphism(g, rebuilt, circ_loop(g), t);
  return {std::move(t), std::move(f), std::move(cf), std::move(rebuilt), std::move(check)};
}

}  // namespace gyrolab
