#pragma once

// Slow reference implementations. Everything here works on plain integer
// tables with linear searches and std::set, sharing no code with the library.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<int>>;
using Perm = std::vector<int>;
using Set = std::set<int>;

inline int order(const Table& t) { return static_cast<int>(t.size()); }

inline int identity(const Table& t) {
  for (int e = 0; e < order(t); ++e) {
    bool ok = true;
    for (int x = 0; x < order(t) && ok; ++x) ok = t[e][x] == x && t[x][e] == x;
    if (ok) return e;
  }
  return -1;
}

inline int inv(const Table& t, int x) {
  const int e = identity(t);
  for (int y = 0; y < order(t); ++y) {
    if (t[x][y] == e) return y;
  }
  return -1;
}

inline int power(const Table& t, int x, int k) {
  int r = identity(t);
  for (int i = 0; i < k; ++i) r = t[r][x];
  return r;
}

/// x y x^-1 y^-1
inline int comm(const Table& t, int x, int y) { return t[t[t[x][y]][inv(t, x)]][inv(t, y)]; }

/// x o y = y^-1 x y^2
inline Table circ(const Table& t) {
  const int n = order(t);
  Table c(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) c[x][y] = t[t[inv(t, y)][x]][t[y][y]];
  }
  return c;
}

/// Permutation closure by breadth-first search; composition (p q)(i) = p(q(i)).
inline std::vector<Perm> closure(const std::vector<Perm>& gens, std::size_t degree) {
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<int>(i);
  std::vector<Perm> out{id};
  std::set<Perm> seen{id};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : gens) {
      Perm p(degree);
      for (std::size_t i = 0; i < degree; ++i) p[i] = out[k][g[i]];
      if (seen.insert(p).second) out.push_back(p);
    }
  }
  return out;
}

/// Cayley table of a permutation group, identity first.
inline Table perm_table(const std::vector<Perm>& gens, std::size_t degree) {
  const auto elems = closure(gens, degree);
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Perm p(degree);
      for (std::size_t i = 0; i < degree; ++i) p[i] = elems[a][elems[b][i]];
      t[a][b] = index.at(p);
    }
  }
  return t;
}

/// The dihedral group of order 2m acting on the vertices of an m-gon.
inline Table dihedral(int m) {
  Perm r(m);
  Perm s(m);
  for (int i = 0; i < m; ++i) {
    r[i] = (i + 1) % m;
    s[i] = (m - i) % m;
  }
  return perm_table({r, s}, m);
}

inline bool is_associative(const Table& t) {
  const int n = order(t);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[x][t[y][z]]) return false;
  return true;
}

inline bool is_latin(const Table& t) {
  const int n = order(t);
  for (int i = 0; i < n; ++i) {
    Set row(t[i].begin(), t[i].end());
    Set col;
    for (int j = 0; j < n; ++j) col.insert(t[j][i]);
    if (static_cast<int>(row.size()) != n || static_cast<int>(col.size()) != n) return false;
  }
  return true;
}

inline Set group_center(const Table& t) {
  Set z;
  for (int a = 0; a < order(t); ++a) {
    bool ok = true;
    for (int x = 0; x < order(t) && ok; ++x) ok = t[a][x] == t[x][a];
    if (ok) z.insert(a);
  }
  return z;
}

inline Set generated(const Table& t, const Set& s) {
  Set out{identity(t)};
  out.insert(s.begin(), s.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const Set snapshot = out;
    for (int a : snapshot)
      for (int b : snapshot) grew |= out.insert(t[a][b]).second;
  }
  return out;
}

inline int nilpotency_class(const Table& t) {
  Set term;
  for (int x = 0; x < order(t); ++x) term.insert(x);
  for (int c = 0; c <= order(t); ++c) {
    if (term.size() == 1) return c;
    Set next;
    for (int x : term)
      for (int y = 0; y < order(t); ++y) next.insert(comm(t, x, y));
    next = generated(t, next);
    if (next == term) return -1;
    term = next;
  }
  return -1;
}

enum class Nuc { Left, Middle, Right };

inline Set nucleus(const Table& l, Nuc kind) {
  Set out;
  const int n = order(l);
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        if (kind == Nuc::Left) ok = l[l[a][x]][y] == l[a][l[x][y]];
        if (kind == Nuc::Middle) ok = l[l[x][a]][y] == l[x][l[a][y]];
        if (kind == Nuc::Right) ok = l[l[x][y]][a] == l[x][l[y][a]];
      }
    }
    if (ok) out.insert(a);
  }
  return out;
}

inline Set commutant(const Table& l) {
  Set out;
  for (int a = 0; a < order(l); ++a) {
    bool ok = true;
    for (int x = 0; x < order(l) && ok; ++x) ok = l[a][x] == l[x][a];
    if (ok) out.insert(a);
  }
  return out;
}

inline Set intersect(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline Set loop_center(const Table& l) {
  return intersect(commutant(l), intersect(nucleus(l, Nuc::Left), intersect(nucleus(l, Nuc::Middle),
                                                                                nucleus(l, Nuc::Right))));
}

/// Solution x of x o a = b by search.
inline int solve_right(const Table& l, int a, int b) {
  for (int x = 0; x < order(l); ++x) {
    if (l[x][a] == b) return x;
  }
  return -1;
}

/// Quotient by a normal subloop, cosets keyed by their least element.
inline Table quotient(const Table& l, const Set& n, std::vector<int>* proj_out = nullptr) {
  const int sz = order(l);
  std::vector<int> proj(sz, -1);
  std::vector<int> reps;
  for (int x = 0; x < sz; ++x) {
    if (proj[x] >= 0) continue;
    for (int a : n) proj[l[x][a]] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  const int q = static_cast<int>(reps.size());
  Table t(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) t[i][j] = proj[l[reps[i]][reps[j]]];
  if (proj_out) *proj_out = proj;
  return t;
}

/// Loop class via the upper central series; -1 if it stalls.
inline int loop_class(const Table& l) {
  const int n = order(l);
  Set z{0};
  for (int c = 0; c <= n; ++c) {
    if (static_cast<int>(z.size()) == n) return c;
    std::vector<int> proj;
    const Table q = quotient(l, z, &proj);
    const Set zq = loop_center(q);
    Set next;
    for (int x = 0; x < n; ++x) {
      if (zq.count(proj[x])) next.insert(x);
    }
    if (next == z) return -1;
    z = next;
  }
  return -1;
}

/// Gyration f(y,z) by search: (x o y) o z = f(x) o (y o z).
inline Perm gyration(const Table& l, int y, int z) {
  Perm p(l.size());
  for (int x = 0; x < order(l); ++x) p[x] = solve_right(l, l[y][z], l[l[x][y]][z]);
  return p;
}

inline bool is_gyrogroup(const Table& l) {
  const int n = order(l);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Perm f = gyration(l, a, b);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (f[l[x][y]] != l[f[x]][f[y]]) return false;
      const Perm g = gyration(l, l[a][b], a);
      for (int x = 0; x < n; ++x)
        if (g[f[x]] != x) return false;
    }
  }
  return true;
}

/// |Inn(L)| as the stabilizer of the identity in Mlt(L), and |Mlt(L)|.
inline std::pair<std::size_t, std::size_t> inn_and_mlt_order(const Table& l) {
  const int n = order(l);
  std::vector<Perm> gens;
  for (int x = 0; x < n; ++x) {
    Perm left(n);
    Perm right(n);
    for (int y = 0; y < n; ++y) {
      left[y] = l[x][y];
      right[y] = l[y][x];
    }
    gens.push_back(left);
    gens.push_back(right);
  }
  const auto mlt = closure(gens, n);
  std::size_t stab = 0;
  for (const auto& p : mlt) stab += p[0] == 0 ? 1 : 0;
  return {stab, mlt.size()};
}

inline bool inn_abelian(const Table& l) {
  const int n = order(l);
  std::vector<Perm> gens;
  for (int x = 0; x < n; ++x) {
    Perm left(n);
    Perm right(n);
    for (int y = 0; y < n; ++y) {
      left[y] = l[x][y];
      right[y] = l[y][x];
    }
    gens.push_back(left);
    gens.push_back(right);
  }
  std::vector<Perm> inn;
  for (const auto& p : closure(gens, n)) {
    if (p[0] == 0) inn.push_back(p);
  }
  for (const auto& p : inn) {
    for (const auto& q : inn) {
      for (int i = 0; i < n; ++i)
        if (p[q[i]] != q[p[i]]) return false;
    }
  }
  return true;
}

/// Least (x,y,z) with [[x,y],z]^9 != [x,[y,z]]^9.
inline std::optional<std::vector<int>> nine_witness(const Table& t) {
  const int n = order(t);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (power(t, comm(t, comm(t, x, y), z), 9) != power(t, comm(t, x, comm(t, y, z)), 9))
          return std::vector<int>{x, y, z};
  return std::nullopt;
}

/// Loop commutator w with x o y = w o (y o x).
inline int loop_commutator(const Table& l, int x, int y) { return solve_right(l, l[y][x], l[x][y]); }

inline bool bracket_associative(const Table& l) {
  const int n = order(l);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (loop_commutator(l, loop_commutator(l, x, y), z) != loop_commutator(l, x, loop_commutator(l, y, z)))
          return false;
  return true;
}

}  // namespace oracle

namespace oracle {

/// The three coset conditions for a subloop n; 0 when normal, else the
/// first failing condition.
inline int normality_condition(const Table& l, const Set& n) {
  const int sz = order(l);
  auto right_coset = [&](int x) {
    Set s;
    for (int a : n) s.insert(l[x][a]);
    return s;
  };
  auto left_coset = [&](int x) {
    Set s;
    for (int a : n) s.insert(l[a][x]);
    return s;
  };
  for (int x = 0; x < sz; ++x)
    if (right_coset(x) != left_coset(x)) return 1;
  for (int x = 0; x < sz; ++x) {
    for (int y = 0; y < sz; ++y) {
      Set lhs;
      for (int e : right_coset(y)) lhs.insert(l[x][e]);
      if (lhs != right_coset(l[x][y])) return 2;
      Set rhs;
      for (int e : left_coset(x)) rhs.insert(l[e][y]);
      if (rhs != left_coset(l[x][y])) return 3;
    }
  }
  return 0;
}

}  // namespace oracle
