#pragma once

// Brute-force reference implementations used as test oracles. They work on
// a plain boolean matrix and quantify over subsets literally, sharing no
// code with the library beyond reading the order out of a FinitePoset.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orderkit/poset.hpp"

namespace oracle {

using Mask = std::uint64_t;

struct Order {
  int n = 0;
  std::vector<std::vector<bool>> le;

  bool leq(int a, int b) const { return le[a][b]; }
  Mask full() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
  Mask up(int x) const {
    Mask m = 0;
    for (int y = 0; y < n; ++y)
      if (le[x][y]) m |= Mask{1} << y;
    return m;
  }
  Mask down(int x) const {
    Mask m = 0;
    for (int y = 0; y < n; ++y)
      if (le[y][x]) m |= Mask{1} << y;
    return m;
  }
};

inline Order from(const orderkit::FinitePoset& p) {
  Order o;
  o.n = static_cast<int>(p.size());
  o.le.assign(o.n, std::vector<bool>(o.n));
  for (int a = 0; a < o.n; ++a)
    for (int b = 0; b < o.n; ++b) o.le[a][b] = p.leq(a, b);
  return o;
}

inline bool in(Mask m, int i) { return (m >> i) & 1U; }

inline Mask down_set(const Order& o, Mask s) {
  Mask r = 0;
  for (int i = 0; i < o.n; ++i)
    if (in(s, i)) r |= o.down(i);
  return r;
}

inline Mask up_set(const Order& o, Mask s) {
  Mask r = 0;
  for (int i = 0; i < o.n; ++i)
    if (in(s, i)) r |= o.up(i);
  return r;
}

inline bool is_upper(const Order& o, Mask s) { return up_set(o, s) == s; }

inline std::optional<int> sup(const Order& o, Mask s) {
  std::vector<int> ub;
  for (int u = 0; u < o.n; ++u) {
    bool ok = true;
    for (int i = 0; i < o.n && ok; ++i)
      if (in(s, i) && !o.leq(i, u)) ok = false;
    if (ok) ub.push_back(u);
  }
  for (int u : ub)
    if (std::all_of(ub.begin(), ub.end(), [&](int v) { return o.leq(u, v); })) return u;
  return std::nullopt;
}

inline std::optional<int> inf(const Order& o, Mask s) {
  std::vector<int> lb;
  for (int u = 0; u < o.n; ++u) {
    bool ok = true;
    for (int i = 0; i < o.n && ok; ++i)
      if (in(s, i) && !o.leq(u, i)) ok = false;
    if (ok) lb.push_back(u);
  }
  for (int u : lb)
    if (std::all_of(lb.begin(), lb.end(), [&](int v) { return o.leq(v, u); })) return u;
  return std::nullopt;
}

inline int join(const Order& o, int a, int b) { return *sup(o, (Mask{1} << a) | (Mask{1} << b)); }
inline int meet(const Order& o, int a, int b) { return *inf(o, (Mask{1} << a) | (Mask{1} << b)); }

inline bool is_lattice(const Order& o) {
  if (o.n == 0) return false;
  for (int a = 0; a < o.n; ++a)
    for (int b = 0; b < o.n; ++b)
      if (!sup(o, (Mask{1} << a) | (Mask{1} << b)) || !inf(o, (Mask{1} << a) | (Mask{1} << b))) return false;
  return true;
}

inline bool is_directed(const Order& o, Mask d) {
  if (d == 0) return false;
  for (int a = 0; a < o.n; ++a)
    for (int b = 0; b < o.n; ++b) {
      if (!in(d, a) || !in(d, b)) continue;
      bool bounded = false;
      for (int c = 0; c < o.n && !bounded; ++c) bounded = in(d, c) && o.leq(a, c) && o.leq(b, c);
      if (!bounded) return false;
    }
  return true;
}

/// x << y by the definition, quantifying over all directed subsets.
inline std::vector<std::vector<bool>> way_below(const Order& o) {
  std::vector<std::vector<bool>> r(o.n, std::vector<bool>(o.n, true));
  for (Mask d = 1; d <= o.full(); ++d) {
    if (!is_directed(o, d)) continue;
    auto s = sup(o, d);
    if (!s) continue;
    for (int x = 0; x < o.n; ++x)
      for (int y = 0; y < o.n; ++y)
        if (o.leq(y, *s) && !(up_set(o, Mask{1} << x) & d)) r[x][y] = false;
  }
  return r;
}

/// u <| v: every S with sup S >= v meets up(u). Lattices only.
inline std::vector<std::vector<bool>> way_way_below(const Order& o) {
  std::vector<std::vector<bool>> r(o.n, std::vector<bool>(o.n, true));
  for (Mask s = 0; s <= o.full(); ++s) {
    const int j = *sup(o, s);
    for (int u = 0; u < o.n; ++u)
      for (int v = 0; v < o.n; ++v)
        if (o.leq(v, j) && !(o.up(u) & s)) r[u][v] = false;
  }
  return r;
}

/// x prec y read literally for collections of one or two upper sets: if the
/// intersection of the collection lies in up(y), some nonempty
/// subcollection has its intersection in up(x). Upper sets are found by
/// testing every mask.
inline std::vector<std::vector<bool>> prec(const Order& o) {
  std::vector<Mask> uppers;
  for (Mask v = 0; v <= o.full(); ++v)
    if (is_upper(o, v)) uppers.push_back(v);
  auto inside = [](Mask v, Mask w) { return (v & ~w) == 0; };
  std::vector<std::vector<bool>> r(o.n, std::vector<bool>(o.n, true));
  for (std::size_t i = 0; i < uppers.size(); ++i)
    for (std::size_t j = i; j < uppers.size(); ++j) {
      const Mask a = uppers[i], b = uppers[j];
      for (int y = 0; y < o.n; ++y) {
        if (!inside(a & b, o.up(y))) continue;
        for (int x = 0; x < o.n; ++x) {
          const Mask ux = o.up(x);
          if (!inside(a, ux) && !inside(b, ux) && !inside(a & b, ux)) r[x][y] = false;
        }
      }
    }
  return r;
}

inline bool distributive(const Order& o) {
  for (int x = 0; x < o.n; ++x)
    for (int y = 0; y < o.n; ++y)
      for (int z = 0; z < o.n; ++z)
        if (meet(o, x, join(o, y, z)) != join(o, meet(o, x, y), meet(o, x, z))) return false;
  return true;
}

/// x join inf(S) = inf{x join s} for every x and every S.
inline bool join_continuous_all_sets(const Order& o) {
  for (int x = 0; x < o.n; ++x)
    for (Mask s = 0; s <= o.full(); ++s) {
      Mask js = 0;
      for (int i = 0; i < o.n; ++i)
        if (in(s, i)) js |= Mask{1} << join(o, x, i);
      if (join(o, x, *inf(o, s)) != *inf(o, js)) return false;
    }
  return true;
}

/// x meet sup(S) = sup{x meet s} for every x and every S.
inline bool frame_all_sets(const Order& o) {
  for (int x = 0; x < o.n; ++x)
    for (Mask s = 0; s <= o.full(); ++s) {
      Mask ms = 0;
      for (int i = 0; i < o.n; ++i)
        if (in(s, i)) ms |= Mask{1} << meet(o, x, i);
      if (meet(o, x, *sup(o, s)) != *sup(o, ms)) return false;
    }
  return true;
}

/// Every y is the sup of {x | r[x][y]}.
inline bool join_of_predecessors(const Order& o, const std::vector<std::vector<bool>>& r) {
  for (int y = 0; y < o.n; ++y) {
    Mask preds = 0;
    for (int x = 0; x < o.n; ++x)
      if (r[x][y]) preds |= Mask{1} << x;
    if (*sup(o, preds) != y) return false;
  }
  return true;
}

/// Scott-open sets by the definition: upper, and inaccessible by directed
/// sups.
inline std::vector<Mask> scott_opens(const Order& o) {
  std::vector<Mask> out;
  for (Mask u = 0; u <= o.full(); ++u) {
    if (!is_upper(o, u)) continue;
    bool open = true;
    for (Mask d = 1; d <= o.full() && open; ++d) {
      if (!is_directed(o, d)) continue;
      auto s = sup(o, d);
      if (s && in(u, *s) && !(d & u)) open = false;
    }
    if (open) out.push_back(u);
  }
  return out;
}

/// Relation matrix of an inclusion order on a family of masks.
inline Order inclusion_order(const std::vector<Mask>& family) {
  Order o;
  o.n = static_cast<int>(family.size());
  o.le.assign(o.n, std::vector<bool>(o.n));
  for (int a = 0; a < o.n; ++a)
    for (int b = 0; b < o.n; ++b) o.le[a][b] = (family[a] & ~family[b]) == 0;
  return o;
}

/// Lexicographically least relation code over all n! relabelings.
inline std::string brute_code(const Order& o) {
  std::vector<int> perm(o.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string code;
    for (int i = 0; i < o.n; ++i)
      for (int j = 0; j < o.n; ++j) code.push_back(o.leq(perm[i], perm[j]) ? '1' : '0');
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool brute_isomorphic(const Order& a, const Order& b) { return a.n == b.n && brute_code(a) == brute_code(b); }

/// Unlabeled posets on n points: every reflexive antisymmetric transitive
/// relation, deduplicated by brute_code. Practical for n <= 5.
inline std::vector<Order> all_posets(int n) {
  std::vector<std::pair<int, int>> offdiag;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) offdiag.emplace_back(a, b);
  std::map<std::string, Order> classes;
  const Mask total = Mask{1} << offdiag.size();
  for (Mask bits = 0; bits < total; ++bits) {
    Order o;
    o.n = n;
    o.le.assign(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i) o.le[i][i] = true;
    bool ok = true;
    for (std::size_t k = 0; k < offdiag.size(); ++k)
      if (in(bits, static_cast<int>(k))) {
        auto [a, b] = offdiag[k];
        if (o.le[b][a]) {
          ok = false;
          break;
        }
        o.le[a][b] = true;
      }
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c)
          if (o.le[a][b] && o.le[b][c] && !o.le[a][c]) ok = false;
    if (ok) classes.emplace(brute_code(o), o);
  }
  std::vector<Order> out;
  for (auto& [code, o] : classes) out.push_back(o);
  return out;
}

}  // namespace oracle
