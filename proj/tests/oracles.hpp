#pragma once

// Brute-force reference implementations used by the tests and the
// acceptance binary. They follow the definitions directly on an explicit
// addition table and share no algorithm with the library. Groups are
// limited to order 64 so that a subset of elements fits in one word.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using Tuple = std::vector<u64>;
using Mask = std::uint64_t;  // bit i = element i

inline constexpr std::size_t kMaxOrder = 64;

class Group {
 public:
  explicit Group(std::vector<u64> factors) : factors_(std::move(factors)) {
    elems_.push_back(Tuple(factors_.size(), 0));
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      std::vector<Tuple> next;
      for (const auto& t : elems_)
        for (u64 v = 0; v < factors_[i]; ++v) {
          Tuple u = t;
          u[i] = v;
          next.push_back(u);
        }
      elems_ = std::move(next);
    }
    if (elems_.size() > kMaxOrder) throw std::invalid_argument("oracle groups are limited to order 64");
    std::sort(elems_.begin(), elems_.end());
    for (std::size_t i = 0; i < elems_.size(); ++i) index_[elems_[i]] = static_cast<int>(i);
    const std::size_t n = elems_.size();
    add_.assign(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Tuple c(factors_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = (elems_[a][i] + elems_[b][i]) % factors_[i];
        add_[a][b] = index_.at(c);
      }
  }

  std::size_t order() const { return elems_.size(); }
  u64 exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  Mask everything() const { return order() == 64 ? ~Mask{0} : (Mask{1} << order()) - 1; }
  int index(const Tuple& t) const { return index_.at(t); }
  const Tuple& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
  int add(int a, int b) const { return add_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

  /// r·x as the r-fold sum x + ... + x.
  int scale(u64 r, int x) const {
    int acc = 0;
    for (u64 k = 0; k < r % exponent(); ++k) acc = add(acc, x);
    return acc;
  }

  /// Smallest set containing gens and 0 that is closed under addition
  /// (finite, so it is a subgroup): S ← S ∪ (S + S) until stable.
  Mask closure(Mask gens) const {
    Mask s = gens | 1;
    for (;;) {
      Mask next = s;
      for (Mask a = s; a; a &= a - 1)
        for (Mask b = s; b; b &= b - 1) next |= Mask{1} << add(std::countr_zero(a), std::countr_zero(b));
      if (next == s) return s;
      s = next;
    }
  }

  /// Image of a set under x ↦ r·x.
  Mask scaled_set(u64 r, Mask s) const {
    Mask out = 0;
    for (; s; s &= s - 1) out |= Mask{1} << scale(r, std::countr_zero(s));
    return out;
  }

 private:
  std::vector<u64> factors_;
  std::vector<Tuple> elems_;
  std::map<Tuple, int> index_;
  std::vector<std::vector<int>> add_;
};

inline bool contains_all(Mask big, Mask small) { return (small & ~big) == 0; }

/// Every subgroup, by repeatedly adjoining single elements to known
/// subgroups starting from 0.
inline std::set<Mask> all_subgroups(const Group& g) {
  std::set<Mask> found{1};
  std::vector<Mask> work{1};
  while (!work.empty()) {
    const Mask h = work.back();
    work.pop_back();
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (h >> x & 1) continue;
      const Mask j = g.closure(h | Mask{1} << x);
      if (found.insert(j).second) work.push_back(j);
    }
  }
  return found;
}

/// Every subgroup as the additive closure of every subset of elements.
/// Exponential; only for groups of order at most about 14.
inline std::set<Mask> subgroups_by_subsets(const Group& g) {
  std::set<Mask> found;
  for (Mask subset = 0; subset <= g.everything(); ++subset) found.insert(g.closure(subset));
  return found;
}

/// {r in 0..exp-1 : rM ⊆ N}; every integer acts through r mod exp(M).
inline std::vector<u64> colon_residues(const Group& g, Mask n) {
  std::vector<u64> out;
  for (u64 r = 0; r < g.exponent(); ++r)
    if (contains_all(n, g.scaled_set(r, g.everything()))) out.push_back(r);
  return out;
}

/// Positive generator of the colon ideal in Z: the least positive r with rM ⊆ N.
inline u64 colon_divisor(const Group& g, Mask n) {
  for (u64 r = 1;; ++r)
    if (contains_all(n, g.scaled_set(r, g.everything()))) return r;
}

/// Prime submodule by definition: proper, and r·x in P forces x in P or rM ⊆ P.
inline bool is_prime_submodule(const Group& g, Mask p) {
  if (p == g.everything()) return false;
  for (u64 r = 0; r < g.exponent(); ++r) {
    if (contains_all(p, g.scaled_set(r, g.everything()))) continue;
    for (std::size_t x = 0; x < g.order(); ++x)
      if ((p >> g.scale(r, static_cast<int>(x)) & 1) && !(p >> x & 1)) return false;
  }
  return true;
}

/// Maximal elements of the poset of proper subgroups.
inline std::vector<Mask> maximal_subgroups(const Group& g, const std::set<Mask>& subs) {
  std::vector<Mask> out;
  for (Mask s : subs) {
    if (s == g.everything()) continue;
    bool maximal = true;
    for (Mask t : subs)
      if (t != g.everything() && t != s && contains_all(t, s)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(s);
  }
  return out;
}

/// (N:M)(K:M)M from the definition: the subgroup generated by all a·b·x.
inline Mask product(const Group& g, const std::vector<u64>& colon_n, const std::vector<u64>& colon_k) {
  std::set<u64> scalars;
  for (u64 a : colon_n)
    for (u64 b : colon_k) scalars.insert(a * b % g.exponent());
  Mask gens = 0;
  for (u64 r : scalars) gens |= g.scaled_set(r, g.everything());
  return g.closure(gens);
}

/// Nilpotent residues of Z/m.
inline std::vector<u64> nilpotents(u64 m) {
  std::vector<u64> out;
  for (u64 x = 0; x < m; ++x) {
    u64 p = x % m;
    for (int k = 0; k < 64 && p != 0; ++k) p = p * x % m;
    if (p == 0) out.push_back(x);
  }
  return out;
}

/// Whether Z/m has an idempotent other than 0 and 1.
inline bool has_nontrivial_idempotent(u64 m) {
  for (u64 x = 2; x < m; ++x)
    if (x * x % m == x) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Graphs on adjacency matrices

using Matrix = std::vector<std::vector<bool>>;

/// All-pairs distances by Floyd–Warshall; -1 is infinite.
inline std::vector<std::vector<long>> distances(const Matrix& a) {
  const std::size_t n = a.size();
  const long inf = 1L << 40;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j]) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return d;
}

/// Shortest cycle: for every edge, the shortest path between its ends
/// avoiding that edge, plus one.
inline std::optional<std::size_t> girth(const Matrix& a) {
  const std::size_t n = a.size();
  std::optional<std::size_t> best;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!a[u][v]) continue;
      Matrix b = a;
      b[u][v] = b[v][u] = false;
      const long d = distances(b)[u][v];
      if (d > 0 && (!best || static_cast<std::size_t>(d + 1) < *best)) best = static_cast<std::size_t>(d + 1);
    }
  return best;
}

/// Bipartite by trying every 2-colouring; n at most about 20.
inline bool bipartite(const Matrix& a) {
  const std::size_t n = a.size();
  for (u64 mask = 0; mask < (u64{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v)
        if (a[u][v] && ((mask >> u & 1) == (mask >> v & 1))) ok = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace oracle
