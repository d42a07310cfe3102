#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specgraph/bitset.hpp"
#include "specgraph/error.hpp"

namespace specgraph {

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n, Bitset(n)) {}

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw InvalidArgument("self-loops are not allowed");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++edges_;
  }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  const Bitset& neighbours(std::size_t u) const { return adj_[u]; }
  std::size_t degree(std::size_t u) const { return adj_[u].count(); }

  /// Edges (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edges_);
    for (std::size_t u = 0; u < adj_.size(); ++u)
      adj_[u].for_each([&](std::size_t v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  /// Graph with the given edge list on n vertices.
  static Graph from_edges(std::size_t n,
                          const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  static Graph complete_bipartite(std::size_t a, std::size_t b) {
    Graph g(a + b);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
  }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<Bitset> adj_;
  std::size_t edges_ = 0;
};

/// Distances are nullopt for "infinite".
struct GraphReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool connected = true;
  std::optional<std::size_t> diameter;
  std::size_t finite_diameter = 0;
  std::optional<std::size_t> girth;
  bool bipartite = true;
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> bipartition;
  bool complete_bipartite = false;
  std::vector<std::size_t> degrees;
  /// Set by the SpecGraph overload for disjointness graphs: two classes of
  /// equal V^m-sets forming a valid bipartition.
  std::optional<bool> complete_bipartite_by_classes;

  bool has_cycle() const { return girth.has_value(); }
};

/// BFS distances from s; unreachable vertices get nullopt.
inline std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, std::size_t s) {
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<std::size_t>> dist(n);
  Bitset visited(n), frontier(n);
  visited.set(s);
  frontier.set(s);
  dist[s] = 0;
  for (std::size_t d = 1; frontier.any(); ++d) {
    Bitset next(n);
    frontier.for_each([&](std::size_t u) { next |= g.neighbours(u); });
    next -= visited;
    next.for_each([&](std::size_t v) { dist[v] = d; });
    visited |= next;
    frontier = std::move(next);
  }
  return dist;
}

namespace detail {

// Shortest cycle length by BFS from each vertex; used once triangles and
// 4-cycles are ruled out, when the graph is sparse.
inline std::optional<std::size_t> girth_by_bfs(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> lists(n);
  for (std::size_t u = 0; u < n; ++u) lists[u] = g.neighbours(u).positions();
  std::optional<std::size_t> best;
  std::vector<std::size_t> dist(n), parent(n);
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), unseen);
    dist[s] = 0;
    parent[s] = unseen;
    std::deque<std::size_t> q{s};
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop_front();
      for (std::size_t v : lists[u]) {
        if (dist[v] == unseen) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push_back(v);
        } else if (parent[u] != v) {
          const std::size_t len = dist[u] + dist[v] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace detail

/// Shortest cycle length, nullopt when acyclic.
inline std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (std::size_t u = 0; u < n; ++u) {
    bool tri = false;
    g.neighbours(u).for_each([&](std::size_t v) {
      if (!tri && u < v && g.neighbours(u).intersects(g.neighbours(v))) tri = true;
    });
    if (tri) return 3;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = u + 1; w < n; ++w)
      if (g.neighbours(u).intersection_count(g.neighbours(w)) >= 2) return 4;
  return detail::girth_by_bfs(g);
}

/// Proper 2-colouring (colour 0 / 1 per vertex), or nullopt when none exists.
inline std::optional<std::vector<int>> two_colouring(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> colour(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<std::size_t> q{s};
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop_front();
      bool ok = true;
      g.neighbours(u).for_each([&](std::size_t v) {
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          q.push_back(v);
        } else if (colour[v] == colour[u]) {
          ok = false;
        }
      });
      if (!ok) return std::nullopt;
    }
  }
  return colour;
}

/// Connectivity, diameter, girth, bipartiteness and degree table.
inline GraphReport analyze(const Graph& g) {
  GraphReport r;
  const std::size_t n = g.vertex_count();
  r.vertex_count = n;
  r.edge_count = g.edge_count();
  for (std::size_t u = 0; u < n; ++u) r.degrees.push_back(g.degree(u));

  for (std::size_t s = 0; s < n; ++s) {
    const auto dist = bfs_distances(g, s);
    for (const auto& d : dist) {
      if (!d)
        r.connected = false;
      else
        r.finite_diameter = std::max(r.finite_diameter, *d);
    }
  }
  if (n > 0 && r.connected) r.diameter = r.finite_diameter;
  r.girth = girth(g);

  if (auto colour = two_colouring(g)) {
    r.bipartite = true;
    std::vector<std::size_t> u, v;
    for (std::size_t i = 0; i < n; ++i) ((*colour)[i] == 0 ? u : v).push_back(i);
    r.complete_bipartite = r.connected && !u.empty() && !v.empty() &&
                           r.edge_count == u.size() * v.size();
    r.bipartition = std::make_pair(std::move(u), std::move(v));
  } else {
    r.bipartite = false;
  }
  return r;
}

inline constexpr std::size_t kMaxSearchVertices = 24;

/// Whether phi (vertex map G1 -> G2) is injective and sends edges to edges.
inline bool is_embedding(const Graph& g1, const Graph& g2, const std::vector<std::size_t>& phi) {
  if (phi.size() != g1.vertex_count()) return false;
  Bitset used(g2.vertex_count());
  for (std::size_t x : phi) {
    if (x >= g2.vertex_count() || used.test(x)) return false;
    used.set(x);
  }
  for (auto [u, v] : g1.edges())
    if (!g2.adjacent(phi[u], phi[v])) return false;
  return true;
}

/// Whether phi is a bijection with u ~ v iff phi(u) ~ phi(v).
inline bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<std::size_t>& phi) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
  return is_embedding(g1, g2, phi);  // injective + equal edge counts forces edge bijection
}

namespace detail {

inline bool extend_map(const Graph& g1, const Graph& g2, bool induced, std::size_t next,
                       std::vector<std::size_t>& phi, Bitset& used) {
  if (next == g1.vertex_count()) return true;
  for (std::size_t x = 0; x < g2.vertex_count(); ++x) {
    if (used.test(x) || g2.degree(x) < g1.degree(next)) continue;
    if (induced && g2.degree(x) != g1.degree(next)) continue;
    bool ok = true;
    for (std::size_t u = 0; u < next && ok; ++u) {
      const bool e1 = g1.adjacent(u, next);
      const bool e2 = g2.adjacent(phi[u], x);
      ok = induced ? e1 == e2 : (!e1 || e2);
    }
    if (!ok) continue;
    phi[next] = x;
    used.set(x);
    if (extend_map(g1, g2, induced, next + 1, phi, used)) return true;
    used.reset(x);
  }
  return false;
}

}  // namespace detail

/// An injective map sending every edge of g1 to an edge of g2 (g1 is
/// isomorphic to a subgraph of g2), found by backtracking.
inline std::optional<std::vector<std::size_t>> subgraph_embedding(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() > kMaxSearchVertices)
    throw SearchBoundExceeded("embedding search is limited to " +
                              std::to_string(kMaxSearchVertices) + " vertices");
  if (g1.vertex_count() > g2.vertex_count() || g1.edge_count() > g2.edge_count()) return std::nullopt;
  std::vector<std::size_t> phi(g1.vertex_count());
  Bitset used(g2.vertex_count());
  if (detail::extend_map(g1, g2, false, 0, phi, used)) return phi;
  return std::nullopt;
}

inline std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() > kMaxSearchVertices)
    throw SearchBoundExceeded("isomorphism search is limited to " +
                              std::to_string(kMaxSearchVertices) + " vertices");
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return std::nullopt;
  std::vector<std::size_t> phi(g1.vertex_count());
  Bitset used(g2.vertex_count());
  if (detail::extend_map(g1, g2, true, 0, phi, used)) return phi;
  return std::nullopt;
}

inline bool graphs_isomorphic(const Graph& g1, const Graph& g2) {
  return find_isomorphism(g1, g2).has_value();
}

}  // namespace specgraph
