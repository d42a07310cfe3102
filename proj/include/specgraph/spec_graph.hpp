#pragma once

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "specgraph/graph.hpp"
#include "specgraph/spectrum.hpp"

namespace specgraph {

enum class GraphKind { zariski_max, zariski_spec, zariski_max_disjoint, annihilating };

inline std::string to_string(GraphKind k) {
  switch (k) {
    case GraphKind::zariski_max: return "zariski_max";
    case GraphKind::zariski_spec: return "zariski_spec";
    case GraphKind::zariski_max_disjoint: return "zariski_max_disjoint";
    case GraphKind::annihilating: return "annihilating";
  }
  return "unknown";
}

/// Which submodules may serve as the partner L that makes N a vertex of a
/// Zariski graph. any_proper admits L = 0; nonzero_proper does not.
enum class PartnerRule { any_proper, nonzero_proper };

/// One of the four graphs over the submodule lattice of a module.
/// vertices holds lattice indices in ascending order; graph vertex i is
/// vertices[i]. subset is T (positions in Max(M), or in Spec(M) for
/// zariski_spec) and has size 0 for the annihilating graph.
struct SpecGraph {
  GraphKind kind = GraphKind::zariski_max;
  std::shared_ptr<const Spectrum> spectrum;
  Bitset subset;
  std::vector<std::size_t> vertices;
  Graph graph;

  bool empty() const { return vertices.empty(); }

  std::optional<std::size_t> position_of(std::size_t lattice_index) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), lattice_index);
    if (it == vertices.end() || *it != lattice_index) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
  }
  bool has_vertex(std::size_t lattice_index) const { return position_of(lattice_index).has_value(); }
  bool adjacent(std::size_t a, std::size_t b) const {
    auto pa = position_of(a), pb = position_of(b);
    return pa && pb && graph.adjacent(*pa, *pb);
  }
};

namespace detail {

// Shared construction of the three Zariski graphs. Adjacency depends on
// the closed set of each submodule only, so candidates are grouped into
// classes of equal closed sets and class pairs are tested once.
inline SpecGraph build_cover_graph(std::shared_ptr<const Spectrum> spec, GraphKind kind,
                                   const Bitset& t, PartnerRule rule) {
  const Spectrum& s = *spec;
  const SubmoduleLattice& lat = s.lattice();
  const bool over_spec = kind == GraphKind::zariski_spec;
  const std::size_t universe = over_spec ? s.spec().size() : s.max_spec().size();
  if (t.size() != universe) throw InvalidArgument("subset does not match the spectrum size");
  if (t.none()) throw EmptySubset("graph requested for an empty subset T");

  auto closed = [&](std::size_t i) -> const Bitset& {
    return over_spec ? s.v_closed(i) : s.vm_closed(i);
  };

  std::vector<Bitset> class_mask;
  std::vector<std::vector<std::size_t>> members;
  std::unordered_map<Bitset, std::size_t, BitsetHash> class_of;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (!lat.is_proper(i)) continue;
    const Bitset& c = closed(i);
    if (c == t || !c.is_subset_of(t)) continue;
    auto [it, inserted] = class_of.emplace(c, class_mask.size());
    if (inserted) {
      class_mask.push_back(c);
      members.emplace_back();
    }
    members[it->second].push_back(i);
  }

  const std::size_t k = class_mask.size();
  std::vector<std::vector<bool>> linked(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if ((class_mask[a] | class_mask[b]) != t) continue;
      if (kind == GraphKind::zariski_max_disjoint && class_mask[a].intersects(class_mask[b]))
        continue;
      linked[a][b] = true;
    }

  auto partner_count = [&](std::size_t b) {
    std::size_t c = members[b].size();
    if (rule == PartnerRule::nonzero_proper && !members[b].empty() &&
        members[b].front() == lat.zero_index())
      --c;
    return c;
  };

  std::vector<std::size_t> verts;
  std::vector<std::size_t> vclass;
  for (std::size_t a = 0; a < k; ++a) {
    bool has_partner = false;
    for (std::size_t b = 0; b < k && !has_partner; ++b)
      if (linked[a][b] && partner_count(b) > 0) has_partner = true;
    if (!has_partner) continue;
    for (std::size_t i : members[a]) verts.push_back(i);
  }
  std::sort(verts.begin(), verts.end());

  SpecGraph g;
  g.kind = kind;
  g.spectrum = std::move(spec);
  g.subset = t;
  g.vertices = verts;
  g.graph = Graph(verts.size());
  vclass.reserve(verts.size());
  for (std::size_t i : verts) vclass.push_back(class_of.at(closed(i)));
  for (std::size_t u = 0; u < verts.size(); ++u)
    for (std::size_t v = u + 1; v < verts.size(); ++v)
      if (linked[vclass[u]][vclass[v]]) g.graph.add_edge(u, v);
  return g;
}

}  // namespace detail

/// Zariski topology-graph on Max(M) for a non-empty T ⊆ Max(M): N < M is a
/// vertex when some proper L ≠ N has V^m(N) ∪ V^m(L) = T with neither equal
/// to T; distinct vertices are adjacent when their V^m-sets cover T.
inline SpecGraph build_zariski_max(std::shared_ptr<const Spectrum> spec, const Bitset& t,
                                   PartnerRule rule = PartnerRule::any_proper) {
  return detail::build_cover_graph(std::move(spec), GraphKind::zariski_max, t, rule);
}

/// The same construction over Spec(M) with V in place of V^m.
inline SpecGraph build_zariski_spec(std::shared_ptr<const Spectrum> spec, const Bitset& t,
                                    PartnerRule rule = PartnerRule::any_proper) {
  return detail::build_cover_graph(std::move(spec), GraphKind::zariski_spec, t, rule);
}

/// Subgraph of build_zariski_max whose edges additionally need disjoint
/// V^m-sets.
inline SpecGraph build_zariski_max_disjoint(std::shared_ptr<const Spectrum> spec, const Bitset& t,
                                            PartnerRule rule = PartnerRule::any_proper) {
  return detail::build_cover_graph(std::move(spec), GraphKind::zariski_max_disjoint, t, rule);
}

/// Annihilating-submodule graph: non-zero N ≤ M (M included) such that
/// NK = 0 for some non-zero proper K; distinct vertices N, L are adjacent
/// when NL = 0. K = N is allowed, so a vertex can be isolated.
inline SpecGraph build_annihilating(std::shared_ptr<const Spectrum> spec) {
  const SubmoduleLattice& lat = spec->lattice();
  const u64 exp = lat.module().exponent();
  auto kills = [&](std::size_t a, std::size_t b) {
    return (lat.colon_divisor(a) * lat.colon_divisor(b)) % exp == 0;
  };
  std::vector<std::size_t> verts;
  for (std::size_t n = 1; n < lat.size(); ++n) {
    for (std::size_t k = 1; k < lat.top_index(); ++k)
      if (kills(n, k)) {
        verts.push_back(n);
        break;
      }
  }
  SpecGraph g;
  g.kind = GraphKind::annihilating;
  g.spectrum = std::move(spec);
  g.vertices = verts;
  g.graph = Graph(verts.size());
  for (std::size_t u = 0; u < verts.size(); ++u)
    for (std::size_t v = u + 1; v < verts.size(); ++v)
      if (kills(verts[u], verts[v])) g.graph.add_edge(u, v);
  return g;
}

/// analyze() on the underlying graph; for disjointness graphs additionally
/// decides complete-bipartiteness from the V^m-classes of the vertices.
inline GraphReport analyze(const SpecGraph& g) {
  GraphReport r = analyze(g.graph);
  if (g.kind == GraphKind::zariski_max_disjoint) {
    std::vector<Bitset> classes;
    for (std::size_t i : g.vertices) {
      const Bitset& c = g.spectrum->vm_closed(i);
      if (std::find(classes.begin(), classes.end(), c) == classes.end()) classes.push_back(c);
    }
    bool complete = classes.size() == 2;
    if (complete) {
      for (std::size_t u = 0; u < g.vertices.size() && complete; ++u)
        for (std::size_t v = u + 1; v < g.vertices.size() && complete; ++v) {
          const bool same = g.spectrum->vm_closed(g.vertices[u]) == g.spectrum->vm_closed(g.vertices[v]);
          if (same == g.graph.adjacent(u, v)) complete = false;
        }
    }
    r.complete_bipartite_by_classes = complete;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Export

inline nlohmann::json module_json(const FinModule& m) {
  return {{"ring", {{"modulus", m.ring().modulus()}}},
          {"module", {{"invariant_factors", std::vector<u64>(m.invariant_factors().begin(),
                                                             m.invariant_factors().end())}}}};
}

inline nlohmann::json generators_json(const FinModule& m, const Submodule& s) {
  nlohmann::json out = nlohmann::json::array();
  for (Code c : generators(m, s)) out.push_back(m.decode(c).coordinates);
  return out;
}

inline nlohmann::json optional_json(const std::optional<std::size_t>& v) {
  if (v) return *v;
  return "inf";
}

inline nlohmann::json report_json(const GraphReport& r) {
  nlohmann::json j{{"vertex_count", r.vertex_count},
                   {"edge_count", r.edge_count},
                   {"connected", r.connected},
                   {"diameter", optional_json(r.diameter)},
                   {"finite_diameter", r.finite_diameter},
                   {"girth", optional_json(r.girth)},
                   {"bipartite", r.bipartite},
                   {"complete_bipartite", r.complete_bipartite},
                   {"degrees", r.degrees}};
  if (r.bipartition) j["bipartition"] = {r.bipartition->first, r.bipartition->second};
  if (r.complete_bipartite_by_classes) j["complete_bipartite_by_classes"] = *r.complete_bipartite_by_classes;
  return j;
}

/// Submodule indices listed by a subset bitset.
inline std::vector<std::size_t> subset_indices(const SpecGraph& g) {
  std::vector<std::size_t> out;
  const Spectrum& s = *g.spectrum;
  g.subset.for_each([&](std::size_t p) {
    out.push_back(g.kind == GraphKind::zariski_spec ? s.spec()[p].submodule : s.max_spec()[p]);
  });
  return out;
}

/// JSON document {kind, module, T, vertices:[{id, generators, vm_set}], edges}
/// with vertices sorted by submodule index.
inline nlohmann::json to_json(const SpecGraph& g) {
  const Spectrum& s = *g.spectrum;
  const FinModule& m = s.module();
  nlohmann::json verts = nlohmann::json::array();
  for (std::size_t i : g.vertices) {
    std::vector<std::size_t> vm;
    s.vm_closed(i).for_each([&](std::size_t q) { vm.push_back(s.max_spec()[q]); });
    verts.push_back({{"id", i}, {"generators", generators_json(m, s.lattice()[i])}, {"vm_set", vm}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.graph.edges()) edges.push_back({g.vertices[u], g.vertices[v]});
  return {{"schema_version", 1},
          {"kind", to_string(g.kind)},
          {"module", module_json(m)},
          {"T", subset_indices(g)},
          {"vertices", verts},
          {"edges", edges}};
}

inline std::string to_dot(const SpecGraph& g) {
  const Spectrum& s = *g.spectrum;
  const FinModule& m = s.module();
  std::ostringstream os;
  os << "graph " << to_string(g.kind) << " {\n";
  os << "  label=\"" << m.to_string() << "\";\n";
  os << "  node [shape=box];\n";
  for (std::size_t i : g.vertices)
    os << "  n" << i << " [label=\"" << i << ": " << generators_string(m, s.lattice()[i]) << "\"];\n";
  for (auto [u, v] : g.graph.edges()) os << "  n" << g.vertices[u] << " -- n" << g.vertices[v] << ";\n";
  os << "}\n";
  return os.str();
}

/// Serialises g as "dot" or "json".
inline std::string export_graph(const SpecGraph& g, const std::string& format) {
  if (format == "dot") return to_dot(g);
  if (format == "json") return to_json(g).dump(2) + "\n";
  throw UnsupportedFormat("unsupported export format '" + format + "' (expected dot or json)");
}

}  // namespace specgraph
