#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "specgraph/instance.hpp"

namespace specgraph {

enum class Status { pass, fail, hypothesis_not_met, skipped };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::hypothesis_not_met: return "hypothesis-not-met";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

/// Result of one checker run. For failures detail is the witness.
struct Outcome {
  Status status = Status::pass;
  nlohmann::json detail = nlohmann::json::object();
};

inline Outcome pass(nlohmann::json detail = nlohmann::json::object()) { return {Status::pass, std::move(detail)}; }
inline Outcome fail(nlohmann::json witness) { return {Status::fail, std::move(witness)}; }
inline Outcome not_met(const std::string& reason) {
  return {Status::hypothesis_not_met, {{"reason", reason}}};
}
inline Outcome skipped(const std::string& reason) { return {Status::skipped, {{"reason", reason}}}; }

/// Module-scope claims run once per module; subset-scope claims once per (M, T).
enum class Scope { module, subset };

struct Claim {
  std::string id;
  Scope scope;
  std::string statement;
  std::function<Outcome(Instance&)> check;
};

namespace claims {

using nlohmann::json;

inline u64 submodule_exponent(const FinModule& m, const Submodule& n) {
  u64 e = 1;
  for (Code c : n.members()) e = std::lcm(e, m.element_order(c));
  return e;
}

inline json refs(const SubmoduleLattice& lat, const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (std::size_t i : idx) out.push_back(submodule_ref(lat, i));
  return out;
}

inline bool closed_by_im(Instance& in) { return in.spec().vm_closed(in.im()) == in.subset(); }

/// Whether M/N is Max-surjective: every prime dividing exp(M/N) is the
/// index of a maximal submodule containing N.
inline bool quotient_max_surjective(const Spectrum& s, std::size_t n) {
  const auto& lat = s.lattice();
  for (u64 p : prime_factors(lat.colon_divisor(n))) {
    bool found = false;
    for (std::size_t q = 0; q < s.max_spec().size() && !found; ++q)
      found = s.max_prime(q) == p && lat[s.max_spec()[q]].contains(lat[n]);
    if (!found) return false;
  }
  return true;
}

/// Readings of "V(S) = T" for semi-maximal S.
enum class Reading { vm, v };

inline std::string to_string(Reading r) { return r == Reading::vm ? "vm" : "v"; }

/// Semi-maximal S ⊋ ℑ(T) whose closed set equals T under the given reading.
inline std::vector<std::size_t> semi_maximal_covering_t(Instance& in, Reading r) {
  const auto& s = in.spec();
  const auto& lat = in.lattice();
  const std::size_t im = in.im();
  const Bitset t_spec = s.max_as_spec_subset(in.subset());
  std::vector<std::size_t> out;
  for (std::size_t sm : in.semi_maximal()) {
    if (sm == im || !lat[sm].contains(lat[im])) continue;
    const bool hit = r == Reading::vm ? s.vm_closed(sm) == in.subset() : s.v_closed(sm) == t_spec;
    if (hit) out.push_back(sm);
  }
  return out;
}

/// The submodules mM for maximal ideals m = pR with p | exp(M), paired with
/// p. Every other maximal ideal gives mM = M.
inline std::vector<std::pair<u64, std::size_t>> maximal_ideal_multiples(const SubmoduleLattice& lat) {
  std::vector<std::pair<u64, std::size_t>> out;
  const FinModule& m = lat.module();
  for (u64 p : prime_factors(m.exponent()))
    if (m.ring().is_integers() || m.ring().modulus() % p == 0) out.emplace_back(p, lat.scaled_index(p));
  return out;
}

/// Standing hypothesis of the quotient-transfer statements: T = V^m(ℑ(T)).
inline std::optional<Outcome> require_closed(Instance& in) {
  if (!closed_by_im(in)) return not_met("T is not closed");
  return std::nullopt;
}

inline bool has_semi_maximal_neighbour(Instance& in, std::size_t q) {
  const auto& g = in.g();
  for (std::size_t sm : in.semi_maximal())
    if (g.adjacent(q, sm)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Zariski graph on Max(M)

inline Outcome lemma_3_2(Instance& in) {
  const bool nonempty = !in.g().empty();
  const bool closed = in.spec().is_closed(in.subset());
  const bool irreducible = in.spec().is_irreducible(in.subset());
  json d{{"nonempty", nonempty}, {"closed", closed}, {"irreducible", irreducible}};
  if (nonempty != (closed && !irreducible)) return fail(d);
  return pass(d);
}

inline Outcome remark_3_3(Instance& in) {
  const bool nonempty = !in.g().empty();
  const bool by_im = closed_by_im(in);
  const bool in_family = in.spec().is_closed_in_family(in.subset());
  const bool irreducible = in.spec().is_irreducible(in.subset());
  json d{{"nonempty", nonempty}, {"t_equals_vm_of_im", by_im},
         {"closed_in_family", in_family}, {"irreducible", irreducible}};
  if (by_im != in_family || nonempty != (by_im && !irreducible)) return fail(d);
  return pass(d);
}

inline Outcome remark_3_4(Instance& in) {
  const auto& s = in.spec();
  const bool surjective = s.is_max_surjective();
  const bool spec_max = s.spec_equals_max();
  if (!surjective && !spec_max) return not_met("M is neither Max-surjective nor Spec = Max");
  const bool nonempty = !in.g().empty();
  const bool by_im = closed_by_im(in);
  const Ideal colon = in.lattice().colon(in.im());
  const bool jm_prime = colon.is_prime() && jm_radical_ideal(colon) == colon;
  json d{{"nonempty", nonempty}, {"t_equals_vm_of_im", by_im},
         {"colon_of_im", colon.to_string()}, {"colon_is_j_radical_prime", jm_prime}};
  if (surjective && nonempty != (by_im && !jm_prime)) return fail(d);
  if (spec_max && nonempty) {
    const bool im_prime = s.is_prime(in.im());
    d["im_is_prime"] = im_prime;
    if (!by_im || im_prime) return fail(d);
  }
  return pass(d);
}

inline Outcome theorem_3_6(Instance& in) {
  if (in.g().empty()) return not_met("G is empty");
  const GraphReport& r = in.g_report();
  json d{{"report", report_json(r)}};
  if (!r.connected || !r.diameter || *r.diameter > 3) return fail(d);
  if (r.has_cycle() && *r.girth > 4) return fail(d);
  return pass({{"diameter", *r.diameter}, {"girth", optional_json(r.girth)}});
}

inline Outcome proposition_3_7(Instance& in) {
  const auto& s = in.spec();
  if (!s.is_natural_map_homeomorphism()) return not_met("the natural map is not a homeomorphism");
  const u64 e = in.module().exponent();
  const auto ring_side = in.cache().get(FinModule(Ring(e), {e}));
  const Spectrum& rs = ring_side->spec();
  Bitset t_ring(rs.max_spec().size());
  in.subset().for_each([&](std::size_t q) {
    for (std::size_t r = 0; r < rs.max_spec().size(); ++r)
      if (rs.max_prime(r) == s.max_prime(q)) t_ring.set(r);
  });
  const SpecGraph g_ring = build_zariski_max(ring_side->spectrum, t_ring);
  const SpecGraph& g = in.g();
  const auto& lat = in.lattice();
  const auto& rlat = rs.lattice();

  for (auto [u, v] : g.graph.edges()) {
    const std::size_t n = g.vertices[u], l = g.vertices[v];
    const std::size_t a = rlat.scaled_index(lat.colon_divisor(n));
    const std::size_t b = rlat.scaled_index(lat.colon_divisor(l));
    if (!g_ring.adjacent(a, b))
      return fail({{"direction", "module-to-ring"}, {"edge", refs(lat, {n, l})},
                   {"ring_images", {rlat.colon_divisor(a), rlat.colon_divisor(b)}}});
  }
  for (auto [u, v] : g_ring.graph.edges()) {
    const u64 di = rlat.colon_divisor(g_ring.vertices[u]);
    const u64 dj = rlat.colon_divisor(g_ring.vertices[v]);
    const std::size_t a = lat.scaled_index(di), b = lat.scaled_index(dj);
    if (!g.adjacent(a, b))
      return fail({{"direction", "ring-to-module"}, {"ideals", {di, dj}}, {"images", refs(lat, {a, b})}});
  }
  return pass({{"module_edges", g.graph.edge_count()}, {"ring_edges", g_ring.graph.edge_count()}});
}

inline constexpr std::size_t kMaxLemma38Subset = 12;

inline Outcome lemma_3_8(Instance& in) {
  const SpecGraph& g = in.g();
  if (g.empty()) return not_met("G is empty");
  const auto& s = in.spec();
  const auto& lat = in.lattice();
  const Bitset& t = in.subset();
  if (t.count() > kMaxLemma38Subset) return skipped("|T| exceeds the subset enumeration limit");
  const auto positions = t.positions();

  bool any_hypothesis = false;
  bool every_adjacent_to_semi = true;
  std::vector<bool> cond_a(positions.size(), false);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const std::size_t q = positions[k];
    const std::size_t p = s.max_spec()[q];
    std::vector<std::size_t> others;
    for (std::size_t j : positions)
      if (j != q) others.push_back(j);
    for (std::size_t mask = 0; mask < (std::size_t{1} << others.size()) && !cond_a[k]; ++mask) {
      Bitset rest(t.size());
      for (std::size_t b = 0; b < others.size(); ++b)
        if (mask >> b & 1) rest.set(others[b]);
      Bitset with = rest;
      with.set(q);
      if (s.vm_closed(s.im_of(with)) != t) continue;
      const bool rest_covers = rest.any() && s.vm_closed(s.im_of(rest)) == t;
      if (!rest_covers) cond_a[k] = true;
    }
    bool cond_b = false;
    for (std::size_t n : g.vertices)
      if (!g.has_vertex(lat.sum(n, p))) {
        cond_b = true;
        break;
      }
    if (cond_a[k] || cond_b) {
      any_hypothesis = true;
      if (!g.has_vertex(p))
        return fail({{"P", submodule_ref(lat, p)}, {"condition_a", bool(cond_a[k])}, {"condition_b", cond_b}});
    }
    if (!has_semi_maximal_neighbour(in, p)) every_adjacent_to_semi = false;
  }
  if (every_adjacent_to_semi)
    for (std::size_t k = 0; k < positions.size(); ++k)
      if (!cond_a[k])
        return fail({{"part", "every member adjacent to a semi-maximal submodule, but (a) fails"},
                     {"P", submodule_ref(lat, s.max_spec()[positions[k]])}});
  if (!any_hypothesis) return not_met("neither condition holds for any P in T");
  return pass({{"all_adjacent_to_semi_maximal", every_adjacent_to_semi}});
}

// ---------------------------------------------------------------------------
// Disjointness subgraph

inline Outcome lemma_3_11a(Instance& in) {
  const bool nonempty = !in.gd().empty();
  const bool by_im = closed_by_im(in);
  const bool connected = in.spec().is_connected_subspace(in.subset());
  json d{{"nonempty", nonempty}, {"t_equals_vm_of_im", by_im}, {"connected", connected}};
  if (nonempty != (by_im && !connected)) return fail(d);
  return pass(d);
}

inline Outcome lemma_3_11b(Instance& in) {
  const auto& s = in.spec();
  if (!s.spec_equals_max()) return not_met("Spec(M) differs from Max(M)");
  if (!s.is_max_surjective()) return not_met("M is not Max-surjective");
  if (!s.is_closed(in.subset())) return not_met("T is not closed");
  const u64 e = in.lattice().colon_divisor(in.im());
  const bool empty = in.gd().empty();
  const bool idem = idempotents_nontrivial(e);
  json d{{"gd_empty", empty}, {"quotient_ring_modulus", e}, {"nontrivial_idempotents", idem}};
  if (empty == idem) return fail(d);
  return pass(d);
}

inline Outcome theorem_3_12(Instance& in) {
  if (in.gd().empty()) return not_met("G_d is empty");
  const GraphReport& r = in.gd_report();
  if (!r.bipartite) return fail({{"report", report_json(r)}});
  return pass();
}

inline Outcome corollary_3_13(Instance& in) {
  const GraphReport& r = in.gd_report();
  if (!r.has_cycle()) return not_met("G_d has no cycle");
  if (*r.girth != 4) return fail({{"girth", *r.girth}});
  return pass();
}

inline Outcome proposition_3_17(Instance& in) {
  const SpecGraph& gd = in.gd();
  if (gd.empty()) return not_met("G_d is empty");
  const GraphReport& r = in.gd_report();
  const auto& s = in.spec();
  const auto& lat = in.lattice();
  json d{{"connected", r.connected}, {"complete_bipartite", r.complete_bipartite},
         {"complete_bipartite_by_classes", r.complete_bipartite_by_classes.value_or(false)}};
  if (r.complete_bipartite != r.complete_bipartite_by_classes.value_or(false)) {
    d["part"] = "a";
    return fail(d);
  }
  if (r.connected != r.complete_bipartite) {
    d["part"] = "b";
    return fail(d);
  }
  if (r.complete_bipartite) {
    for (const auto* part : {&r.bipartition->first, &r.bipartition->second})
      for (std::size_t i : *part)
        if (s.vm_closed(gd.vertices[i]) != s.vm_closed(gd.vertices[part->front()])) {
          d["part"] = "parts share closed sets";
          d["vertices"] = refs(lat, {gd.vertices[part->front()], gd.vertices[i]});
          return fail(d);
        }
  }
  for (std::size_t u = 0; u < gd.vertices.size(); ++u) {
    const auto dist = bfs_distances(gd.graph, u);
    for (std::size_t v = u + 1; v < gd.vertices.size(); ++v) {
      const bool two = dist[v] && *dist[v] == 2;
      const bool same = s.vm_closed(gd.vertices[u]) == s.vm_closed(gd.vertices[v]);
      if (two != same) {
        d["part"] = "distance two iff equal closed sets";
        d["vertices"] = refs(lat, {gd.vertices[u], gd.vertices[v]});
        d["distance"] = optional_json(dist[v]);
        return fail(d);
      }
    }
  }
  return pass(d);
}

// ---------------------------------------------------------------------------
// Transfer to the quotient M/ℑ(T)

inline Outcome adjacency_transfer(Instance& in, bool via_colon) {
  if (!in.spec().is_max_surjective()) return not_met("M is not Max-surjective");
  const SpecGraph& g = in.g();
  if (g.graph.edge_count() == 0) return not_met("G has no edges");
  const auto& s = in.spec();
  const auto& lat = in.lattice();
  const SpecGraph& ag = in.bar().ag;
  for (auto [u, v] : g.graph.edges()) {
    const std::size_t n = g.vertices[u], l = g.vertices[v];
    const std::size_t a = s.jm_radical(via_colon ? lat.scaled_index(lat.colon_divisor(n)) : n);
    const std::size_t b = s.jm_radical(via_colon ? lat.scaled_index(lat.colon_divisor(l)) : l);
    const auto da = in.drop(a), db = in.drop(b);
    if (!da || !db || !ag.adjacent(*da, *db))
      return fail({{"edge", refs(lat, {n, l})}, {"radicals", refs(lat, {a, b})},
                   {"contain_im", {da.has_value(), db.has_value()}}, {"im", submodule_ref(lat, in.im())}});
  }
  return pass({{"edges", g.graph.edge_count()}});
}

inline Outcome theorem_4_1(Instance& in) { return adjacency_transfer(in, true); }
inline Outcome corollary_4_2(Instance& in) { return adjacency_transfer(in, false); }

/// Canonical map from AG(M/ℑ(T)) vertices to lattice indices of M.
inline std::vector<std::size_t> canonical_lift(Instance& in) {
  std::vector<std::size_t> out;
  for (std::size_t j : in.bar().ag.vertices) out.push_back(in.lift(j));
  return out;
}

/// The canonical map as graph-vertex positions of G, or empty when some
/// lifted submodule is not a vertex of G.
inline std::optional<std::vector<std::size_t>> canonical_positions(Instance& in) {
  std::vector<std::size_t> phi;
  for (std::size_t n : canonical_lift(in)) {
    const auto pos = in.g().position_of(n);
    if (!pos) return std::nullopt;
    phi.push_back(*pos);
  }
  return phi;
}

inline Outcome proposition_4_3a(Instance& in) {
  if (auto o = require_closed(in)) return *o;
  if (in.bar_is_ag_vertex()) return not_met("M/ℑ(T) is a vertex of its annihilating graph");
  const SpecGraph& ag = in.bar().ag;
  const SpecGraph& g = in.g();
  if (auto phi = canonical_positions(in); phi && is_embedding(ag.graph, g.graph, *phi))
    return pass({{"map", "canonical"}, {"ag_vertices", ag.vertices.size()}});
  json w{{"canonical_map_fails", true}, {"ag_vertices", refs(in.lattice(), canonical_lift(in))}};
  if (ag.vertices.size() > kMaxSearchVertices) return skipped("canonical map fails and the graph is too large to search");
  if (subgraph_embedding(ag.graph, g.graph)) return pass({{"map", "search"}});
  return fail(w);
}

inline Outcome proposition_4_3b(Instance& in) {
  if (auto o = require_closed(in)) return *o;
  if (in.bar_is_ag_vertex()) return not_met("M/ℑ(T) is a vertex of its annihilating graph");
  if (!in.spec().is_max_surjective() && !in.spec().spec_equals_max())
    return not_met("M is neither Max-surjective nor Spec = Max");
  const bool ag_empty = in.bar().ag.empty();
  const bool g_empty = in.g().empty();
  json d{{"ag_empty", ag_empty}, {"g_empty", g_empty}};
  if (ag_empty != g_empty) return fail(d);
  return pass(d);
}

inline Outcome proposition_4_3c(Instance& in) {
  if (auto o = require_closed(in)) return *o;
  if (in.bar_is_ag_vertex()) return not_met("M/ℑ(T) is a vertex of its annihilating graph");
  if (!in.module().ring().is_artinian()) return not_met("R is not Artinian");
  const ModuleData& b = in.bar();
  for (std::size_t j = 1; j < b.lattice().top_index(); ++j) {
    const std::size_t n = in.lift(j);
    if (!b.ag.has_vertex(j) || !in.g().has_vertex(n))
      return fail({{"submodule", submodule_ref(in.lattice(), n)},
                   {"ag_vertex", b.ag.has_vertex(j)}, {"g_vertex", in.g().has_vertex(n)}});
  }
  return pass({{"checked", b.lattice().nonzero_proper_count()}});
}

inline Outcome theorem_4_5a(Instance& in) {
  if (auto o = require_closed(in)) return *o;
  if (in.bar_is_ag_vertex()) return not_met("M/ℑ(T) is a vertex of its annihilating graph");
  const SpecGraph& ag = in.bar().ag;
  if (ag.graph.edge_count() == 0) return not_met("AG(M/ℑ(T)) has no edges");
  for (auto [u, v] : ag.graph.edges()) {
    const std::size_t n = in.lift(ag.vertices[u]), l = in.lift(ag.vertices[v]);
    if (!in.g().adjacent(n, l)) return fail({{"edge", refs(in.lattice(), {n, l})}});
  }
  return pass({{"edges", ag.graph.edge_count()}});
}

/// The "in particular" clause of (a): no semi-maximal S ⊋ ℑ(T) with closed
/// set T forces M/ℑ(T) to be a non-vertex.
inline Outcome theorem_4_5a_particular(Instance& in, Reading r) {
  if (auto o = require_closed(in)) return *o;
  const auto found = semi_maximal_covering_t(in, r);
  if (!found.empty()) return not_met("a semi-maximal S ⊋ ℑ(T) has closed set T");
  if (in.bar_is_ag_vertex()) return fail({{"reading", to_string(r)}, {"im", submodule_ref(in.lattice(), in.im())}});
  return pass({{"reading", to_string(r)}});
}

inline Outcome theorem_4_5b(Instance& in, Reading r) {
  if (auto o = require_closed(in)) return *o;
  if (!semi_maximal_covering_t(in, r).empty()) return not_met("a semi-maximal S ⊋ ℑ(T) has closed set T");
  const SpecGraph& ag = in.bar().ag;
  std::size_t checked = 0;
  for (auto [u, v] : ag.graph.edges()) {
    const std::size_t n = in.lift(ag.vertices[u]), l = in.lift(ag.vertices[v]);
    if (!quotient_max_surjective(in.spec(), n) || !quotient_max_surjective(in.spec(), l)) continue;
    ++checked;
    if (!in.g().adjacent(n, l)) return fail({{"reading", to_string(r)}, {"edge", refs(in.lattice(), {n, l})}});
  }
  if (checked == 0) return not_met("no edge of AG(M/ℑ(T)) with Max-surjective quotients");
  return pass({{"reading", to_string(r)}, {"edges", checked}});
}

inline Outcome proposition_4_7(Instance& in) {
  if (auto o = require_closed(in)) return *o;
  if (in.module().ring().krull_dimension() != 0) return not_met("dim R is not 0");
  if (!nil_action_is_zero(in.module().ring(), in.module())) return not_met("Nil(R)M is not 0");
  if (in.bar_is_ag_vertex()) return not_met("M/ℑ(T) is a vertex of its annihilating graph");
  const SpecGraph& ag = in.bar().ag;
  const SpecGraph& g = in.g();
  if (auto phi = canonical_positions(in); phi && is_isomorphism(ag.graph, g.graph, *phi))
    return pass({{"map", "canonical"}, {"vertices", g.vertices.size()}});
  json w{{"canonical_map_fails", true}, {"g_vertices", g.vertices.size()}, {"ag_vertices", ag.vertices.size()}};
  if (ag.vertices.size() != g.vertices.size() || ag.graph.edge_count() != g.graph.edge_count()) return fail(w);
  if (ag.vertices.size() > kMaxSearchVertices) return skipped("canonical map fails and the graph is too large to search");
  if (find_isomorphism(ag.graph, g.graph)) return pass({{"map", "search"}});
  return fail(w);
}

/// Hypothesis shared by the two statements below: every member of T in
/// V(G) from the given candidate list has a semi-maximal neighbour.
inline bool semi_maximal_neighbours(Instance& in, const std::vector<std::size_t>& candidates) {
  for (std::size_t q : candidates)
    if (in.g().has_vertex(q) && !has_semi_maximal_neighbour(in, q)) return false;
  return true;
}

inline Outcome lemma_4_8(Instance& in) {
  if (auto o = require_closed(in)) return *o;
  if (in.bar_is_ag_vertex()) return not_met("M/ℑ(T) is a vertex of its annihilating graph");
  if (!semi_maximal_neighbours(in, in.subset_members()))
    return not_met("some Q in T ∩ V(G) has no semi-maximal neighbour");
  bool left = false;
  for (std::size_t q : in.spec().max_spec()) left = left || in.g().has_vertex(q);
  const ModuleData& b = in.bar();
  bool right = false;
  for (std::size_t q : b.spec().max_spec()) right = right || b.ag.has_vertex(q);
  json d{{"max_meets_g", left}, {"quotient_max_meets_ag", right}};
  if (left != right) return fail(d);
  return pass(d);
}

inline Outcome proposition_4_9(Instance& in) {
  if (auto o = require_closed(in)) return *o;
  if (in.spec().is_prime(in.im())) return not_met("M/ℑ(T) is a prime module");
  const auto& lat = in.lattice();
  const auto& t = in.subset();
  std::vector<std::size_t> in_t;
  for (auto [p, idx] : maximal_ideal_multiples(lat))
    if (in.spec().is_maximal(idx) && t.test(in.spec().max_position(idx))) in_t.push_back(idx);
  if (!semi_maximal_neighbours(in, in_t)) return not_met("some mM in T ∩ V(G) has no semi-maximal neighbour");

  bool a = false;
  for (std::size_t k = 1; k < lat.size() && !a; ++k)
    a = k != in.im() && in.spec().vm_closed(k) == t;
  bool some_mm = false;
  for (std::size_t idx : in_t) some_mm = some_mm || in.g().has_vertex(idx);
  const bool socle_nonzero = !socle(in.bar().module()).is_zero();
  const bool b = some_mm == socle_nonzero;
  json d{{"a", a}, {"b", b}, {"exactly_one", a != b}};
  if (!a && !b) return fail(d);
  return pass(d);
}

inline Outcome theorem_4_10(Instance& in) {
  if (auto o = require_closed(in)) return *o;
  if (!in.bar().module().is_faithful()) return not_met("M/ℑ(T) is not faithful");
  if (in.bar_is_ag_vertex()) return not_met("M/ℑ(T) is a vertex of its annihilating graph");
  const std::size_t n = in.g().vertices.size();
  const std::size_t subs = in.bar().lattice().nonzero_proper_count();
  json d{{"g_vertices", n}, {"quotient_nonzero_proper", subs}};
  if (n != subs) return fail(d);
  return pass(d);
}

// ---------------------------------------------------------------------------
// Module-level statements

inline Outcome theorem_4_4(Instance& in) {
  const auto& s = in.spec();
  const auto& lat = in.lattice();
  std::size_t checked = 0;
  for (std::size_t n = 0; n < lat.size(); ++n)
    for (u64 p : prime_factors(lat.colon_divisor(n))) {
      ++checked;
      bool found = false;
      for (const auto& w : s.spec())
        if (w.prime == p && lat[w.submodule].contains(lat[n])) {
          found = true;
          break;
        }
      if (!found) return fail({{"N", submodule_ref(lat, n)}, {"prime", p}});
    }
  if (checked == 0) return not_met("no prime ideal contains any (N:M)");
  return pass({{"pairs", checked}});
}

inline Outcome lemma_4_6(Instance& in) {
  const Ring& r = in.module().ring();
  if (r.krull_dimension() != 0) return not_met("dim R is not 0");
  const auto& lat = in.lattice();
  std::size_t fixed = 0;
  for (std::size_t n = 0; n < lat.size(); ++n)
    if (in.spec().prime_radical(n) == n) ++fixed;
  const bool all = fixed == lat.size();
  const bool nil_zero = nil_action_is_zero(r, in.module());
  json d{{"all_radical", all}, {"radical_submodules", fixed}, {"submodules", lat.size()}, {"nil_action_zero", nil_zero}};
  if (all != nil_zero) return fail(d);
  return pass(d);
}

inline Outcome radicals_agree(Instance& in) {
  if (in.module().rank() != 1) return not_met("M is not cyclic");
  if (!is_squarefree(in.module().exponent())) return not_met("exp(M) is not squarefree");
  const auto& lat = in.lattice();
  for (std::size_t n = 0; n < lat.size(); ++n) {
    const std::size_t jm = in.spec().jm_radical(n), rad = in.spec().prime_radical(n);
    if (jm != n || rad != n)
      return fail({{"N", submodule_ref(lat, n)}, {"jm_radical", submodule_ref(lat, jm)},
                   {"prime_radical", submodule_ref(lat, rad)}});
  }
  return pass();
}

inline bool annihilator_nonzero(const SubmoduleLattice& lat, std::size_t n) {
  return !annihilated_by(lat.module(), lat.colon_divisor(n)).is_zero();
}

inline Outcome remark_3_1(Instance& in) {
  const auto& lat = in.lattice();
  const SpecGraph& ag = in.data().ag;
  const bool m_vertex = ag.has_vertex(lat.top_index());
  bool all = true;
  for (std::size_t n = 1; n < lat.size(); ++n) all = all && ag.has_vertex(n);
  bool colon_is_ann = false;
  const Ideal ann = in.module().annihilator();
  for (std::size_t n = 1; n < lat.top_index(); ++n) colon_is_ann = colon_is_ann || lat.colon(n) == ann;
  json d{{"m_is_vertex", m_vertex}, {"all_nonzero_are_vertices", all}, {"proper_colon_equals_ann", colon_is_ann}};
  if (m_vertex != all || m_vertex != colon_is_ann) return fail(d);
  return pass(d);
}

inline Outcome proposition_a(Instance& in) {
  const auto& lat = in.lattice();
  const SpecGraph& ag = in.data().ag;
  const u64 exp = in.module().exponent();
  const bool multiplication = in.module().rank() <= 1;
  std::size_t a_applies = 0;
  for (std::size_t n = 1; n < lat.top_index(); ++n) {
    const bool ann_differs = submodule_exponent(in.module(), lat[n]) != exp;
    const bool ann_nonzero = annihilator_nonzero(lat, n);
    const bool vertex = ag.has_vertex(n);
    if (ann_differs || ann_nonzero) {
      ++a_applies;
      if (!vertex)
        return fail({{"part", "a"}, {"N", submodule_ref(lat, n)},
                     {"annihilator_differs", ann_differs}, {"zero_colon_nonzero", ann_nonzero}});
    }
    if (multiplication && vertex != ann_nonzero)
      return fail({{"part", "b"}, {"N", submodule_ref(lat, n)}, {"vertex", vertex}});
  }
  if (a_applies == 0 && !multiplication) return not_met("no submodule meets either hypothesis");
  return pass({{"a_applies", a_applies}, {"multiplication_module", multiplication}});
}

inline Outcome theorem_b(Instance& in) {
  const auto& lat = in.lattice();
  const SpecGraph& ag = in.data().ag;
  if (ag.has_vertex(lat.top_index())) return not_met("M is a vertex");
  const bool prime_module = in.spec().is_prime_module();
  if (ag.empty() != prime_module) return fail({{"part", "a"}, {"ag_empty", ag.empty()}, {"prime_module", prime_module}});
  for (std::size_t n = 1; n < lat.size(); ++n)
    if (ag.has_vertex(n) != annihilator_nonzero(lat, n))
      return fail({{"part", "b"}, {"N", submodule_ref(lat, n)}, {"vertex", ag.has_vertex(n)}});
  return pass({{"prime_module", prime_module}});
}

inline Outcome theorem_c(Instance& in) {
  const SpecGraph& ag = in.data().ag;
  if (ag.empty()) return not_met("AG(M) is empty");
  const GraphReport& r = in.data().ag_report;
  if (!r.connected || !r.diameter || *r.diameter > 3 || (r.has_cycle() && *r.girth > 4))
    return fail({{"report", report_json(r)}});
  return pass({{"diameter", *r.diameter}, {"girth", optional_json(r.girth)}});
}

inline Outcome proposition_d(Instance& in) {
  if (!in.module().ring().is_artinian()) return not_met("R is not Artinian");
  const auto& lat = in.lattice();
  for (std::size_t n = 1; n < lat.top_index(); ++n)
    if (!in.data().ag.has_vertex(n)) return fail({{"N", submodule_ref(lat, n)}});
  return pass({{"checked", lat.nonzero_proper_count()}});
}

inline Outcome theorem_e(Instance& in) {
  if (in.spec().is_prime_module()) return not_met("M is a prime module");
  // Finite modules have finite length, so both chain conditions hold on
  // the vertex set and on the module; the equivalences are consistent.
  return pass({{"noetherian", true}, {"artinian", true}, {"vertex_acc", true}, {"vertex_dcc", true},
               {"vertices", in.data().ag.vertices.size()}});
}

inline Outcome theorem_f(Instance& in) {
  if (!in.module().ring().is_reduced()) return not_met("R is not reduced");
  if (!in.module().is_faithful()) return not_met("M is not faithful");
  if (in.spec().is_prime_module()) return not_met("M is a prime module");
  const auto& lat = in.lattice();
  const SpecGraph& ag = in.data().ag;
  const bool m_vertex = ag.has_vertex(lat.top_index());
  const std::size_t proper_vertices = ag.vertices.size() - (m_vertex ? 1 : 0);
  bool finite_degrees = true;
  json d{{"proper_vertices", proper_vertices}, {"m_is_vertex", m_vertex},
         {"nonzero_proper_submodules", lat.nonzero_proper_count()}, {"finite_degrees", finite_degrees}};
  if (proper_vertices != lat.nonzero_proper_count()) return fail(d);
  return pass(d);
}

inline Outcome proposition_g(Instance& in) {
  if (in.spec().is_prime_module()) return not_met("M is a prime module");
  const auto& lat = in.lattice();
  const SpecGraph& ag = in.data().ag;
  bool a = true;
  for (std::size_t n = 1; n < lat.size(); ++n) a = a && ag.has_vertex(n);
  bool some_mm = false;
  for (auto [p, idx] : maximal_ideal_multiples(lat)) some_mm = some_mm || ag.has_vertex(idx);
  const bool socle_nonzero = !socle(in.module()).is_zero();
  const bool b = some_mm == socle_nonzero;
  json d{{"a", a}, {"b", b}, {"exactly_one", a != b}};
  if (!a && !b) return fail(d);
  return pass(d);
}

}  // namespace claims

/// All registered claims, sorted by id.
inline const std::vector<Claim>& claim_registry() {
  using namespace claims;
  static const std::vector<Claim> registry = [] {
    std::vector<Claim> r{
        {"cor-3.13", Scope::subset, "a G_d containing a cycle has girth 4", corollary_3_13},
        {"cor-4.2", Scope::subset, "adjacent N, L give adjacent J^m(N)/ℑ(T), J^m(L)/ℑ(T) in AG(M/ℑ(T))",
         corollary_4_2},
        {"lemma-3.11a", Scope::subset, "G_d is non-empty iff T = V^m(ℑ(T)) and T is disconnected", lemma_3_11a},
        {"lemma-3.11b", Scope::subset,
         "Spec = Max, Max-surjective, T closed: G_d is empty iff R/(ℑ(T):M) has only trivial idempotents",
         lemma_3_11b},
        {"lemma-3.2", Scope::subset, "G is non-empty iff T is closed and not irreducible", lemma_3_2},
        {"lemma-3.8", Scope::subset, "conditions (a) or (b) make P in T a vertex of G", lemma_3_8},
        {"lemma-4.6", Scope::module, "dim R = 0: every N equals its prime radical iff Nil(R)M = 0", lemma_4_6},
        {"lemma-4.8", Scope::subset, "Max(M) meets V(G) iff Max(M/ℑ(T)) meets V(AG(M/ℑ(T)))", lemma_4_8},
        {"prop-3.17", Scope::subset, "G_d connected iff complete bipartite; parts share V^m-sets", proposition_3_17},
        {"prop-3.7", Scope::subset, "adjacency corresponds under the natural map when it is a homeomorphism",
         proposition_3_7},
        {"prop-4.3a", Scope::subset, "AG(M/ℑ(T)) embeds into G via N/ℑ(T) -> N", proposition_4_3a},
        {"prop-4.3b", Scope::subset, "AG(M/ℑ(T)) is empty iff G is empty", proposition_4_3b},
        {"prop-4.3c", Scope::subset, "R Artinian: every non-zero proper N/ℑ(T) and its lift are vertices",
         proposition_4_3c},
        {"prop-4.7", Scope::subset, "dim R = 0, Nil(R)M = 0: G is isomorphic to AG(M/ℑ(T))", proposition_4_7},
        {"prop-4.9", Scope::subset, "(a) a non-zero K ≠ ℑ(T) has V^m(K) = T, or (b) the socle dichotomy holds",
         proposition_4_9},
        {"prop-A", Scope::module, "annihilator criteria for vertices of AG(M)", proposition_a},
        {"prop-D", Scope::module, "R Artinian: every non-zero proper submodule is a vertex of AG(M)", proposition_d},
        {"prop-G", Scope::module, "every non-zero submodule is a vertex, or the socle dichotomy holds", proposition_g},
        {"radicals-agree", Scope::module, "cyclic M with squarefree exponent: J^m(N) = rad(N) = N", radicals_agree},
        {"remark-3.1", Scope::module,
         "M is a vertex iff every non-zero submodule is iff some non-zero proper N has (N:M) = Ann(M)", remark_3_1},
        {"remark-3.3", Scope::subset, "G is non-empty iff T = V^m(ℑ(T)) and T is not irreducible", remark_3_3},
        {"remark-3.4", Scope::subset, "colon-ideal criterion for non-emptiness of G", remark_3_4},
        {"thm-3.12", Scope::subset, "G_d is bipartite", theorem_3_12},
        {"thm-3.6", Scope::subset, "non-empty G is connected with diameter at most 3 and girth at most 4",
         theorem_3_6},
        {"thm-4.1", Scope::subset,
         "adjacent N, L give adjacent J^m((N:M)M)/ℑ(T), J^m((L:M)M)/ℑ(T) in AG(M/ℑ(T))", theorem_4_1},
        {"thm-4.10", Scope::subset, "faithful M/ℑ(T), not a vertex: |V(G)| = non-zero proper submodules of M/ℑ(T)",
         theorem_4_10},
        {"thm-4.4", Scope::module, "every prime ideal over (N:M) is (K:M) for a prime K containing N", theorem_4_4},
        {"thm-4.5a", Scope::subset, "M/ℑ(T) not a vertex: AG(M/ℑ(T)) edges lift to G edges", theorem_4_5a},
        {"thm-4.5a-particular", Scope::subset,
         "no semi-maximal S ⊋ ℑ(T) with V^m(S) = T: M/ℑ(T) is not a vertex",
         [](Instance& in) { return theorem_4_5a_particular(in, Reading::vm); }},
        {"thm-4.5b", Scope::subset, "Max-surjective M/N, M/L and no semi-maximal S with V^m(S) = T: edges lift",
         [](Instance& in) { return theorem_4_5b(in, Reading::vm); }},
        {"thm-B", Scope::module, "M not a vertex: AG(M) empty iff M prime; vertex iff (0 :_M (N:M)) ≠ 0", theorem_b},
        {"thm-C", Scope::module, "non-empty AG(M) is connected with diameter at most 3 and girth at most 4", theorem_c},
        {"thm-E", Scope::module, "M not prime: chain conditions on vertices match those on M", theorem_e},
        {"thm-F", Scope::module, "R reduced, M faithful and not prime: vertex count equals non-zero proper count",
         theorem_f},
    };
    std::sort(r.begin(), r.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
    return r;
  }();
  return registry;
}

inline const Claim* find_claim(const std::string& id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return &c;
  return nullptr;
}

struct ClaimResult {
  std::string claim;
  nlohmann::json instance;
  Status status = Status::pass;
  nlohmann::json detail;  // witness for failures

  nlohmann::json to_json() const {
    return {{"claim", claim}, {"instance", instance}, {"status", to_string(status)}, {"detail", detail}};
  }
};

/// Runs one claim. Search limits become skips; any other exception is a
/// failure carrying the error message.
inline ClaimResult evaluate(const Claim& c, Instance& in) {
  ClaimResult r{c.id, in.key(), Status::pass, nlohmann::json::object()};
  try {
    Outcome o = c.check(in);
    r.status = o.status;
    r.detail = std::move(o.detail);
  } catch (const SearchBoundExceeded& e) {
    r.status = Status::skipped;
    r.detail = {{"reason", e.what()}};
  } catch (const std::exception& e) {
    r.status = Status::fail;
    r.detail = {{"error", e.what()}};
  }
  if (r.status == Status::fail && (r.detail.is_null() || r.detail.empty())) r.detail = {{"instance", in.key()}};
  return r;
}

/// Rebuilds the instance named by an instance key {"ring", "factors", "T"}.
inline Instance instance_from_key(const nlohmann::json& key, ModuleCache& cache) {
  FinModule m(Ring(key.at("ring").get<u64>()), key.at("factors").get<std::vector<u64>>());
  auto data = cache.get(m);
  std::optional<Bitset> t;
  if (!key.at("T").is_null()) {
    t = Bitset(data->spec().max_spec().size());
    for (std::size_t idx : key.at("T").get<std::vector<std::size_t>>()) {
      if (idx >= data->lattice().size() || !data->spec().is_maximal(idx))
        throw InvalidArgument("instance key names a submodule that is not maximal");
      t->set(data->spec().max_position(idx));
    }
  }
  return Instance(std::move(data), std::move(t), cache);
}

/// Re-evaluates a recorded result in isolation.
inline ClaimResult replay(const ClaimResult& recorded, ModuleCache& cache) {
  const Claim* c = find_claim(recorded.claim);
  if (!c) throw InvalidArgument("unknown claim id '" + recorded.claim + "'");
  Instance in = instance_from_key(recorded.instance, cache);
  return evaluate(*c, in);
}

}  // namespace specgraph
