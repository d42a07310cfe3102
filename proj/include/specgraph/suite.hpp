#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "specgraph/claims.hpp"

namespace specgraph {

// ---------------------------------------------------------------------------
// Corpus

struct CorpusParams {
  u64 max_order = 200;
  std::size_t max_rank = 3;
  /// All non-empty T are enumerated when |Max(M)| is at most this; otherwise T = Max(M) only.
  std::size_t max_subset_universe = 6;
  bool ring_integers = true;
  bool ring_exponent = true;
  bool ring_multiple = true;

  nlohmann::json to_json() const {
    return {{"max_order", max_order}, {"max_rank", max_rank}, {"max_subset_universe", max_subset_universe},
            {"rings", {{"integers", ring_integers}, {"exponent", ring_exponent}, {"multiple", ring_multiple}}}};
  }
};

/// A module and optionally an explicit list of subsets T, each given as
/// lattice indices of maximal submodules. Without a list the corpus rule
/// applies (all non-empty T for small Max(M), else Max(M)).
struct CorpusEntry {
  FinModule module;
  std::optional<std::vector<std::vector<std::size_t>>> subsets;
};

using Corpus = std::vector<CorpusEntry>;

/// Invariant-factor chains d1 | ... | dk with 2 <= d1, k <= max_rank and
/// product <= max_order, ordered by (order, chain).
inline std::vector<std::vector<u64>> invariant_factor_chains(u64 max_order, std::size_t max_rank) {
  std::vector<std::vector<u64>> out;
  std::vector<u64> chain;
  auto extend = [&](auto&& self, u64 product) -> void {
    if (!chain.empty()) out.push_back(chain);
    if (chain.size() == max_rank) return;
    const u64 step = chain.empty() ? 1 : chain.back();
    for (u64 d = std::max<u64>(2, step); product * d <= max_order; d += step) {
      chain.push_back(d);
      self(self, product * d);
      chain.pop_back();
    }
  };
  extend(extend, 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    u64 pa = 1, pb = 1;
    for (u64 x : a) pa *= x;
    for (u64 x : b) pb *= x;
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

/// Deterministic corpus: every chain, over Z, Z/exp and Z/(exp·q) with q the
/// smallest prime not dividing exp, in that order.
inline Corpus generate_corpus(const CorpusParams& p) {
  Corpus out;
  for (const auto& chain : invariant_factor_chains(p.max_order, p.max_rank)) {
    const u64 e = chain.back();
    if (p.ring_integers) out.push_back({FinModule(Ring::integers(), chain), std::nullopt});
    if (p.ring_exponent) out.push_back({FinModule(Ring(e), chain), std::nullopt});
    if (p.ring_multiple) out.push_back({FinModule(Ring(e * smallest_prime_not_dividing(e)), chain), std::nullopt});
  }
  return out;
}

/// The subsets T of Max(M) used for an entry, as bitsets over Max positions.
inline std::vector<Bitset> corpus_subsets(const CorpusEntry& entry, const Spectrum& s,
                                          std::size_t max_universe) {
  const std::size_t k = s.max_spec().size();
  std::vector<Bitset> out;
  if (entry.subsets) {
    for (const auto& members : *entry.subsets) {
      Bitset t(k);
      for (std::size_t idx : members) {
        if (idx >= s.lattice().size() || !s.is_maximal(idx))
          throw InvalidArgument("subset member " + std::to_string(idx) + " is not a maximal submodule");
        t.set(s.max_position(idx));
      }
      if (t.none()) throw EmptySubset("corpus entry lists an empty subset");
      out.push_back(std::move(t));
    }
    return out;
  }
  if (k == 0) return out;
  if (k > max_universe) {
    out.push_back(s.all_max());
    return out;
  }
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    Bitset t(k);
    for (std::size_t b = 0; b < k; ++b)
      if (mask >> b & 1) t.set(b);
    out.push_back(std::move(t));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suite

struct SuiteOptions {
  CorpusParams corpus;  // only max_subset_universe is read by run_suite
  std::vector<std::string> claims;  // empty: all registered claims
  unsigned jobs = 1;
  bool keep_all = false;  // keep pass / hypothesis-not-met results too
  std::size_t bound = default_max_order();
};

struct ClaimCounts {
  std::size_t pass = 0, fail = 0, not_met = 0, skipped = 0;

  void add(Status s) {
    switch (s) {
      case Status::pass: ++pass; break;
      case Status::fail: ++fail; break;
      case Status::hypothesis_not_met: ++not_met; break;
      case Status::skipped: ++skipped; break;
    }
  }
  ClaimCounts& operator+=(const ClaimCounts& o) {
    pass += o.pass;
    fail += o.fail;
    not_met += o.not_met;
    skipped += o.skipped;
    return *this;
  }
  nlohmann::json to_json() const {
    return {{"pass", pass}, {"fail", fail}, {"hypothesis-not-met", not_met}, {"skipped", skipped}};
  }
};

struct SuiteReport {
  std::vector<std::string> claims;
  std::size_t modules = 0;
  std::size_t instances = 0;  // (M, T) pairs
  std::map<std::string, ClaimCounts> summary;
  std::vector<ClaimResult> results;
  std::vector<nlohmann::json> divergences;

  bool any_fail() const {
    for (const auto& [id, c] : summary)
      if (c.fail > 0) return true;
    return false;
  }
};

/// Selected claims in registry order; throws on unknown ids.
inline std::vector<const Claim*> select_claims(const std::vector<std::string>& ids) {
  std::vector<const Claim*> out;
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
    for (const auto& c : claim_registry()) out.push_back(&c);
    return out;
  }
  for (const auto& c : claim_registry())
    if (std::find(ids.begin(), ids.end(), c.id) != ids.end()) out.push_back(&c);
  for (const auto& id : ids)
    if (!find_claim(id)) throw InvalidArgument("unknown claim id '" + id + "'");
  return out;
}

namespace detail {

struct ModuleOutcome {
  std::size_t instances = 0;
  std::map<std::string, ClaimCounts> counts;
  std::vector<ClaimResult> results;
  std::vector<nlohmann::json> divergences;
};

inline void record(ModuleOutcome& out, ClaimResult r, bool keep_all) {
  out.counts[r.claim].add(r.status);
  if (keep_all || r.status == Status::fail || r.status == Status::skipped) out.results.push_back(std::move(r));
}

inline void record_divergences(Instance& in, ModuleOutcome& out) {
  const SpecGraph& a = in.g();
  const SpecGraph& b = in.g_nonzero();
  if (a.vertices != b.vertices)
    out.divergences.push_back({{"kind", "partner-rule"},
                               {"instance", in.key()},
                               {"any_proper_vertices", a.vertices},
                               {"nonzero_proper_vertices", b.vertices}});
  // The two readings of the semi-maximal hypothesis in the quotient-lifting
  // statements; the registered claims use V^m.
  for (const auto& [name, check] :
       {std::pair{"thm-4.5a-particular", &claims::theorem_4_5a_particular}, std::pair{"thm-4.5b", &claims::theorem_4_5b}}) {
    const Outcome vm = check(in, claims::Reading::vm);
    const Outcome v = check(in, claims::Reading::v);
    if (vm.status != v.status)
      out.divergences.push_back({{"kind", "semi-maximal-reading"},
                                 {"claim", name},
                                 {"instance", in.key()},
                                 {"vm", {{"status", to_string(vm.status)}, {"detail", vm.detail}}},
                                 {"v", {{"status", to_string(v.status)}, {"detail", v.detail}}}});
  }
}

inline ModuleOutcome run_module(const CorpusEntry& entry, const std::vector<const Claim*>& claims,
                                const SuiteOptions& opt, ModuleCache& cache) {
  ModuleOutcome out;
  auto data = make_module_data(entry.module, opt.bound);
  for (const Claim* c : claims)
    if (c->scope == Scope::module) {
      Instance in(data, std::nullopt, cache);
      record(out, evaluate(*c, in), opt.keep_all);
    }
  for (const Bitset& t : corpus_subsets(entry, data->spec(), opt.corpus.max_subset_universe)) {
    ++out.instances;
    Instance in(data, t, cache);
    for (const Claim* c : claims)
      if (c->scope == Scope::subset) record(out, evaluate(*c, in), opt.keep_all);
    record_divergences(in, out);
  }
  return out;
}

/// Runs f(i) for i in [0, n) on up to jobs threads.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mu;
  for (unsigned w = 0; w < std::min<std::size_t>(jobs, n); ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Evaluates the selected claims on every corpus instance. Results are
/// ordered by claim id, then by corpus position, independent of jobs.
inline SuiteReport run_suite(const Corpus& corpus, const SuiteOptions& opt = {}) {
  const auto claims = select_claims(opt.claims);
  ModuleCache cache(opt.bound);
  std::vector<detail::ModuleOutcome> slots(corpus.size());
  detail::parallel_for(corpus.size(), opt.jobs,
                       [&](std::size_t i) { slots[i] = detail::run_module(corpus[i], claims, opt, cache); });

  SuiteReport rep;
  for (const Claim* c : claims) {
    rep.claims.push_back(c->id);
    rep.summary[c->id];
  }
  rep.modules = corpus.size();
  for (auto& s : slots) {
    rep.instances += s.instances;
    for (const auto& [id, c] : s.counts) rep.summary[id] += c;
    for (auto& r : s.results) rep.results.push_back(std::move(r));
    for (auto& d : s.divergences) rep.divergences.push_back(std::move(d));
  }
  std::stable_sort(rep.results.begin(), rep.results.end(),
                   [](const ClaimResult& a, const ClaimResult& b) { return a.claim < b.claim; });
  return rep;
}

inline nlohmann::json report_json(const SuiteReport& rep, const nlohmann::json& corpus_description,
                                  const std::optional<std::string>& stamp = std::nullopt) {
  nlohmann::json summary = nlohmann::json::object();
  ClaimCounts total;
  for (const auto& [id, c] : rep.summary) {
    summary[id] = c.to_json();
    total += c;
  }
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : rep.results) results.push_back(r.to_json());
  nlohmann::json j{{"schema_version", 1},
                   {"corpus", corpus_description},
                   {"modules", rep.modules},
                   {"instances", rep.instances},
                   {"claims", rep.claims},
                   {"summary", summary},
                   {"totals", total.to_json()},
                   {"results", results},
                   {"divergences", rep.divergences},
                   {"ok", !rep.any_fail()}};
  if (stamp) j["generated_at"] = *stamp;
  return j;
}

inline std::string report_text(const SuiteReport& rep) {
  std::ostringstream os;
  os << "modules " << rep.modules << ", instances " << rep.instances << "\n";
  std::size_t width = 0;
  for (const auto& id : rep.claims) width = std::max(width, id.size());
  for (const auto& [id, c] : rep.summary) {
    os << id << std::string(width - id.size() + 2, ' ') << "pass " << c.pass << "  fail " << c.fail
       << "  not-met " << c.not_met << "  skipped " << c.skipped << "\n";
  }
  for (const auto& r : rep.results)
    if (r.status == Status::fail)
      os << "FAIL " << r.claim << " " << r.instance.dump() << " " << r.detail.dump() << "\n";
  os << "divergences " << rep.divergences.size() << "\n";
  os << (rep.any_fail() ? "result: FAIL\n" : "result: OK\n");
  return os.str();
}

// ---------------------------------------------------------------------------
// Explorer for the question whether T ∩ V(G) is non-empty

struct ExploreReport {
  std::size_t instances = 0;
  std::size_t nonempty_graphs = 0;
  std::size_t meets = 0;
  std::vector<nlohmann::json> entries;  // one per instance
  std::vector<nlohmann::json> negatives;

  nlohmann::json to_json(const nlohmann::json& corpus_description,
                         const std::optional<std::string>& stamp = std::nullopt) const {
    nlohmann::json j{{"schema_version", 1},
                     {"corpus", corpus_description},
                     {"instances", instances},
                     {"nonempty_graphs", nonempty_graphs},
                     {"t_meets_vertices", meets},
                     {"negative_witnesses", negatives},
                     {"entries", entries}};
    if (stamp) j["generated_at"] = *stamp;
    return j;
  }
  std::string to_text() const {
    std::ostringstream os;
    os << "instances " << instances << ", non-empty graphs " << nonempty_graphs << ", T meets V(G) in " << meets
       << "\n";
    if (negatives.empty())
      os << "no instance with T ∩ V(G) empty\n";
    else
      for (const auto& n : negatives) os << "NEGATIVE " << n.dump() << "\n";
    return os.str();
  }
};

inline ExploreReport explore_q412(const Corpus& corpus, std::size_t max_universe = 6, unsigned jobs = 1,
                                  std::size_t bound = default_max_order()) {
  ModuleCache cache(bound);
  std::vector<std::vector<nlohmann::json>> slots(corpus.size());
  detail::parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    auto data = make_module_data(corpus[i].module, bound);
    for (const Bitset& t : corpus_subsets(corpus[i], data->spec(), max_universe)) {
      Instance in(data, t, cache);
      nlohmann::json e{{"instance", in.key()}};
      if (in.g().empty()) {
        e["status"] = "skipped-empty-graph";
      } else {
        std::vector<std::size_t> hit;
        for (std::size_t q : in.subset_members())
          if (in.g().has_vertex(q)) hit.push_back(q);
        e["members_in_graph"] = hit;
        e["status"] = hit.empty() ? "empty-intersection" : "nonempty-intersection";
      }
      slots[i].push_back(std::move(e));
    }
  });
  ExploreReport rep;
  for (auto& s : slots)
    for (auto& e : s) {
      ++rep.instances;
      const std::string st = e["status"];
      if (st != "skipped-empty-graph") ++rep.nonempty_graphs;
      if (st == "nonempty-intersection") ++rep.meets;
      if (st == "empty-intersection") rep.negatives.push_back(e);
      rep.entries.push_back(std::move(e));
    }
  return rep;
}

}  // namespace specgraph
