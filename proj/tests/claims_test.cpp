#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace specgraph;

namespace {

ClaimResult check(const std::string& id, std::vector<u64> factors, u64 modulus, std::optional<std::vector<std::size_t>> t,
                  ModuleCache& cache) {
  const Claim* c = find_claim(id);
  EXPECT_NE(c, nullptr) << id;
  auto d = cache.get(testutil::mod(std::move(factors), modulus));
  std::optional<Bitset> subset;
  if (t) subset = testutil::max_subset(d->spec(), *t);
  Instance in(d, subset, cache);
  return evaluate(*c, in);
}

std::vector<std::size_t> all_max(ModuleCache& cache, std::vector<u64> factors, u64 modulus = 0) {
  return cache.get(testutil::mod(std::move(factors), modulus))->spec().max_spec();
}

}  // namespace

TEST(Registry, IdsAreSortedUniqueAndScoped) {
  const auto& reg = claim_registry();
  ASSERT_FALSE(reg.empty());
  for (std::size_t i = 0; i + 1 < reg.size(); ++i) EXPECT_LT(reg[i].id, reg[i + 1].id);
  for (const char* id : {"lemma-3.2", "remark-3.3", "thm-3.6", "prop-3.7", "lemma-3.8", "lemma-3.11a", "thm-3.12",
                         "cor-3.13", "prop-3.17", "thm-4.1", "cor-4.2", "prop-4.3a", "thm-4.5a", "prop-4.7",
                         "prop-4.9", "thm-4.10"})
    EXPECT_EQ(find_claim(id)->scope, Scope::subset) << id;
  for (const char* id : {"prop-A", "thm-B", "thm-C", "prop-D", "thm-E", "thm-F", "prop-G", "thm-4.4", "lemma-4.6"})
    EXPECT_EQ(find_claim(id)->scope, Scope::module) << id;
  EXPECT_EQ(find_claim("no-such-claim"), nullptr);
  EXPECT_THROW(select_claims({"thm-3.6", "bogus"}), InvalidArgument);
}

TEST(Claims, WorkedExamples) {
  ModuleCache cache;
  const auto r36 = check("thm-3.6", {30}, 0, all_max(cache, {30}), cache);
  EXPECT_EQ(r36.status, Status::pass) << r36.detail.dump();
  // 2M and 3M each have a single neighbour (15M and 10M), which are adjacent.
  EXPECT_EQ(r36.detail["diameter"], 3);

  const auto z12 = cache.get(testutil::mod({12}));
  const auto r32 = check("lemma-3.2", {12}, 0, std::vector<std::size_t>{testutil::multiple(z12->lattice(), 2)}, cache);
  EXPECT_EQ(r32.status, Status::pass) << r32.detail.dump();

  const auto r47 = check("prop-4.7", {30}, 30, all_max(cache, {30}, 30), cache);
  EXPECT_EQ(r47.status, Status::pass) << r47.detail.dump();

  const auto r410 = check("thm-4.10", {30}, 30, all_max(cache, {30}, 30), cache);
  EXPECT_EQ(r410.status, Status::pass) << r410.detail.dump();
  EXPECT_EQ(r410.detail["g_vertices"], 6);
  EXPECT_EQ(r410.detail["quotient_nonzero_proper"], 6);
  // Over Z the module Z/30 is not faithful.
  EXPECT_EQ(check("thm-4.10", {30}, 0, all_max(cache, {30}), cache).status, Status::hypothesis_not_met);
}

TEST(Claims, HypothesisNotMetIsNotAFailure) {
  ModuleCache cache;
  // All maximals of (Z/2)^2 share one closed set, so Max is irreducible and G is empty.
  const auto r = check("thm-3.6", {2, 2}, 0, all_max(cache, {2, 2}), cache);
  EXPECT_EQ(r.status, Status::hypothesis_not_met);
  EXPECT_TRUE(r.detail.contains("reason"));
  EXPECT_EQ(to_string(Status::hypothesis_not_met), "hypothesis-not-met");
}

TEST(Claims, EveryClaimHoldsOnASmallCorpus) {
  CorpusParams p;
  p.max_order = 60;
  const SuiteReport rep = run_suite(generate_corpus(p), SuiteOptions{p, {}, 2, false, default_max_order()});
  EXPECT_FALSE(rep.any_fail());
  for (const auto& r : rep.results) EXPECT_NE(r.status, Status::fail) << r.to_json().dump();
  for (const auto& [id, c] : rep.summary) EXPECT_GT(c.pass, 0u) << id;
}

TEST(Claims, FailuresCarryReplayableWitnesses) {
  ModuleCache cache;
  // A deliberately false statement: every non-empty G(T) is complete bipartite.
  const Claim bogus{"bogus", Scope::subset, "every G is complete bipartite", [](Instance& in) {
                      if (in.g().empty()) return not_met("empty graph");
                      if (in.g_report().complete_bipartite) return pass();
                      return fail({{"vertices", in.g().vertices}});
                    }};
  auto d = cache.get(testutil::mod({30}));
  Instance in(d, d->spec().all_max(), cache);
  const ClaimResult r = evaluate(bogus, in);
  ASSERT_EQ(r.status, Status::fail);
  EXPECT_TRUE(r.detail.contains("vertices"));
  Instance again = instance_from_key(r.instance, cache);
  EXPECT_EQ(evaluate(bogus, again).status, Status::fail);
  EXPECT_EQ(evaluate(bogus, again).detail, r.detail);
}

TEST(Claims, ExceptionsBecomeFailures) {
  ModuleCache cache;
  const Claim throws{"throws", Scope::module, "", [](Instance&) -> Outcome { throw std::runtime_error("boom"); }};
  auto d = cache.get(testutil::mod({6}));
  Instance in(d, std::nullopt, cache);
  const ClaimResult r = evaluate(throws, in);
  EXPECT_EQ(r.status, Status::fail);
  EXPECT_EQ(r.detail["error"], "boom");
}

TEST(Claims, ReplayReproducesRecordedResults) {
  ModuleCache cache;
  CorpusParams p;
  p.max_order = 24;
  SuiteOptions opt{p, {}, 1, true, default_max_order()};
  const SuiteReport rep = run_suite(generate_corpus(p), opt);
  ASSERT_FALSE(rep.results.empty());
  for (std::size_t i = 0; i < rep.results.size(); i += 7) {
    const ClaimResult again = replay(rep.results[i], cache);
    EXPECT_EQ(again.to_json(), rep.results[i].to_json());
  }
  ClaimResult unknown = rep.results.front();
  unknown.claim = "nope";
  EXPECT_THROW(replay(unknown, cache), InvalidArgument);
}

TEST(InstanceKey, RoundTrips) {
  ModuleCache cache;
  auto d = cache.get(testutil::mod({2, 6}, 12));
  Instance in(d, d->spec().all_max(), cache);
  const Instance back = instance_from_key(in.key(), cache);
  EXPECT_EQ(back.key(), in.key());
  nlohmann::json bad = in.key();
  bad["T"] = {0};
  EXPECT_THROW(instance_from_key(bad, cache), InvalidArgument);
  Instance module_only(d, std::nullopt, cache);
  EXPECT_TRUE(module_only.key()["T"].is_null());
}

TEST(InstanceQuotient, LiftAndDropAreInverse) {
  ModuleCache cache;
  for (const auto& m : testutil::modules_up_to(48, 3)) {
    auto d = cache.get(m);
    if (d->spec().max_spec().empty()) continue;
    Instance in(d, d->spec().all_max(), cache);
    const auto& bar = in.bar();
    for (std::size_t j = 0; j < bar.lattice().size(); ++j) {
      const std::size_t l = in.lift(j);
      EXPECT_TRUE(d->lattice()[l].contains(d->lattice()[in.im()]));
      EXPECT_EQ(in.drop(l), j);
    }
    EXPECT_EQ(in.drop(d->lattice().zero_index()).has_value(), in.im() == d->lattice().zero_index());
  }
}

TEST(Suite, DeterministicAcrossThreadCounts) {
  CorpusParams p;
  p.max_order = 40;
  const Corpus corpus = generate_corpus(p);
  SuiteOptions one{p, {}, 1, true, default_max_order()}, many{p, {}, 4, true, default_max_order()};
  const auto a = report_json(run_suite(corpus, one), p.to_json());
  const auto b = report_json(run_suite(corpus, many), p.to_json());
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Suite, EmptyCorpusGivesEmptyReport) {
  const SuiteReport rep = run_suite({}, SuiteOptions{});
  EXPECT_EQ(rep.modules, 0u);
  EXPECT_EQ(rep.instances, 0u);
  EXPECT_TRUE(rep.results.empty());
  EXPECT_FALSE(rep.any_fail());
}

TEST(Suite, TwelveInstanceMatchesHandComputation) {
  const FinModule m = testutil::mod({12});
  const auto d = make_module_data(m);
  Corpus corpus{{m, std::vector<std::vector<std::size_t>>{d->spec().max_spec()}}};
  SuiteOptions opt;
  opt.keep_all = true;
  opt.claims = {"thm-3.6", "thm-3.12", "prop-3.17", "lemma-3.11a"};
  const SuiteReport rep = run_suite(corpus, opt);
  EXPECT_EQ(rep.instances, 1u);
  ASSERT_EQ(rep.results.size(), 4u);
  for (const auto& r : rep.results) EXPECT_EQ(r.status, Status::pass) << r.to_json().dump();
  const auto it = std::find_if(rep.results.begin(), rep.results.end(), [](const auto& r) { return r.claim == "thm-3.6"; });
  ASSERT_NE(it, rep.results.end());
  EXPECT_EQ(it->detail["diameter"], 2);
  EXPECT_EQ(it->detail["girth"], "inf");
}

TEST(Suite, CorpusGeneration) {
  const auto chains = invariant_factor_chains(16, 3);
  EXPECT_EQ(chains.front(), (std::vector<u64>{2}));
  EXPECT_NE(std::find(chains.begin(), chains.end(), std::vector<u64>{2, 2, 4}), chains.end());
  EXPECT_EQ(std::find(chains.begin(), chains.end(), std::vector<u64>{2, 2, 2, 2}), chains.end());
  CorpusParams p;
  p.max_order = 6;
  const Corpus c = generate_corpus(p);
  ASSERT_EQ(c.size(), 3u * invariant_factor_chains(6, 3).size());
  EXPECT_EQ(c[0].module.ring().modulus(), 0u);
  EXPECT_EQ(c[1].module.ring().modulus(), 2u);
  EXPECT_EQ(c[2].module.ring().modulus(), 6u);
}

TEST(Explorer, Examples) {
  const auto z12 = make_module_data(testutil::mod({12}));
  const auto z30 = make_module_data(testutil::mod({30}));
  Corpus corpus{{z12->module(), std::vector<std::vector<std::size_t>>{z12->spec().max_spec()}},
                {z30->module(), std::vector<std::vector<std::size_t>>{z30->spec().max_spec()}},
                {testutil::mod({2, 2}), std::nullopt}};
  const ExploreReport rep = explore_q412(corpus);
  EXPECT_EQ(rep.entries[0]["members_in_graph"], nlohmann::json(z12->spec().max_spec()));
  EXPECT_EQ(rep.entries[1]["members_in_graph"], nlohmann::json(z30->spec().max_spec()));
  EXPECT_EQ(rep.entries.back()["status"], "skipped-empty-graph");
  EXPECT_TRUE(rep.negatives.empty());
}
