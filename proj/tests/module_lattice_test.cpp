#include <gtest/gtest.h>

#include <cstdlib>

#include "test_util.hpp"

using namespace specgraph;
using testutil::mod;

TEST(FinModule, RejectsBadPresentations) {
  EXPECT_THROW(mod({1}), InvalidArgument);
  EXPECT_THROW(mod({4, 6}), InvalidArgument);
  EXPECT_THROW(mod({4}, 6), InvalidArgument);
  EXPECT_NO_THROW(mod({2, 6}, 12));
}

TEST(FinModule, EncodeDecodeAndArithmetic) {
  const FinModule m = mod({2, 6});
  EXPECT_EQ(m.order(), 12u);
  EXPECT_EQ(m.exponent(), 6u);
  for (Code c = 0; c < m.order(); ++c) {
    EXPECT_EQ(m.encode(m.decode(c)), c);
    EXPECT_EQ(m.add(c, m.negate(c)), 0u);
  }
  const Code x = m.encode(std::vector<u64>{1, 4});
  EXPECT_EQ(m.decode(m.add(x, x)).coordinates, (std::vector<u64>{0, 2}));
  EXPECT_EQ(m.element_order(x), 6u);
  EXPECT_EQ(m.to_string(), "Z/2+Z/6 over Z");
}

TEST(FinModule, AnnihilatorAgainstBruteForce) {
  for (const auto& m : testutil::modules_up_to(48, 3)) {
    u64 least = 0;
    for (u64 r = 1; least == 0; ++r) {
      bool kills = true;
      for (Code x = 0; x < m.order(); ++x)
        if (m.scale(r, x) != 0) kills = false;
      if (kills) least = r;
    }
    EXPECT_EQ(m.annihilator().divisor(), least) << m.to_string();
  }
  EXPECT_TRUE(mod({6}, 6).is_faithful());
  EXPECT_FALSE(mod({6}).is_faithful());
}

TEST(Enumerate, Examples) {
  const SubmoduleLattice z12(mod({12}));
  EXPECT_EQ(z12.size(), 6u);
  EXPECT_TRUE(z12[0].is_zero());
  EXPECT_EQ(z12[z12.top_index()].order(), 12u);
  const SubmoduleLattice v4(mod({2, 2}));
  EXPECT_EQ(v4.size(), 5u);
}

TEST(Enumerate, CyclicModulesHaveOneSubmodulePerDivisor) {
  for (u64 n = 2; n <= 120; ++n) EXPECT_EQ(SubmoduleLattice(mod({n})).size(), divisors(n).size()) << n;
}

TEST(Enumerate, MatchesSubsetClosureOracle) {
  for (const auto& m : testutil::modules_up_to(12)) {
    const SubmoduleLattice lat(m);
    const auto g = testutil::group(m);
    std::set<oracle::Mask> got;
    for (const auto& s : lat.submodules()) got.insert(testutil::as_set(g, m, s));
    EXPECT_EQ(got.size(), lat.size()) << m.to_string();
    EXPECT_EQ(got, oracle::subgroups_by_subsets(g)) << m.to_string();
  }
}

TEST(Enumerate, MatchesAdjunctionOracle) {
  for (const auto& m : testutil::modules_up_to(32)) {
    const SubmoduleLattice lat(m);
    const auto g = testutil::group(m);
    std::set<oracle::Mask> got;
    for (const auto& s : lat.submodules()) got.insert(testutil::as_set(g, m, s));
    EXPECT_EQ(got, oracle::all_subgroups(g)) << m.to_string();
  }
}

TEST(Enumerate, CanonicalOrderAndMembership) {
  const SubmoduleLattice lat(mod({2, 4}));
  EXPECT_EQ(lat.size(), 8u);
  for (std::size_t i = 0; i + 1 < lat.size(); ++i) EXPECT_LT(lat[i], lat[i + 1]);
  for (std::size_t i = 0; i < lat.size(); ++i) {
    EXPECT_EQ(lat.index_of(lat[i]), i);
    EXPECT_TRUE(is_submodule(lat.module(), lat[i].members()));
  }
}

TEST(Enumerate, BoundIsEnforced) {
  EXPECT_THROW(SubmoduleLattice(mod({64}), 32), BoundExceeded);
  ::setenv("SPECGRAPH_MAX_ORDER", "16", 1);
  EXPECT_EQ(default_max_order(), 16u);
  EXPECT_THROW(make_module_data(mod({32}), default_max_order()), BoundExceeded);
  ::unsetenv("SPECGRAPH_MAX_ORDER");
  EXPECT_EQ(default_max_order(), kDefaultMaxOrder);
}

TEST(Colon, Examples) {
  const SubmoduleLattice lat(mod({12}));
  EXPECT_EQ(lat.colon(testutil::multiple(lat, 2)), Ideal(Ring(0), 2));
  EXPECT_EQ(lat.colon(lat.zero_index()).divisor(), 12u);
  EXPECT_TRUE(lat.colon(lat.top_index()).is_unit());
}

TEST(Colon, MatchesResidueOracle) {
  for (const auto& m : testutil::modules_up_to(48, 3)) {
    const SubmoduleLattice lat(m);
    const auto g = testutil::group(m);
    for (std::size_t i = 0; i < lat.size(); ++i)
      EXPECT_EQ(lat.colon_divisor(i), oracle::colon_divisor(g, testutil::as_set(g, m, lat[i])))
          << m.to_string() << " submodule " << i;
  }
}

TEST(Product, Examples) {
  const SubmoduleLattice lat(mod({12}));
  const std::size_t six = testutil::multiple(lat, 6), two = testutil::multiple(lat, 2);
  EXPECT_EQ(lat.product(six, two), lat.zero_index());
  for (std::size_t i = 0; i < lat.size(); ++i)
    EXPECT_EQ(lat.product(lat.top_index(), i), lat.scaled_index(lat.colon_divisor(i)));
}

TEST(Product, MatchesDefinitionOracle) {
  for (const auto& m : testutil::modules_up_to(36, 3)) {
    const SubmoduleLattice lat(m);
    const auto g = testutil::group(m);
    std::vector<std::vector<u64>> colons;
    for (std::size_t i = 0; i < lat.size(); ++i) colons.push_back(oracle::colon_residues(g, testutil::as_set(g, m, lat[i])));
    for (std::size_t a = 0; a < lat.size(); ++a)
      for (std::size_t b = a; b < lat.size(); ++b) {
        const auto p = lat.product(a, b);
        EXPECT_EQ(testutil::as_set(g, m, lat[p]), oracle::product(g, colons[a], colons[b])) << m.to_string();
        EXPECT_EQ(p, lat.product(b, a));
      }
  }
}

TEST(SumIntersect, ExamplesAndLatticeLaws) {
  const SubmoduleLattice lat(mod({12}));
  EXPECT_EQ(lat.intersect(testutil::multiple(lat, 2), testutil::multiple(lat, 3)), testutil::multiple(lat, 6));
  for (std::size_t i = 0; i < lat.size(); ++i) {
    EXPECT_EQ(lat.sum(i, lat.zero_index()), i);
    EXPECT_EQ(lat.intersect(i, lat.top_index()), i);
  }
  const SubmoduleLattice l2(mod({2, 4}));
  for (std::size_t a = 0; a < l2.size(); ++a)
    for (std::size_t b = 0; b < l2.size(); ++b) {
      EXPECT_EQ(l2.intersect(a, l2.sum(a, b)), a);
      EXPECT_EQ(l2.sum(a, l2.intersect(a, b)), a);
      EXPECT_EQ(l2[a].order() * l2[b].order(), l2[l2.sum(a, b)].order() * l2[l2.intersect(a, b)].order());
    }
}

TEST(IdealTimesModule, Examples) {
  const FinModule m = mod({12});
  EXPECT_EQ(ideal_times_module(Ideal(Ring(0), 2), m).order(), 6u);
  EXPECT_EQ(ideal_times_module(Ideal::unit(Ring(0)), m).order(), 12u);
  EXPECT_TRUE(ideal_times_module(Ideal(Ring(0), 12), m).is_zero());
  EXPECT_THROW(ideal_times_module(Ideal(Ring(12), 2), m), InvalidArgument);
}

TEST(Socle, Examples) {
  EXPECT_EQ(socle(mod({12})).order(), 6u);
  EXPECT_EQ(socle(mod({6})).order(), 6u);
  EXPECT_EQ(socle(mod({7})).order(), 7u);
  EXPECT_EQ(socle(mod({4, 8})).order(), 4u);
}

TEST(Generators, RegenerateTheirSubmodule) {
  for (const auto& m : testutil::modules_up_to(36, 3)) {
    const SubmoduleLattice lat(m);
    for (const auto& s : lat.submodules()) {
      const auto gens = generators(m, s);
      EXPECT_EQ(span(m, gens), s);
      EXPECT_LE(gens.size(), m.rank());
    }
  }
  const SubmoduleLattice z12(mod({12}));
  EXPECT_EQ(generators_string(z12.module(), z12[testutil::multiple(z12, 4)]), "<(4)>");
}
