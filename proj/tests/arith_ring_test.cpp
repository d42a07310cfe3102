#include <gtest/gtest.h>

#include "oracles.hpp"
#include "specgraph/ring.hpp"

using namespace specgraph;

TEST(Arith, PrimesAgainstTrialDivision) {
  for (u64 n = 0; n < 500; ++n) {
    bool expected = n >= 2;
    for (u64 d = 2; d < n; ++d)
      if (n % d == 0) expected = false;
    EXPECT_EQ(is_prime(n), expected) << n;
  }
}

TEST(Arith, FactorsRadicalAndDivisors) {
  EXPECT_EQ(prime_factors(360), (std::vector<u64>{2, 3, 5}));
  EXPECT_EQ(radical(360), 30u);
  EXPECT_TRUE(is_squarefree(30));
  EXPECT_FALSE(is_squarefree(12));
  EXPECT_EQ(divisors(12), (std::vector<u64>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(valuation(48, 2), 4u);
  EXPECT_EQ(smallest_prime_not_dividing(30), 7u);
}

TEST(Ring, ModulusOneIsRejected) {
  EXPECT_THROW(Ring(1), InvalidArgument);
}

TEST(Ring, BasicInvariants) {
  const Ring z = Ring::integers();
  EXPECT_EQ(z.krull_dimension(), 1);
  EXPECT_TRUE(z.is_reduced());
  EXPECT_FALSE(z.is_artinian());
  EXPECT_EQ(Ring(12).krull_dimension(), 0);
  EXPECT_FALSE(Ring(12).is_reduced());
  EXPECT_TRUE(Ring(30).is_reduced());
  EXPECT_EQ(Ring(12).name(), "Z/12");
}

TEST(Ideal, NormalizationAndContainment) {
  const Ring r(12);
  EXPECT_EQ(Ideal(r, 8).divisor(), 4u);
  EXPECT_EQ(Ideal(r, 0).divisor(), 12u);
  EXPECT_TRUE(Ideal(r, 0).is_zero());
  EXPECT_TRUE(Ideal(r, 2).contains(Ideal(r, 6)));
  EXPECT_FALSE(Ideal(r, 6).contains(Ideal(r, 2)));
  EXPECT_TRUE(Ideal(r, 3).is_maximal());
  EXPECT_FALSE(Ideal(r, 4).is_prime());
  EXPECT_TRUE(Ideal(Ring::integers(), 0).is_prime());
  EXPECT_FALSE(Ideal(Ring::integers(), 0).is_maximal());
}

TEST(Ideal, NilRadicalMatchesNilpotentResidues) {
  for (u64 m = 2; m <= 200; ++m) {
    const auto nil = oracle::nilpotents(m);
    const Ideal n = nil_radical(Ring(m));
    for (u64 x = 0; x < m; ++x) {
      const bool in_ideal = x % n.divisor() == 0;
      const bool nilpotent = std::find(nil.begin(), nil.end(), x) != nil.end();
      EXPECT_EQ(in_ideal, nilpotent) << "m=" << m << " x=" << x;
    }
  }
  EXPECT_TRUE(nil_radical(Ring::integers()).is_zero());
}

TEST(Ideal, JacobsonRadical) {
  EXPECT_EQ(jm_radical_ideal(Ideal(Ring(72), 12)).divisor(), 6u);
  EXPECT_TRUE(jm_radical_ideal(Ideal(Ring::integers(), 0)).is_zero());
  EXPECT_TRUE(jm_radical_ideal(Ideal::unit(Ring(12))).is_unit());
}

TEST(Ideal, IdempotentsAgainstSquaring) {
  for (u64 m = 2; m <= 300; ++m) EXPECT_EQ(idempotents_nontrivial(m), oracle::has_nontrivial_idempotent(m)) << m;
  EXPECT_FALSE(idempotents_nontrivial(0));
}
