#include <gtest/gtest.h>

#include <random>

#include "paucity/canonical_product.hpp"
#include "paucity/solution_pair.hpp"

using namespace paucity;

TEST(CancelCommonFactors, PermutationCancelsCompletely) {
  const auto r = cancel_common_factors({{1, 2, 3}, {3, 1, 2}});
  EXPECT_TRUE(r.empty());
}

TEST(CancelCommonFactors, RemovesSharedValue) {
  const SolutionPair p{{1, 1, 7}, {1, 2, 4}};
  const auto half = parse_shift("rational:1/2");
  ASSERT_EQ(shifted_product(p.x, half), shifted_product(p.y, half));
  const auto r = cancel_common_factors(p);
  EXPECT_EQ(r, (SolutionPair{{1, 7}, {2, 4}}));
  EXPECT_EQ(shifted_product(r.x, half), shifted_product(r.y, half));
}

TEST(CancelCommonFactors, DisjointUnchanged) {
  const SolutionPair p{{1, 7}, {2, 4}};
  EXPECT_EQ(cancel_common_factors(p), p);
}

TEST(CancelCommonFactors, RespectsMultiplicity) {
  EXPECT_EQ(cancel_common_factors({{2, 2, 5}, {2, 3, 9}}), (SolutionPair{{2, 5}, {3, 9}}));
}

TEST(CancelCommonFactors, EmptyIffDiagonal) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Value> val(1, 4);
  for (int t = 0; t < 500; ++t) {
    SolutionPair p{Tuple(3), Tuple(3)};
    for (auto& v : p.x) v = val(rng);
    for (auto& v : p.y) v = val(rng);
    const auto r = cancel_common_factors(p);
    EXPECT_EQ(r.empty(), p.is_diagonal());
    EXPECT_FALSE(r.shares_value());
    EXPECT_EQ(r.x.size(), r.y.size());
  }
}

TEST(SolutionPair, CanonicalOrdering) {
  const auto c = SolutionPair{{7, 1}, {4, 2}}.canonical();
  EXPECT_EQ(c, (SolutionPair{{1, 7}, {2, 4}}));
  const auto d = SolutionPair{{4, 2}, {7, 1}}.canonical();
  EXPECT_EQ(c, d);
}
