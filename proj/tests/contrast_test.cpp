#include <gtest/gtest.h>

#include "oracles.hpp"
#include "paucity/contrast.hpp"

using namespace paucity;

TEST(RationalCount, Examples) {
  EXPECT_GE(rational_count(2, 7, 1, 2).nondiagonal, 8);
  EXPECT_EQ(rational_count(2, 3, 1, 1).nondiagonal, 0);
  EXPECT_EQ(oracle::brute_force_rational(2, 3, 1, 1), 15u);
  for (std::int64_t X : {1, 9, 40}) {
    const auto r = rational_count(1, X, 3, 5);
    EXPECT_EQ(r.mean_value, X);
    EXPECT_EQ(r.diagonal, X);
  }
}

TEST(RationalCount, RejectsUnreducedOrBadDenominator) {
  EXPECT_THROW(rational_count(2, 5, 2, 4), InvalidArgument);
  EXPECT_THROW(rational_count(2, 5, 1, 0), InvalidArgument);
  EXPECT_THROW(rational_count(2, 5, 1, -2), InvalidArgument);
}

TEST(RationalCount, MonotoneInX) {
  for (const auto& [p, q] : std::vector<std::pair<long, long>>{{1, 2}, {1, 1}, {-1, 3}}) {
    mpz_class prev = 0;
    for (std::int64_t X = 1; X <= 40; ++X) {
      const auto nd = rational_count(2, X, p, q).nondiagonal;
      EXPECT_GE(nd, prev);
      prev = nd;
    }
  }
}

TEST(RationalCount, ShiftOneHasSolutionsFromSix) {
  for (std::int64_t X = 6; X <= 30; ++X) EXPECT_GT(rational_count(2, X, 1, 1).nondiagonal, 0);
}

TEST(ContrastTable, RationalVersusSqrtTwo) {
  const std::vector<std::int64_t> xs{50, 100, 200};
  const auto rows = contrast_table(2, xs, parse_shift("rational:1/2"), parse_shift("minpoly:-2,0,1"));
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].algebraic_nondiag, 0);
    EXPECT_GT(rows[i].rational_nondiag, 0);
    if (i) {
      EXPECT_GT(rows[i].rational_nondiag, rows[i - 1].rational_nondiag);
    }
  }
}

TEST(ContrastTable, IdenticalShiftsGiveIdenticalColumns) {
  const std::vector<std::int64_t> xs{5, 10, 20};
  const auto s = parse_shift("rational:1/2");
  for (const auto& r : contrast_table(2, xs, s, s)) EXPECT_EQ(r.rational_nondiag, r.algebraic_nondiag);
}

TEST(ContrastTable, KEqualsOneIsAllZero) {
  const std::vector<std::int64_t> xs{5, 10, 20};
  for (const auto& r : contrast_table(1, xs, parse_shift("rational:1/2"), parse_shift("minpoly:-2,0,1"))) {
    EXPECT_EQ(r.rational_nondiag, 0);
    EXPECT_EQ(r.algebraic_nondiag, 0);
  }
}
