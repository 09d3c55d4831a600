#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <unordered_set>

#include "oracles.hpp"
#include "paucity/canonical_product.hpp"

using namespace paucity;

namespace {

const ShiftDescriptor kSqrt2 = parse_shift("minpoly:-2,0,1");

std::vector<mpz_class> mpz_vec(std::initializer_list<long> v) {
  std::vector<mpz_class> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<ShiftDescriptor> all_variants() {
  return {ShiftDescriptor::transcendental(), kSqrt2, parse_shift("minpoly:-1,-1,0,1"),
          parse_shift("minpoly:-1,0,2"), parse_shift("rational:1/2"), parse_shift("rational:-3/5")};
}

}  // namespace

TEST(ElementarySymmetric, Examples) {
  EXPECT_EQ(elementary_symmetric(Tuple{1, 2, 3}), mpz_vec({1, 6, 11, 6}));
  EXPECT_EQ(elementary_symmetric(Tuple{5}), mpz_vec({1, 5}));
  EXPECT_EQ(elementary_symmetric(Tuple{2, 2}), mpz_vec({1, 4, 4}));
}

// sigma_j is the coefficient of t^(k-j) of prod (t + x_i), computed by repeated multiplication.
TEST(ElementarySymmetric, MatchesRepeatedMultiplication) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Value> val(1, 50);
  std::uniform_int_distribution<int> len(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    Tuple x(static_cast<std::size_t>(len(rng)));
    for (auto& v : x) v = val(rng);
    const auto sigma = elementary_symmetric(x);
    IntPolynomial p{1};
    for (Value v : x) p = p * IntPolynomial{v, 1};
    const auto k = x.size();
    for (std::size_t j = 0; j <= k; ++j) EXPECT_EQ(sigma[j], p[k - j]);
  }
}

TEST(ReduceModMinpoly, Examples) {
  const auto& m = kSqrt2.minimal_polynomial();
  EXPECT_EQ(reduce_mod_minpoly(RatPolynomial{0, 0, 1}, m), (std::vector<mpq_class>{2, 0}));
  EXPECT_EQ(reduce_mod_minpoly(RatPolynomial{3, 4, 1}, m), (std::vector<mpq_class>{5, 4}));
  EXPECT_EQ(reduce_mod_minpoly(RatPolynomial{7}, m), (std::vector<mpq_class>{7, 0}));
}

TEST(ReduceModMinpoly, NonMonicUsesRationals) {
  // theta = 1/sqrt(2): 2 theta^2 = 1, so theta^2 = 1/2
  const MinimalPolynomial m(IntPolynomial{-1, 0, 2});
  EXPECT_EQ(reduce_mod_minpoly(RatPolynomial{0, 0, 1}, m), (std::vector<mpq_class>{mpq_class(1, 2), 0}));
}

TEST(ShiftedProduct, Examples) {
  EXPECT_EQ(shifted_product(Tuple{1, 3}, kSqrt2), CanonicalProduct(std::vector<mpq_class>{5, 4}));
  EXPECT_EQ(shifted_product(Tuple{1, 2, 3}, ShiftDescriptor::transcendental()),
            CanonicalProduct(mpz_vec({6, 11, 6})));
  EXPECT_EQ(shifted_product(Tuple{1, 7}, parse_shift("rational:1/2")), CanonicalProduct(mpz_class(45)));
}

TEST(ShiftedProduct, PermutationInvariance) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Value> val(1, 40);
  for (const auto& shift : all_variants()) {
    for (int trial = 0; trial < 50; ++trial) {
      Tuple x(4);
      for (auto& v : x) v = val(rng);
      Tuple y = x;
      std::shuffle(y.begin(), y.end(), rng);
      const auto a = shifted_product(x, shift);
      const auto b = shifted_product(y, shift);
      EXPECT_EQ(a, b);
      EXPECT_EQ(std::hash<CanonicalProduct>{}(a), std::hash<CanonicalProduct>{}(b));
    }
  }
}

// For algebraic shifts: equal canonical products iff m divides the difference polynomial.
TEST(ShiftedProduct, AlgebraicEqualityMatchesDivisibility) {
  const auto& m = kSqrt2.minimal_polynomial();
  const auto tuples = oracle::all_tuples(3, 8);
  for (std::size_t i = 0; i < tuples.size(); i += 7) {
    for (std::size_t j = 0; j < tuples.size(); j += 5) {
      const bool equal = shifted_product(tuples[i], kSqrt2) == shifted_product(tuples[j], kSqrt2);
      const RatPolynomial diff = to_rational(shifted_polynomial(tuples[i]) - shifted_polynomial(tuples[j]));
      const bool divides = divmod(diff, m.as_rational()).remainder.is_zero();
      const auto red = reduce_mod_minpoly(diff, m);
      const bool zero = std::all_of(red.begin(), red.end(), [](const mpq_class& q) { return sgn(q) == 0; });
      EXPECT_EQ(equal, divides);
      EXPECT_EQ(equal, zero);
    }
  }
}

// Rational canonical products agree with direct big-integer multiplication.
TEST(ShiftedProduct, RationalMatchesDirectMultiplication) {
  const auto shift = parse_shift("rational:3/7");
  for (const auto& x : oracle::all_tuples(3, 6)) {
    mpz_class direct = 1;
    for (auto v : x) direct *= mpz_class(7 * v + 3);
    EXPECT_EQ(shifted_product(x, shift).integer(), direct);
  }
}

TEST(ShiftedProduct, HashConsistentWithEquality) {
  std::unordered_set<CanonicalProduct> seen;
  std::size_t distinct = 0;
  for (const auto& x : oracle::all_tuples(2, 10)) {
    Tuple s = x;
    std::sort(s.begin(), s.end());
    if (s != x) continue;
    distinct += seen.insert(shifted_product(x, kSqrt2)).second;
  }
  EXPECT_EQ(distinct, seen.size());
  EXPECT_EQ(seen.size(), 55u);  // no collisions for k = d = 2
}

TEST(NormFactor, Examples) {
  const auto& m = kSqrt2.minimal_polynomial();
  EXPECT_EQ(norm_factor(1, m), -1);
  EXPECT_EQ(norm_factor(2, m), 2);
  EXPECT_EQ(norm_factor(0, m), m.coefficient(0));
}
