#include <gtest/gtest.h>

#include <random>

#include "paucity/polynomial.hpp"

using namespace paucity;

TEST(Polynomial, MultiplyTwoLinearFactors) {
  EXPECT_EQ(IntPolynomial({1, 1}) * IntPolynomial({2, 1}), IntPolynomial({2, 3, 1}));
}

TEST(Polynomial, AdditiveIdentity) {
  const IntPolynomial p{-2, 0, 1};
  EXPECT_EQ(p + IntPolynomial{}, p);
  EXPECT_EQ(IntPolynomial{} + p, p);
}

TEST(Polynomial, HandExpansion) {
  // (t^2 - 2)(3t + 1) = 3t^3 + t^2 - 6t - 2
  EXPECT_EQ(IntPolynomial({-2, 0, 1}) * IntPolynomial({1, 3}), IntPolynomial({-2, -6, 1, 3}));
}

TEST(Polynomial, ZeroHasSentinelDegree) {
  IntPolynomial z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), kZeroDegree);
  EXPECT_EQ(IntPolynomial({0, 0, 0}).degree(), kZeroDegree);
  EXPECT_EQ(IntPolynomial({1, 2, 0}).degree(), 1);
  EXPECT_LT(kZeroDegree, 0);
}

TEST(Polynomial, SubtractionCancelsLeadingTerms) {
  const IntPolynomial a{7, 8, 1}, b{8, 6, 1};
  EXPECT_EQ(a - b, IntPolynomial({-1, 2}));
  EXPECT_EQ((a - a).degree(), kZeroDegree);
}

TEST(Polynomial, RationalCoefficientsAreCanonical) {
  const RatPolynomial p{mpq_class(2, 4), mpq_class(3, 6)};
  EXPECT_EQ(p[0].get_num(), 1);
  EXPECT_EQ(p[0].get_den(), 2);
}

TEST(Polynomial, Evaluate) {
  EXPECT_EQ(IntPolynomial({-2, 0, 1}).evaluate(-1), -1);
  EXPECT_EQ(IntPolynomial({-2, 0, 1}).evaluate(-2), 2);
  EXPECT_EQ(IntPolynomial{}.evaluate(5), 0);
}

TEST(DivMod, ExactQuotient) {
  auto [q, r] = divmod(RatPolynomial{-2, -6, 1, 3}, RatPolynomial{-2, 0, 1});
  EXPECT_EQ(q, RatPolynomial({1, 3}));
  EXPECT_TRUE(r.is_zero());
}

TEST(DivMod, NonzeroRemainder) {
  auto [q, r] = divmod(RatPolynomial{1, 0, 1}, RatPolynomial{-2, 0, 1});
  EXPECT_EQ(q, RatPolynomial{1});
  EXPECT_EQ(r, RatPolynomial{3});
}

TEST(DivMod, ZeroNumerator) {
  auto [q, r] = divmod(RatPolynomial{}, RatPolynomial{-2, 0, 1});
  EXPECT_TRUE(q.is_zero());
  EXPECT_TRUE(r.is_zero());
}

TEST(DivMod, DivisionByZeroThrows) {
  EXPECT_THROW(divmod(RatPolynomial{1, 2}, RatPolynomial{}), DivisionByZero);
}

TEST(DivMod, NonMonicDivisorGivesRationalQuotient) {
  auto [q, r] = divmod(RatPolynomial{0, 0, 1}, RatPolynomial{-1, 0, 2});
  EXPECT_EQ(q, RatPolynomial{mpq_class(1, 2)});
  EXPECT_EQ(r, RatPolynomial{mpq_class(1, 2)});
}

// numerator = divisor * quotient + remainder, deg r < deg divisor, on random inputs.
TEST(DivMod, ReconstructionProperty) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> coeff(-20, 20), deg(0, 7), den(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<mpq_class> a(static_cast<std::size_t>(deg(rng)) + 1), b(static_cast<std::size_t>(deg(rng) % 4) + 1);
    for (auto& c : a) c = mpq_class(coeff(rng), den(rng));
    for (auto& c : b) c = mpq_class(coeff(rng), den(rng));
    b.back() = mpq_class(coeff(rng) | 1, den(rng));
    const RatPolynomial num(a), div(b);
    auto [q, r] = divmod(num, div);
    EXPECT_EQ(div * q + r, num);
    EXPECT_LT(r.degree(), div.degree());
  }
}

TEST(Polynomial, ContentAndIntegrality) {
  EXPECT_EQ(content(IntPolynomial({4, -6, 10})), 2);
  EXPECT_TRUE(to_integral(RatPolynomial{1, 2}).has_value());
  EXPECT_FALSE(to_integral(RatPolynomial{mpq_class(1, 2)}).has_value());
}
