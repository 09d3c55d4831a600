#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paucity/errors.hpp"
#include "paucity/gmp_util.hpp"
#include "paucity/polynomial.hpp"

namespace paucity {

namespace detail {

// Largest |coefficient| whose divisors we are willing to enumerate by trial division.
inline const mpz_class kMaxValidatedCoefficient{"1000000000000"};

/// Positive divisors of n != 0, ascending.
inline std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  const mpz_class m = abs(n);
  if (m > kMaxValidatedCoefficient) {
    throw InvalidArgument("minimal polynomial coefficient " + m.get_str() +
                          " is too large to validate (limit 10^12)");
  }
  const auto v = m.get_ui();
  std::vector<mpz_class> small, large;
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.emplace_back(d);
    if (d != v / d) large.emplace_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// True iff u/v (v > 0) is a root of p, evaluated without denominators.
inline bool has_root_at(const IntPolynomial& p, const mpz_class& u, const mpz_class& v) {
  const int d = p.degree();
  mpz_class acc = 0;
  mpz_class upow = 1;
  for (int i = 0; i <= d; ++i) {
    acc += p[static_cast<std::size_t>(i)] * upow * pow(v, static_cast<unsigned long>(d - i));
    upow *= u;
  }
  return acc == 0;
}

inline std::optional<mpq_class> find_rational_root(const IntPolynomial& p) {
  if (sgn(p[0]) == 0) return mpq_class(0);
  for (const auto& u : positive_divisors(p[0])) {
    for (const auto& v : positive_divisors(p.leading())) {
      if (gcd(u, v) != 1) continue;
      if (has_root_at(p, u, v)) return mpq_class(u, v);
      if (has_root_at(p, -u, v)) return mpq_class(-u, v);
    }
  }
  return std::nullopt;
}

inline bool divides(const IntPolynomial& factor, const IntPolynomial& p) {
  return divmod(to_rational(p), to_rational(factor)).remainder.is_zero();
}

/// Searches for an integer factor a t^2 + b t + c of a quartic with no rational root.
inline std::optional<IntPolynomial> find_quadratic_factor(const IntPolynomial& p) {
  const mpz_class& c4 = p.leading();
  const mpz_class c3 = p[3], c2 = p[2], c1 = p[1], c0 = p[0];
  mpz_class norm_sq = 0;
  for (const auto& c : p.coefficients()) norm_sq += c * c;
  mpz_class norm = sqrt(norm_sq) + 1;
  const mpz_class b_bound = 2 * (norm + abs(c4));

  for (const auto& a : positive_divisors(c4)) {
    const mpz_class e = c4 / a;
    for (const auto& cabs : positive_divisors(c0)) {
      for (int sign : {1, -1}) {
        const mpz_class c = sign * cabs;
        const mpz_class g = c0 / c;
        // e*b + a*f = c3 and g*b + c*f = c1
        const mpz_class det = e * c - a * g;
        if (det != 0) {
          const mpz_class bn = c3 * c - a * c1;
          const mpz_class fn = e * c1 - g * c3;
          if (!mpz_divisible_p(bn.get_mpz_t(), det.get_mpz_t()) ||
              !mpz_divisible_p(fn.get_mpz_t(), det.get_mpz_t())) {
            continue;
          }
          const mpz_class b = bn / det;
          const mpz_class f = fn / det;
          if (a * g + b * f + c * e == c2) return IntPolynomial{c, b, a};
          continue;
        }
        for (mpz_class b = -b_bound; b <= b_bound; ++b) {
          IntPolynomial candidate{c, b, a};
          if (divides(candidate, p)) return candidate;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Primitive integer polynomial m(t) = c0 + c1 t + ... + cd t^d with a positive
/// leading coefficient, used as the minimal polynomial of an algebraic shift.
///
/// Construction divides out the content and fixes the sign. For d >= 2 the
/// polynomial must have no rational root; quartics must also have no integer
/// quadratic factor. Those checks prove irreducibility for d <= 4. For d >= 5
/// only the root test runs and irreducibility_verified() reports false.
class MinimalPolynomial {
 public:
  explicit MinimalPolynomial(IntPolynomial poly) {
    if (poly.degree() < 1) throw InvalidArgument("minimal polynomial must have degree >= 1");
    const mpz_class c = content(poly);
    if (c != 1) {
      std::vector<mpz_class> v(poly.coefficients().begin(), poly.coefficients().end());
      for (auto& x : v) x /= c;
      poly = IntPolynomial(std::move(v));
    }
    if (sgn(poly.leading()) < 0) poly = -poly;
    poly_ = std::move(poly);

    const int d = degree();
    if (d >= 2) {
      if (auto root = detail::find_rational_root(poly_)) {
        throw InvalidArgument("polynomial has the rational root " + root->get_str() +
                              " and is not irreducible");
      }
    }
    if (d == 4) {
      if (auto q = detail::find_quadratic_factor(poly_)) {
        std::string msg = "polynomial has the quadratic factor ";
        msg += q->leading().get_str() + "t^2 + " + (*q)[1].get_str() + "t + " + (*q)[0].get_str();
        throw InvalidArgument(msg);
      }
    }
    // A cubic without rational roots cannot have a quadratic factor either.
    verified_ = d <= 4;
  }

  /// The linear polynomial q t - p whose root is p/q.
  static MinimalPolynomial linear(const mpz_class& p, const mpz_class& q) {
    if (q == 0) throw InvalidArgument("zero denominator");
    return MinimalPolynomial(IntPolynomial{-p, q});
  }

  const IntPolynomial& poly() const { return poly_; }
  int degree() const { return poly_.degree(); }
  const mpz_class& leading() const { return poly_.leading(); }
  mpz_class coefficient(std::size_t j) const { return poly_[j]; }
  bool irreducibility_verified() const { return verified_; }
  bool is_monic() const { return poly_.leading() == 1; }

  mpz_class evaluate(const mpz_class& t) const { return poly_.evaluate(t); }
  RatPolynomial as_rational() const { return to_rational(poly_); }

  friend bool operator==(const MinimalPolynomial& a, const MinimalPolynomial& b) { return a.poly_ == b.poly_; }

 private:
  IntPolynomial poly_;
  bool verified_ = true;
};

}  // namespace paucity
