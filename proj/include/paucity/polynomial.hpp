#pragma once

// Dense univariate polynomials with exact (GMP) coefficients.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "paucity/errors.hpp"

namespace paucity {

/// Degree reported for the zero polynomial; compares below every real degree.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }

  /// c * t^power
  static Polynomial monomial(Coeff c, std::size_t power) {
    std::vector<Coeff> v(power + 1);
    v[power] = std::move(c);
    return Polynomial(std::move(v));
  }

  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  /// Leading coefficient; the polynomial must be nonzero.
  const Coeff& leading() const { return coeffs_.back(); }

  /// Coefficient of t^j, zero past the stored range.
  Coeff operator[](std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Coeff(0); }

  std::span<const Coeff> coefficients() const { return coeffs_; }

  Coeff evaluate(const Coeff& t) const {
    Coeff acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= t;
      acc += *it;
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  Polynomial& operator*=(const Coeff& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t j = p.coeffs_.size(); j-- > 0;) {
      const Coeff& c = p.coeffs_[j];
      if (sgn(c) == 0) continue;
      if (!first) os << (sgn(c) < 0 ? " - " : " + ");
      else if (sgn(c) < 0) os << "-";
      const Coeff mag = abs(c);
      if (mag != 1 || j == 0) os << mag;
      if (j >= 1) os << "t";
      if (j >= 2) os << "^" << j;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  void normalize() {
    if constexpr (std::is_same_v<Coeff, mpq_class>) {
      for (auto& c : coeffs_) c.canonicalize();
    }
    trim();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<mpz_class>;
using RatPolynomial = Polynomial<mpq_class>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<mpq_class> v(p.coefficients().begin(), p.coefficients().end());
  return RatPolynomial(std::move(v));
}

/// Integer image of p, or nullopt if some coefficient has a denominator.
inline std::optional<IntPolynomial> to_integral(const RatPolynomial& p) {
  std::vector<mpz_class> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) {
    if (c.get_den() != 1) return std::nullopt;
    v.push_back(c.get_num());
  }
  return IntPolynomial(std::move(v));
}

/// Greatest common divisor of the coefficients (nonnegative; zero for the zero polynomial).
inline mpz_class content(const IntPolynomial& p) {
  mpz_class g = 0;
  for (const auto& c : p.coefficients()) g = gcd(g, c);
  return g;
}

template <class Coeff>
struct DivMod {
  Polynomial<Coeff> quotient;
  Polynomial<Coeff> remainder;
};

/// Exact long division over Q: numerator = divisor * quotient + remainder with
/// deg(remainder) < deg(divisor).
inline DivMod<mpq_class> divmod(const RatPolynomial& numerator, const RatPolynomial& divisor) {
  if (divisor.is_zero()) throw DivisionByZero();
  const int dd = divisor.degree();
  if (numerator.degree() < dd) return {RatPolynomial{}, numerator};

  std::vector<mpq_class> rem(numerator.coefficients().begin(), numerator.coefficients().end());
  std::vector<mpq_class> quo(static_cast<std::size_t>(numerator.degree() - dd + 1));
  const mpq_class& lead = divisor.leading();
  const auto dc = divisor.coefficients();
  for (int n = numerator.degree(); n >= dd; --n) {
    const auto un = static_cast<std::size_t>(n);
    if (sgn(rem[un]) == 0) continue;
    const mpq_class factor = rem[un] / lead;
    const auto shift = static_cast<std::size_t>(n - dd);
    quo[shift] = factor;
    for (std::size_t i = 0; i < dc.size(); ++i) rem[shift + i] -= factor * dc[i];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RatPolynomial(std::move(quo)), RatPolynomial(std::move(rem))};
}

}  // namespace paucity
