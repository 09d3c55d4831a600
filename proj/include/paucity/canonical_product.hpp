#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "paucity/gmp_util.hpp"
#include "paucity/minimal_polynomial.hpp"
#include "paucity/polynomial.hpp"
#include "paucity/shift.hpp"

namespace paucity {

using Value = std::int64_t;
using Tuple = std::vector<Value>;

/// (sigma_0, ..., sigma_k) of x, where sum_j sigma_j t^(k-j) = prod_i (t + x_i).
inline std::vector<mpz_class> elementary_symmetric(std::span<const Value> x) {
  std::vector<mpz_class> e(x.size() + 1);
  e[0] = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const mpz_class xi = to_mpz(x[i]);
    for (std::size_t j = i + 1; j >= 1; --j) e[j] += xi * e[j - 1];
  }
  return e;
}

/// prod_i (t + x_i)
inline IntPolynomial shifted_polynomial(std::span<const Value> x) {
  IntPolynomial p{1};
  for (Value v : x) p *= IntPolynomial{to_mpz(v), 1};
  return p;
}

/// Coefficients of p mod m on the basis 1, theta, ..., theta^(d-1), padded to length d.
inline std::vector<mpq_class> reduce_mod_minpoly(const RatPolynomial& p, const MinimalPolynomial& m) {
  const auto d = static_cast<std::size_t>(m.degree());
  const RatPolynomial r = divmod(p, m.as_rational()).remainder;
  std::vector<mpq_class> out(d);
  for (std::size_t j = 0; j < r.size(); ++j) out[j] = r[j];
  return out;
}

/// Hashable normal form of nu = prod (x_i + theta). Two forms are equal iff
/// the products are equal in Q(theta) (in Z[theta] for transcendental theta).
///
///   transcendental: (sigma_1, ..., sigma_k)
///   algebraic:      prod (t + x_i) mod m, coefficients of theta^0..theta^(d-1)
///   rational p/q:   prod (q x_i + p)
class CanonicalProduct {
 public:
  using Symmetric = std::vector<mpz_class>;
  using Reduced = std::vector<mpq_class>;
  using Integer = mpz_class;

  CanonicalProduct() = default;
  explicit CanonicalProduct(Symmetric s) : value_(std::move(s)) {}
  explicit CanonicalProduct(Reduced r) : value_(std::move(r)) {}
  explicit CanonicalProduct(Integer n) : value_(std::move(n)) {}

  ShiftKind kind() const { return static_cast<ShiftKind>(value_.index()); }
  const Symmetric& symmetric() const { return std::get<Symmetric>(value_); }
  const Reduced& reduced() const { return std::get<Reduced>(value_); }
  const Integer& integer() const { return std::get<Integer>(value_); }

  friend bool operator==(const CanonicalProduct& a, const CanonicalProduct& b) { return a.value_ == b.value_; }

  friend std::strong_ordering operator<=>(const CanonicalProduct& a, const CanonicalProduct& b) {
    if (a.value_.index() != b.value_.index()) return a.value_.index() <=> b.value_.index();
    return std::visit(
        [&](const auto& lhs) -> std::strong_ordering {
          using T = std::decay_t<decltype(lhs)>;
          const auto& rhs = std::get<T>(b.value_);
          if constexpr (std::is_same_v<T, Integer>) {
            return cmp(lhs, rhs) <=> 0;
          } else {
            if (lhs.size() != rhs.size()) return lhs.size() <=> rhs.size();
            for (std::size_t i = 0; i < lhs.size(); ++i) {
              const int c = cmp(lhs[i], rhs[i]);
              if (c != 0) return c <=> 0;
            }
            return std::strong_ordering::equal;
          }
        },
        a.value_);
  }

  std::size_t hash() const {
    return std::visit(
        [this](const auto& v) -> std::size_t {
          using T = std::decay_t<decltype(v)>;
          std::size_t seed = value_.index();
          if constexpr (std::is_same_v<T, Integer>) {
            return hash_combine(seed, hash_value(v));
          } else {
            for (const auto& c : v) seed = hash_combine(seed, hash_value(c));
            return seed;
          }
        },
        value_);
  }

 private:
  std::variant<Symmetric, Reduced, Integer> value_;
};

inline CanonicalProduct shifted_product(std::span<const Value> x, const ShiftDescriptor& shift) {
  switch (shift.kind()) {
    case ShiftKind::Transcendental: {
      auto sigma = elementary_symmetric(x);
      sigma.erase(sigma.begin());
      return CanonicalProduct(std::move(sigma));
    }
    case ShiftKind::Algebraic:
      return CanonicalProduct(reduce_mod_minpoly(to_rational(shifted_polynomial(x)), shift.minimal_polynomial()));
    case ShiftKind::Rational: {
      const auto& r = shift.rational_value();
      mpz_class prod = 1;
      for (Value v : x) prod *= r.q * to_mpz(v) + r.p;
      return CanonicalProduct(std::move(prod));
    }
  }
  return {};
}

/// m(-n): the factor attached to (n + theta) when norms are taken down to Q.
inline mpz_class norm_factor(const mpz_class& n, const MinimalPolynomial& m) { return m.evaluate(-n); }

}  // namespace paucity

template <>
struct std::hash<paucity::CanonicalProduct> {
  std::size_t operator()(const paucity::CanonicalProduct& c) const noexcept { return c.hash(); }
};
