#pragma once

#include <gmpxx.h>

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "paucity/errors.hpp"
#include "paucity/minimal_polynomial.hpp"

namespace paucity {

enum class ShiftKind { Transcendental, Algebraic, Rational };

/// The shift theta in (x + theta): a transcendental symbol, an algebraic
/// irrational given by its minimal polynomial, or a reduced rational p/q.
///
/// Textual form: `transcendental` | `minpoly:c0,c1,...,cd` | `rational:p/q`.
class ShiftDescriptor {
 public:
  struct RationalValue {
    mpz_class p;
    mpz_class q;
  };

  static ShiftDescriptor transcendental() { return ShiftDescriptor(std::monostate{}); }

  static ShiftDescriptor algebraic(MinimalPolynomial m) {
    if (m.degree() < 2) throw InvalidArgument("an algebraic irrational shift needs degree >= 2");
    return ShiftDescriptor(std::move(m));
  }

  static ShiftDescriptor rational(mpz_class p, mpz_class q) {
    if (q == 0) throw InvalidArgument("rational shift with zero denominator");
    if (q < 0) {
      p = -p;
      q = -q;
    }
    const mpz_class g = gcd(p, q);
    if (g > 1) {
      p /= g;
      q /= g;
    }
    return ShiftDescriptor(RationalValue{std::move(p), std::move(q)});
  }

  ShiftKind kind() const { return static_cast<ShiftKind>(value_.index()); }

  const MinimalPolynomial& minimal_polynomial() const { return std::get<MinimalPolynomial>(value_); }
  const RationalValue& rational_value() const { return std::get<RationalValue>(value_); }

  /// The integer polynomial vanishing at theta: m for algebraic shifts,
  /// q t - p for rational ones, nothing for a transcendental shift.
  std::optional<MinimalPolynomial> defining_polynomial() const {
    switch (kind()) {
      case ShiftKind::Algebraic:
        return minimal_polynomial();
      case ShiftKind::Rational:
        return MinimalPolynomial::linear(rational_value().p, rational_value().q);
      case ShiftKind::Transcendental:
        break;
    }
    return std::nullopt;
  }

  /// Degree of theta over Q, or nullopt when transcendental.
  std::optional<int> degree() const {
    switch (kind()) {
      case ShiftKind::Algebraic:
        return minimal_polynomial().degree();
      case ShiftKind::Rational:
        return 1;
      case ShiftKind::Transcendental:
        break;
    }
    return std::nullopt;
  }

  std::string to_string() const {
    switch (kind()) {
      case ShiftKind::Transcendental:
        return "transcendental";
      case ShiftKind::Algebraic: {
        std::string s = "minpoly:";
        const auto& p = minimal_polynomial().poly();
        for (int j = 0; j <= p.degree(); ++j) {
          if (j) s += ',';
          s += p[static_cast<std::size_t>(j)].get_str();
        }
        return s;
      }
      case ShiftKind::Rational:
        return "rational:" + rational_value().p.get_str() + "/" + rational_value().q.get_str();
    }
    return {};
  }

  friend bool operator==(const ShiftDescriptor& a, const ShiftDescriptor& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case ShiftKind::Transcendental:
        return true;
      case ShiftKind::Algebraic:
        return a.minimal_polynomial() == b.minimal_polynomial();
      case ShiftKind::Rational:
        return a.rational_value().p == b.rational_value().p && a.rational_value().q == b.rational_value().q;
    }
    return false;
  }

 private:
  using Value = std::variant<std::monostate, MinimalPolynomial, RationalValue>;
  explicit ShiftDescriptor(Value v) : value_(std::move(v)) {}

  Value value_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

inline mpz_class parse_integer(std::string_view text, std::string_view what) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ParseError("invalid integer '" + std::string(text) + "' in " + std::string(what));
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace detail

inline ShiftDescriptor parse_shift(std::string_view text) {
  text = detail::trim(text);
  if (text == "transcendental") return ShiftDescriptor::transcendental();

  constexpr std::string_view kMinpoly = "minpoly:";
  constexpr std::string_view kRational = "rational:";
  if (text.starts_with(kMinpoly)) {
    std::string_view rest = text.substr(kMinpoly.size());
    std::vector<mpz_class> coeffs;
    while (true) {
      const auto comma = rest.find(',');
      coeffs.push_back(detail::parse_integer(rest.substr(0, comma), "minpoly coefficient list"));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (sgn(coeffs.back()) == 0) throw ParseError("minpoly: leading coefficient c_d must be nonzero");
    if (coeffs.size() < 3) throw ParseError("minpoly: an algebraic irrational shift needs degree >= 2");
    return ShiftDescriptor::algebraic(MinimalPolynomial(IntPolynomial(std::move(coeffs))));
  }
  if (text.starts_with(kRational)) {
    const std::string_view rest = text.substr(kRational.size());
    const auto slash = rest.find('/');
    const mpz_class p = detail::parse_integer(rest.substr(0, slash), "rational shift");
    mpz_class q = 1;
    if (slash != std::string_view::npos) q = detail::parse_integer(rest.substr(slash + 1), "rational shift");
    if (q == 0) throw ParseError("rational shift with zero denominator");
    return ShiftDescriptor::rational(p, q);
  }
  throw ParseError("unrecognized shift '" + std::string(text) +
                   "' (expected transcendental | minpoly:c0,...,cd | rational:p/q)");
}

}  // namespace paucity
