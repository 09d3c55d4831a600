#pragma once

// Exact checks of the identities behind the paucity bound on concrete
// solution pairs (x, y) of prod (x_i + theta) = prod (y_i + theta):
//
//   F(t) = prod (t + x_i) - prod (t + y_i)        deg F <= k - 1
//   F(t) = m(t) Psi(t),  Psi in Z[t]              deg Psi <= k - 1 - d
//   prod_i (x_i - y_j) = rho_j m(-y_j),  rho_j = Psi(-y_j) != 0
//   prod_i m(-x_i) = prod_i m(-y_i)

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "paucity/canonical_product.hpp"
#include "paucity/errors.hpp"
#include "paucity/gmp_util.hpp"
#include "paucity/minimal_polynomial.hpp"
#include "paucity/polynomial.hpp"
#include "paucity/solution_pair.hpp"

namespace paucity {

struct WitnessReport {
  SolutionPair pair;  ///< fully cancelled
  std::int64_t X = 0;
  int k = 0;          ///< length after cancellation
  int d = 0;
  IntPolynomial F;
  IntPolynomial psi;
  std::vector<mpz_class> rho;               ///< rho_1..rho_k
  std::vector<mpq_class> a_bound_ratios;    ///< |a_j| / X^(k-j), j = 0..k-1
  std::vector<mpq_class> b_bound_ratios;    ///< |b_m| / X^(k-d-m), m = 0..k-d-1
  mpq_class C_a;                            ///< max of a_bound_ratios
  mpq_class C_b;                            ///< max of b_bound_ratios
  bool degree_ok = false;
  bool norm_identity_ok = false;
  std::vector<bool> lemma_ok;

  bool passed() const {
    return degree_ok && norm_identity_ok && !lemma_ok.empty() &&
           std::all_of(lemma_ok.begin(), lemma_ok.end(), [](bool b) { return b; });
  }
};

inline IntPolynomial build_F(std::span<const Value> x, std::span<const Value> y) {
  if (x.size() != y.size()) throw InvalidArgument("build_F: tuples differ in length");
  return shifted_polynomial(x) - shifted_polynomial(y);
}

/// Psi with F = m * Psi. Throws NotASolution when m does not divide F.
inline IntPolynomial factor_out_minpoly(const IntPolynomial& F, const MinimalPolynomial& m) {
  if (F.is_zero()) throw PreconditionViolation("factor_out_minpoly: F is the zero polynomial");
  auto [quotient, remainder] = divmod(to_rational(F), m.as_rational());
  if (!remainder.is_zero()) {
    throw NotASolution("m(t) does not divide F(t); the pair does not solve the equation for this shift");
  }
  auto psi = to_integral(quotient);
  if (!psi) throw InvariantViolation("quotient F/m is not integral although m is primitive");
  return *psi;
}

/// prod m(-x_i) == prod m(-y_i)
inline bool norm_identity_check(const SolutionPair& pair, const MinimalPolynomial& m) {
  mpz_class lhs = 1, rhs = 1;
  for (Value v : pair.x) lhs *= norm_factor(to_mpz(v), m);
  for (Value v : pair.y) rhs *= norm_factor(to_mpz(v), m);
  return lhs == rhs;
}

/// Full identity check for a cancelled solution pair. Precondition: no x_i
/// equals any y_j. Bound ratios are measured against X.
inline WitnessReport lemma31_verify(const SolutionPair& pair, const MinimalPolynomial& m, std::int64_t X) {
  if (pair.x.size() != pair.y.size()) throw PreconditionViolation("pair sides differ in length");
  if (pair.x.empty()) throw PreconditionViolation("pair is diagonal after cancellation");
  if (pair.shares_value()) throw PreconditionViolation("pair shares a value; cancel common factors first");
  if (X < 1) throw InvalidArgument("X must be >= 1");

  WitnessReport r;
  r.pair = pair;
  r.X = X;
  r.k = static_cast<int>(pair.size());
  r.d = m.degree();
  r.F = build_F(pair.x, pair.y);
  r.psi = factor_out_minpoly(r.F, m);

  const mpz_class bigX = to_mpz(X);
  r.degree_ok = r.F.degree() <= r.k - 1 && r.psi.degree() <= r.k - 1 - r.d && r.F == m.poly() * r.psi;

  for (Value yj : pair.y) {
    mpz_class lhs = 1;
    for (Value xi : pair.x) lhs *= to_mpz(xi - yj);
    const mpz_class at = to_mpz(-yj);
    const mpz_class rho = r.psi.evaluate(at);
    const mpz_class mval = m.evaluate(at);
    r.rho.push_back(rho);
    r.lemma_ok.push_back(lhs == rho * mval && sgn(lhs) != 0 && sgn(rho) != 0 && sgn(mval) != 0);
  }

  r.C_a = 0;
  for (int j = 0; j < r.k; ++j) {
    mpq_class ratio(abs(r.F[static_cast<std::size_t>(j)]), pow(bigX, static_cast<unsigned long>(r.k - j)));
    ratio.canonicalize();
    r.C_a = std::max(r.C_a, ratio);
    r.a_bound_ratios.push_back(std::move(ratio));
  }
  r.C_b = 0;
  for (int j = 0; j <= r.k - r.d - 1; ++j) {
    mpq_class ratio(abs(r.psi[static_cast<std::size_t>(j)]), pow(bigX, static_cast<unsigned long>(r.k - r.d - j)));
    ratio.canonicalize();
    r.C_b = std::max(r.C_b, ratio);
    r.b_bound_ratios.push_back(std::move(ratio));
  }

  r.norm_identity_ok = norm_identity_check(pair, m);
  return r;
}

struct BoundConstants {
  mpq_class C_a;
  mpq_class C_b;
};

/// Empirical constants: the largest coefficient ratios over a witness corpus.
inline BoundConstants measure_bound_constants(std::span<const WitnessReport> witnesses) {
  if (witnesses.empty()) throw InsufficientData("measure_bound_constants: no witnesses");
  BoundConstants c{0, 0};
  for (const auto& w : witnesses) {
    for (const auto& q : w.a_bound_ratios) c.C_a = std::max(c.C_a, q);
    for (const auto& q : w.b_bound_ratios) c.C_b = std::max(c.C_b, q);
  }
  return c;
}

/// |rho_j| <= k C X^(k-d) for every j, with C the measured b-constant.
inline bool rho_within_bound(const WitnessReport& w, const mpq_class& C) {
  const mpq_class bound = C * w.k * pow(to_mpz(w.X), static_cast<unsigned long>(std::max(0, w.k - w.d)));
  return std::all_of(w.rho.begin(), w.rho.end(), [&](const mpz_class& rho) { return mpq_class(abs(rho)) <= bound; });
}

/// Number of positive divisors of N = rho_k m(-y_k), the quantity whose
/// divisors bound the choices of x_i - y_k.
inline mpz_class divisor_count_of_last_rho_product(const WitnessReport& w, const MinimalPolynomial& m) {
  if (w.rho.empty()) throw PreconditionViolation("empty witness report");
  mpz_class n = abs(w.rho.back() * m.evaluate(to_mpz(-w.pair.y.back())));
  mpz_class count = 1;
  for (mpz_class p = 2; p * p <= n; ++p) {
    unsigned long e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (n > 1) count *= 2;
  return count;
}

}  // namespace paucity
