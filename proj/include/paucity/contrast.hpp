#pragma once

// The rational-shift control experiment. For theta = p/q the equation becomes
// prod (q x_i + p) = prod (q y_i + p) over the integers, which has many
// non-diagonal solutions, unlike irrational shifts.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "paucity/counting.hpp"
#include "paucity/errors.hpp"
#include "paucity/shift.hpp"

namespace paucity {

inline CountReport rational_count(int k, std::int64_t X, const mpz_class& p, const mpz_class& q,
                                  const CountOptions& opts = {}) {
  if (q < 1) throw InvalidArgument("rational shift needs q >= 1");
  if (gcd(p, q) != 1) throw InvalidArgument("rational shift needs gcd(p, q) = 1");
  return count_mean_value(k, X, ShiftDescriptor::rational(p, q), opts);
}

struct ContrastRow {
  std::int64_t X = 0;
  int k = 0;
  mpz_class rational_nondiag;
  mpz_class algebraic_nondiag;
};

/// Side-by-side non-diagonal counts for two shifts over the same X grid.
inline std::vector<ContrastRow> contrast_table(int k, std::span<const std::int64_t> xs,
                                               const ShiftDescriptor& rational_shift,
                                               const ShiftDescriptor& algebraic_shift, const CountOptions& opts = {}) {
  std::vector<ContrastRow> rows;
  rows.reserve(xs.size());
  for (std::int64_t X : xs) {
    ContrastRow row;
    row.X = X;
    row.k = k;
    row.rational_nondiag = count_mean_value(k, X, rational_shift, opts).nondiagonal;
    row.algebraic_nondiag = count_mean_value(k, X, algebraic_shift, opts).nondiagonal;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace paucity
