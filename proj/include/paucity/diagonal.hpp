#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "paucity/errors.hpp"
#include "paucity/gmp_util.hpp"

namespace paucity {

namespace detail {

template <class Fn>
void for_each_partition(int n, int max_part, std::vector<int>& parts, Fn&& fn) {
  if (n == 0) {
    fn(parts);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    parts.push_back(p);
    for_each_partition(n - p, p, parts, fn);
    parts.pop_back();
  }
}

}  // namespace detail

/// T_k(X): ordered pairs (x, y) in [1, X]^k x [1, X]^k with y a permutation of x.
///
/// Summed over multiplicity patterns lambda (partitions of k with r parts):
/// the number of multisets with that pattern is X(X-1)...(X-r+1) / prod(mu_s!)
/// where mu_s counts parts of size s, and each contributes (k!/prod lambda_i!)^2.
inline mpz_class diagonal_count_exact(int k, std::int64_t X) {
  if (k < 1 || X < 1) throw InvalidArgument("diagonal_count_exact needs k >= 1 and X >= 1");
  const mpz_class kfact = factorial(static_cast<unsigned long>(k));
  mpz_class total = 0;
  std::vector<int> parts;
  detail::for_each_partition(k, k, parts, [&](const std::vector<int>& lambda) {
    const auto r = static_cast<std::int64_t>(lambda.size());
    if (r > X) return;
    mpz_class choices = 1;
    for (std::int64_t i = 0; i < r; ++i) choices *= to_mpz(X - i);
    mpz_class orderings = kfact;
    std::size_t run = 1;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      orderings /= factorial(static_cast<unsigned long>(lambda[i]));
      if (i + 1 < lambda.size() && lambda[i + 1] == lambda[i]) {
        ++run;
      } else {
        choices /= factorial(run);
        run = 1;
      }
    }
    total += choices * orderings * orderings;
  });
  return total;
}

}  // namespace paucity
