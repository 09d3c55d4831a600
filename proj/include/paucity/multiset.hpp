#pragma once

// Multisets of size k drawn from [1, X], represented as non-decreasing tuples.

#include <gmpxx.h>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "paucity/canonical_product.hpp"
#include "paucity/errors.hpp"
#include "paucity/gmp_util.hpp"

namespace paucity {

/// C(X + k - 1, k)
inline mpz_class multiset_count(std::int64_t X, int k) {
  return binomial(to_mpz(X + k - 1), static_cast<unsigned long>(k));
}

/// Number of distinct orderings k! / prod(mult_i!) of a sorted tuple.
inline std::uint32_t orderings(std::span<const Value> sorted) {
  std::uint64_t num = 1;
  for (std::size_t i = 2; i <= sorted.size(); ++i) num *= i;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
      ++run;
      num /= run;
    } else {
      run = 1;
    }
  }
  return static_cast<std::uint32_t>(num);
}

/// Packs a tuple of values in [0, 2^bits) into one 64-bit word, first value
/// in the most significant slot, so packed order is lexicographic order.
class TuplePacker {
 public:
  TuplePacker(std::int64_t X, int k)
      : bits_(static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(X)))), k_(k) {
    if (bits_ * static_cast<unsigned>(k) > 64) {
      throw CapacityError("cannot pack " + std::to_string(k) + " values below " + std::to_string(X + 1) +
                          " into 64 bits");
    }
  }

  std::uint64_t pack(std::span<const Value> x) const {
    std::uint64_t w = 0;
    for (Value v : x) w = (bits_ == 64 ? 0 : w << bits_) | static_cast<std::uint64_t>(v);
    return w;
  }

  Tuple unpack(std::uint64_t w) const {
    Tuple x(static_cast<std::size_t>(k_));
    const std::uint64_t mask = bits_ == 64 ? ~0ULL : (1ULL << bits_) - 1;
    for (std::size_t i = x.size(); i-- > 0;) {
      x[i] = static_cast<Value>(w & mask);
      w = bits_ == 64 ? 0 : w >> bits_;
    }
    return x;
  }

 private:
  unsigned bits_;
  int k_;
};

/// Visits every non-decreasing k-tuple in [1, X]^k whose first entry lies in
/// [first_lo, first_hi], in lexicographic order. The visitor receives the
/// tuple and the index of the leftmost entry that changed since the previous
/// call (0 on the first call), so prefix computations can be reused.
template <class Visitor>
void for_each_multiset(int k, std::int64_t X, std::int64_t first_lo, std::int64_t first_hi, Visitor&& visit) {
  if (k < 1 || first_lo > first_hi || first_lo < 1 || first_hi > X) return;
  std::vector<Value> x(static_cast<std::size_t>(k), first_lo);
  const auto last = static_cast<std::size_t>(k - 1);
  std::size_t changed = 0;
  while (true) {
    visit(std::span<const Value>(x), changed);
    std::size_t i = last + 1;
    while (i-- > 0) {
      const Value limit = i == 0 ? first_hi : X;
      if (x[i] < limit) break;
      if (i == 0) return;
    }
    ++x[i];
    for (std::size_t j = i + 1; j <= last; ++j) x[j] = x[i];
    changed = i;
  }
}

}  // namespace paucity
