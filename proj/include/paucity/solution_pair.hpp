#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "paucity/canonical_product.hpp"

namespace paucity {

/// A candidate solution (x, y) of prod (x_i + theta) = prod (y_i + theta).
struct SolutionPair {
  Tuple x;
  Tuple y;

  /// Both sides sorted and ordered so that x <= y lexicographically.
  SolutionPair canonical() const {
    SolutionPair c{x, y};
    std::sort(c.x.begin(), c.x.end());
    std::sort(c.y.begin(), c.y.end());
    if (c.y < c.x) std::swap(c.x, c.y);
    return c;
  }

  std::size_t size() const { return x.size(); }
  bool empty() const { return x.empty() && y.empty(); }

  /// True iff y is a permutation of x.
  bool is_diagonal() const {
    Tuple a = x, b = y;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool shares_value() const {
    for (Value a : x) {
      if (std::find(y.begin(), y.end(), a) != y.end()) return true;
    }
    return false;
  }

  friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
  friend auto operator<=>(const SolutionPair&, const SolutionPair&) = default;
};

/// Removes matched factors x_i = y_j one pair at a time until no value is
/// shared. Remaining entries keep their relative order. The result is empty
/// iff the input pair was diagonal.
inline SolutionPair cancel_common_factors(const SolutionPair& pair) {
  SolutionPair out;
  std::vector<bool> used(pair.y.size(), false);
  for (Value a : pair.x) {
    bool matched = false;
    for (std::size_t j = 0; j < pair.y.size(); ++j) {
      if (!used[j] && pair.y[j] == a) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) out.x.push_back(a);
  }
  for (std::size_t j = 0; j < pair.y.size(); ++j) {
    if (!used[j]) out.y.push_back(pair.y[j]);
  }
  return out;
}

}  // namespace paucity
