#pragma once

// Brute-force reference implementations used only by tests. They share no
// code with the counting engine: products are formed with plain int64
// arithmetic in Z[t] or Z[t]/(m) for monic m, every ordered k-tuple is
// evaluated, and M = sum over distinct values of (multiplicity)^2.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

/// Every ordered k-tuple in [1, X]^k.
inline std::vector<Vec> all_tuples(int k, std::int64_t X) {
  std::vector<Vec> out;
  Vec x(static_cast<std::size_t>(k), 1);
  while (true) {
    out.push_back(x);
    int i = k - 1;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == X) x[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++x[static_cast<std::size_t>(i)];
  }
  return out;
}

/// Coefficients of prod (t + x_i), low to high, by naive expansion.
inline Vec expand(const Vec& x) {
  Vec p{1};
  for (auto v : x) {
    Vec q(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += v * p[i];
      q[i + 1] += p[i];
    }
    p = q;
  }
  return p;
}

/// prod (x_i + t) in Z[t]/(m) for monic m = c0 + ... + t^d.
inline Vec product_mod_monic(const Vec& x, const Vec& m) {
  const std::size_t d = m.size() - 1;
  Vec acc(d, 0);
  acc[0] = 1;
  for (auto v : x) {
    // acc * (t + v)
    Vec next(d + 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
      next[i] += v * acc[i];
      next[i + 1] += acc[i];
    }
    // t^d = -(c0 + ... + c_{d-1} t^{d-1})
    const auto top = next[d];
    for (std::size_t i = 0; i < d; ++i) next[i] -= top * m[i];
    next.resize(d);
    acc = next;
  }
  return acc;
}

/// Number of ordered pairs (x, y) of tuples with value(x) == value(y).
inline std::uint64_t count_equal_pairs(int k, std::int64_t X, const std::function<Vec(const Vec&)>& value) {
  const auto tuples = all_tuples(k, X);
  std::vector<Vec> values;
  values.reserve(tuples.size());
  for (const auto& t : tuples) values.push_back(value(t));
  std::sort(values.begin(), values.end());
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    n += static_cast<std::uint64_t>(j - i) * (j - i);
    i = j;
  }
  return n;
}

inline std::uint64_t brute_force_diagonal(int k, std::int64_t X) {
  return count_equal_pairs(k, X, [](Vec v) {
    std::sort(v.begin(), v.end());
    return v;
  });
}

inline std::uint64_t brute_force_transcendental(int k, std::int64_t X) {
  return count_equal_pairs(k, X, expand);
}

inline std::uint64_t brute_force_monic(int k, std::int64_t X, const Vec& m) {
  return count_equal_pairs(k, X, [&](const Vec& x) { return product_mod_monic(x, m); });
}

inline std::uint64_t brute_force_rational(int k, std::int64_t X, std::int64_t p, std::int64_t q) {
  return count_equal_pairs(k, X, [&](const Vec& x) {
    std::int64_t prod = 1;
    for (auto v : x) prod *= q * v + p;
    return Vec{prod};
  });
}

}  // namespace oracle
