#pragma once

// Mean value M_k(X; theta) = sum_nu tau_k(nu; X, theta)^2 by canonical-form
// counting over multisets, plus non-diagonal witness extraction.
//
// Every non-decreasing k-tuple in [1, X] is enumerated once and weighted by
// its number of orderings. Its canonical product becomes a key; the table of
// (key, multiset, weight) entries is sorted, and each run of equal keys is a
// single nu with tau(nu) = sum of weights. The sort is by (key, multiset),
// a total order, so the result does not depend on how the enumeration was
// split across workers.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <span>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "paucity/canonical_product.hpp"
#include "paucity/diagonal.hpp"
#include "paucity/errors.hpp"
#include "paucity/gmp_util.hpp"
#include "paucity/multiset.hpp"
#include "paucity/shift.hpp"
#include "paucity/solution_pair.hpp"

namespace paucity {

enum class KeyPath {
  Automatic,  ///< compact machine-word keys, falling back to exact keys on overflow
  Compact,    ///< compact keys only; overflow is a CapacityError
  Exact,      ///< GMP CanonicalProduct keys
};

struct CountOptions {
  unsigned workers = 1;
  std::size_t memory_budget_mb = 2048;
  int max_k = 6;
  KeyPath key_path = KeyPath::Automatic;
};

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

struct CountReport {
  int k = 0;
  std::int64_t X = 0;
  ShiftDescriptor shift = ShiftDescriptor::transcendental();
  mpz_class mean_value;   ///< M
  mpz_class diagonal;     ///< T
  mpz_class nondiagonal;  ///< M - T
  std::uint64_t distinct_products = 0;
  double elapsed_ms = 0;
};

struct CountResult {
  CountReport report;
  std::vector<SolutionPair> witnesses;
};

namespace detail {

struct CompactOverflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CompactOverflow{};
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CompactOverflow{};
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw CompactOverflow{};
  return r;
}

inline std::int64_t to_compact(const mpz_class& v) {
  auto r = to_int64(v);
  if (!r) throw CompactOverflow{};
  return *r;
}

template <class Key>
struct Entry {
  Key key;
  std::uint64_t packed = 0;
  std::uint32_t weight = 0;

  friend bool operator<(const Entry& a, const Entry& b) {
    if (a.key < b.key) return true;
    if (b.key < a.key) return false;
    return a.packed < b.packed;
  }
};

/// Shift data reduced to machine words for the compact key builders.
struct CompactShift {
  ShiftKind kind = ShiftKind::Transcendental;
  std::vector<std::int64_t> minpoly;  // c_0..c_d
  std::int64_t p = 0;
  std::int64_t q = 1;

  explicit CompactShift(const ShiftDescriptor& shift) : kind(shift.kind()) {
    if (kind == ShiftKind::Algebraic) {
      for (const auto& c : shift.minimal_polynomial().poly().coefficients()) minpoly.push_back(to_compact(c));
    } else if (kind == ShiftKind::Rational) {
      p = to_compact(shift.rational_value().p);
      q = to_compact(shift.rational_value().q);
    }
  }
};

/// Key length for the compact representation.
inline std::size_t compact_width(int k, const ShiftDescriptor& shift) {
  switch (shift.kind()) {
    case ShiftKind::Transcendental:
      return static_cast<std::size_t>(k);
    case ShiftKind::Algebraic:
      return static_cast<std::size_t>(shift.minimal_polynomial().degree());
    case ShiftKind::Rational:
      return 1;
  }
  return 0;
}

/// Incremental compact key computation. Keeps prod_{i<j}(t + x_i) for every
/// prefix length j so that each visited tuple only recomputes the suffix.
///
/// Algebraic keys are the pseudo-remainder c_d^(k-d+1) * (prod (t + x_i) mod m)
/// when k >= d, a fixed nonzero multiple of the exact reduction, so key
/// equality is equivalent to equality in Q(theta).
template <std::size_t W>
class CompactKeyBuilder {
 public:
  using Key = std::array<std::int64_t, W>;

  CompactKeyBuilder(int k, const CompactShift& shift)
      : k_(static_cast<std::size_t>(k)),
        shift_(shift),
        prefix_((k_ + 1) * (k_ + 1), 0),
        work_(k_ + 1, 0) {
    prefix_[0] = 1;  // empty product
  }

  Key operator()(std::span<const Value> x, std::size_t changed) {
    for (std::size_t j = changed; j < k_; ++j) extend(j, x[j]);
    Key key{};
    const std::int64_t* full = row(k_);
    switch (shift_.kind) {
      case ShiftKind::Rational:
        key[0] = full[0];
        break;
      case ShiftKind::Transcendental:
        for (std::size_t j = 1; j <= k_; ++j) key[j - 1] = full[k_ - j];
        break;
      case ShiftKind::Algebraic:
        reduce(full, key);
        break;
    }
    return key;
  }

 private:
  std::int64_t* row(std::size_t j) { return prefix_.data() + j * (k_ + 1); }

  void extend(std::size_t j, Value v) {
    const std::int64_t* src = row(j);
    std::int64_t* dst = row(j + 1);
    if (shift_.kind == ShiftKind::Rational) {
      dst[0] = checked_mul(src[0], checked_add(checked_mul(shift_.q, v), shift_.p));
      return;
    }
    // (t + v) * src, src monic of degree j
    dst[0] = checked_mul(v, src[0]);
    for (std::size_t i = 1; i <= j; ++i) dst[i] = checked_add(src[i - 1], checked_mul(v, src[i]));
    dst[j + 1] = 1;
  }

  void reduce(const std::int64_t* full, Key& key) {
    const auto& m = shift_.minpoly;
    const std::size_t d = m.size() - 1;
    std::copy(full, full + k_ + 1, work_.begin());
    if (k_ >= d) {
      const std::int64_t lead = m[d];
      for (std::size_t n = k_; n >= d; --n) {
        const std::int64_t top = work_[n];
        const std::size_t off = n - d;
        for (std::size_t i = 0; i < n; ++i) {
          std::int64_t c = lead == 1 ? work_[i] : checked_mul(lead, work_[i]);
          if (i >= off && top != 0) c = checked_sub(c, checked_mul(top, m[i - off]));
          work_[i] = c;
        }
        work_[n] = 0;
        if (n == d) break;
      }
    }
    for (std::size_t i = 0; i < d; ++i) key[i] = i <= k_ ? work_[i] : 0;
  }

  std::size_t k_;
  CompactShift shift_;
  std::vector<std::int64_t> prefix_;
  std::vector<std::int64_t> work_;
};

class ExactKeyBuilder {
 public:
  using Key = CanonicalProduct;

  explicit ExactKeyBuilder(const ShiftDescriptor& shift) : shift_(shift) {}

  Key operator()(std::span<const Value> x, std::size_t) const { return shifted_product(x, shift_); }

 private:
  ShiftDescriptor shift_;
};

/// Entries for every multiset, split by first coordinate over `workers`
/// threads; each worker writes and sorts its own contiguous slice.
template <class Key, class MakeBuilder>
std::vector<Entry<Key>> build_sorted_table(int k, std::int64_t X, unsigned workers, MakeBuilder make_builder) {
  const TuplePacker packer(X, k);
  // Multisets with first coordinate a: C(X - a + k - 1, k - 1).
  std::vector<std::uint64_t> offset(static_cast<std::size_t>(X) + 2, 0);
  for (std::int64_t a = 1; a <= X; ++a) {
    const mpz_class n = binomial(to_mpz(X - a + k - 1), static_cast<unsigned long>(k - 1));
    offset[static_cast<std::size_t>(a) + 1] = offset[static_cast<std::size_t>(a)] + n.get_ui();
  }
  const std::uint64_t total = offset[static_cast<std::size_t>(X) + 1];
  std::vector<Entry<Key>> entries(total);

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(X)));
  // Contiguous first-coordinate ranges of roughly equal entry counts.
  std::vector<std::int64_t> bounds{1};
  for (unsigned w = 1; w < workers; ++w) {
    const std::uint64_t target = total / workers * w;
    std::int64_t a = bounds.back();
    while (a <= X && offset[static_cast<std::size_t>(a) + 1] <= target) ++a;
    bounds.push_back(std::min(a, X + 1));
  }
  bounds.push_back(X + 1);

  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned w) {
    try {
      const std::int64_t lo = bounds[w];
      const std::int64_t hi = bounds[w + 1] - 1;
      if (lo > hi) return;
      auto builder = make_builder();
      std::uint64_t pos = offset[static_cast<std::size_t>(lo)];
      for_each_multiset(k, X, lo, hi, [&](std::span<const Value> x, std::size_t changed) {
        auto& e = entries[pos++];
        e.key = builder(x, changed);
        e.packed = packer.pack(x);
        e.weight = orderings(x);
      });
      std::sort(entries.begin() + static_cast<std::ptrdiff_t>(offset[static_cast<std::size_t>(lo)]),
                entries.begin() + static_cast<std::ptrdiff_t>(pos));
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (unsigned w = 1; w < workers; ++w) {
    const auto mid = entries.begin() + static_cast<std::ptrdiff_t>(offset[static_cast<std::size_t>(bounds[w])]);
    const auto end = entries.begin() + static_cast<std::ptrdiff_t>(offset[static_cast<std::size_t>(bounds[w + 1])]);
    std::inplace_merge(entries.begin(), mid, end);
  }
  return entries;
}

/// Walks runs of equal keys. `on_run` receives the run as a span.
template <class Key, class OnRun>
void for_each_run(const std::vector<Entry<Key>>& entries, OnRun&& on_run) {
  std::size_t i = 0;
  while (i < entries.size()) {
    std::size_t j = i + 1;
    while (j < entries.size() && !(entries[i].key < entries[j].key)) ++j;
    on_run(std::span<const Entry<Key>>(entries.data() + i, j - i));
    i = j;
  }
}

template <class Key>
CountResult summarize(const std::vector<Entry<Key>>& entries, int k, std::int64_t X, const ShiftDescriptor& shift,
                      std::size_t witness_limit) {
  const TuplePacker packer(X, k);
  CountResult out;
  unsigned __int128 mean = 0;
  unsigned __int128 diag_from_table = 0;
  std::uint64_t distinct = 0;
  for_each_run(entries, [&](std::span<const Entry<Key>> run) {
    unsigned __int128 f = 0;
    for (const auto& e : run) {
      f += e.weight;
      diag_from_table += static_cast<unsigned __int128>(e.weight) * e.weight;
    }
    mean += f * f;
    ++distinct;
    if (witness_limit == 0 || run.size() < 2) return;
    for (std::size_t a = 0; a < run.size(); ++a) {
      for (std::size_t b = a + 1; b < run.size(); ++b) {
        out.witnesses.push_back(SolutionPair{packer.unpack(run[a].packed), packer.unpack(run[b].packed)}.canonical());
      }
    }
  });

  CountReport& r = out.report;
  r.k = k;
  r.X = X;
  r.shift = shift;
  r.mean_value = to_mpz(mean);
  r.diagonal = diagonal_count_exact(k, X);
  r.nondiagonal = r.mean_value - r.diagonal;
  r.distinct_products = distinct;

  if (to_mpz(diag_from_table) != r.diagonal) {
    throw InvariantViolation("diagonal count from the table disagrees with the closed form");
  }
  if (sgn(r.nondiagonal) < 0 || mpz_odd_p(r.nondiagonal.get_mpz_t())) {
    throw InvariantViolation("non-diagonal count must be nonnegative and even");
  }

  if (witness_limit != 0) {
    std::sort(out.witnesses.begin(), out.witnesses.end());
    if (out.witnesses.size() > witness_limit) out.witnesses.resize(witness_limit);
  }
  return out;
}

inline void check_arguments(int k, std::int64_t X, const CountOptions& opts) {
  if (k < 1 || k > opts.max_k) {
    throw InvalidArgument("k must lie in [1, " + std::to_string(opts.max_k) + "], got " + std::to_string(k));
  }
  if (X < 1) throw InvalidArgument("X must be >= 1");
  if (opts.workers < 1) throw InvalidArgument("workers must be >= 1");
}

inline void check_capacity(int k, std::int64_t X, std::size_t bytes_per_entry, const CountOptions& opts) {
  const mpz_class entries = multiset_count(X, k);
  const mpz_class bytes = entries * static_cast<unsigned long>(bytes_per_entry);
  const mpz_class budget = mpz_class(static_cast<unsigned long>(opts.memory_budget_mb)) * 1024 * 1024;
  if (bytes > budget) {
    const mpz_class mb = bytes / (1024 * 1024) + 1;
    throw CapacityError("enumerating " + entries.get_str() + " multisets needs about " + mb.get_str() +
                        " MB, above the " + std::to_string(opts.memory_budget_mb) + " MB budget");
  }
}

template <std::size_t W>
CountResult run_compact(int k, std::int64_t X, const ShiftDescriptor& shift, std::size_t limit,
                        const CountOptions& opts) {
  using Key = typename CompactKeyBuilder<W>::Key;
  check_capacity(k, X, sizeof(Entry<Key>), opts);
  const CompactShift compact(shift);
  const auto entries = build_sorted_table<Key>(k, X, opts.workers, [&] { return CompactKeyBuilder<W>(k, compact); });
  return summarize(entries, k, X, shift, limit);
}

inline constexpr std::size_t kMaxCompactWidth = 8;

inline CountResult dispatch_compact(int k, std::int64_t X, const ShiftDescriptor& shift, std::size_t limit,
                                    const CountOptions& opts) {
  switch (compact_width(k, shift)) {
    case 1: return run_compact<1>(k, X, shift, limit, opts);
    case 2: return run_compact<2>(k, X, shift, limit, opts);
    case 3: return run_compact<3>(k, X, shift, limit, opts);
    case 4: return run_compact<4>(k, X, shift, limit, opts);
    case 5: return run_compact<5>(k, X, shift, limit, opts);
    case 6: return run_compact<6>(k, X, shift, limit, opts);
    case 7: return run_compact<7>(k, X, shift, limit, opts);
    case 8: return run_compact<8>(k, X, shift, limit, opts);
    default: throw CompactOverflow{};
  }
}

inline std::size_t exact_entry_bytes(int k, const ShiftDescriptor& shift) {
  // Rough: the entry itself plus one heap-allocated GMP value per component.
  return sizeof(Entry<CanonicalProduct>) + 48 * std::max<std::size_t>(1, compact_width(k, shift)) + 32;
}

inline std::vector<Entry<CanonicalProduct>> exact_table(int k, std::int64_t X, const ShiftDescriptor& shift,
                                                        const CountOptions& opts) {
  check_capacity(k, X, exact_entry_bytes(k, shift), opts);
  return build_sorted_table<CanonicalProduct>(k, X, opts.workers, [&] { return ExactKeyBuilder(shift); });
}

inline CountResult run(int k, std::int64_t X, const ShiftDescriptor& shift, std::size_t limit,
                       const CountOptions& opts) {
  check_arguments(k, X, opts);
  const auto start = std::chrono::steady_clock::now();
  CountResult result;
  bool done = false;
  if (opts.key_path != KeyPath::Exact) {
    try {
      result = dispatch_compact(k, X, shift, limit, opts);
      done = true;
    } catch (const CompactOverflow&) {
      if (opts.key_path == KeyPath::Compact) {
        throw CapacityError("canonical products overflow 64-bit compact keys");
      }
    }
  }
  if (!done) result = summarize(exact_table(k, X, shift, opts), k, X, shift, limit);
  result.report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace detail

/// Mean value M, diagonal count T and the number of distinct products for
/// ordered k-tuples over [1, X].
inline CountReport count_mean_value(int k, std::int64_t X, const ShiftDescriptor& shift,
                                    const CountOptions& opts = {}) {
  return detail::run(k, X, shift, 0, opts).report;
}

/// Count and up to `limit` non-diagonal witnesses from a single enumeration.
/// Witnesses are canonical (sorted sides, x < y) and listed in lexicographic order.
inline CountResult count_with_witnesses(int k, std::int64_t X, const ShiftDescriptor& shift, std::size_t limit,
                                        const CountOptions& opts = {}) {
  return detail::run(k, X, shift, limit, opts);
}

inline std::vector<SolutionPair> find_nondiagonal_witnesses(int k, std::int64_t X, const ShiftDescriptor& shift,
                                                            std::size_t limit, const CountOptions& opts = {}) {
  if (limit == 0) return {};
  return detail::run(k, X, shift, limit, opts).witnesses;
}

/// Ordered multiplicity of each canonical product, i.e. tau_k(nu; X, theta).
class FrequencyTable {
 public:
  std::uint64_t tau(const CanonicalProduct& nu) const {
    const auto it = counts_.find(nu);
    return it == counts_.end() ? 0 : it->second;
  }

  std::size_t distinct_products() const { return counts_.size(); }

  /// sum_nu tau(nu)^2
  mpz_class sum_of_squares() const {
    mpz_class s = 0;
    for (const auto& [nu, f] : counts_) s += mpz_class(static_cast<unsigned long>(f)) * static_cast<unsigned long>(f);
    return s;
  }

  /// sum_nu tau(nu); equals X^k.
  mpz_class total() const {
    mpz_class s = 0;
    for (const auto& [nu, f] : counts_) s += static_cast<unsigned long>(f);
    return s;
  }

  const std::unordered_map<CanonicalProduct, std::uint64_t>& counts() const { return counts_; }

 private:
  friend FrequencyTable build_frequency_table(int, std::int64_t, const ShiftDescriptor&, const CountOptions&);
  std::unordered_map<CanonicalProduct, std::uint64_t> counts_;
};

/// Frequency table from the same multiset enumeration used by
/// count_mean_value, keyed by exact canonical products.
inline FrequencyTable build_frequency_table(int k, std::int64_t X, const ShiftDescriptor& shift,
                                            const CountOptions& opts = {}) {
  detail::check_arguments(k, X, opts);
  const auto entries = detail::exact_table(k, X, shift, opts);
  FrequencyTable table;
  detail::for_each_run(entries, [&](std::span<const detail::Entry<CanonicalProduct>> run) {
    std::uint64_t f = 0;
    for (const auto& e : run) f += e.weight;
    table.counts_.emplace(run.front().key, f);
  });
  return table;
}

/// tau_k(nu; X, theta): ordered k-tuples d in [1, X]^k with prod (d_i + theta) = nu.
inline std::uint64_t tau(const CanonicalProduct& nu, int k, std::int64_t X, const ShiftDescriptor& shift,
                         const CountOptions& opts = {}) {
  return build_frequency_table(k, X, shift, opts).tau(nu);
}

}  // namespace paucity
