#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace paucity {

inline mpz_class to_mpz(std::int64_t v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

inline mpz_class to_mpz(unsigned __int128 v) {
  mpz_class r;
  mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(v >> 64));
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 64);
  mpz_add_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(v));
  return r;
}

inline std::optional<std::int64_t> to_int64(const mpz_class& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) return std::nullopt;
  return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

inline std::string to_string(const mpz_class& v) { return v.get_str(); }

inline std::string to_string(const mpq_class& v) { return v.get_str(); }

inline std::size_t hash_combine(std::size_t seed, std::size_t h) {
  return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::size_t hash_value(const mpz_class& v) {
  const mpz_srcptr z = v.get_mpz_t();
  std::size_t seed = static_cast<std::size_t>(mpz_sgn(z) + 1);
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    seed = hash_combine(seed, std::hash<mp_limb_t>{}(mpz_getlimbn(z, static_cast<mp_size_t>(i))));
  }
  return seed;
}

inline std::size_t hash_value(const mpq_class& v) {
  return hash_combine(hash_value(v.get_num()), hash_value(v.get_den()));
}

/// base^exponent for a small nonnegative exponent.
inline mpz_class pow(const mpz_class& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline mpz_class binomial(const mpz_class& n, unsigned long k) {
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

}  // namespace paucity
