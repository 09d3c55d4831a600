#pragma once

// CSV rows for count/contrast tables and JSON for witnesses and witness reports.
// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; rationals are written as "p/q" strings.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "paucity/contrast.hpp"
#include "paucity/counting.hpp"
#include "paucity/errors.hpp"
#include "paucity/exponent_fit.hpp"
#include "paucity/shift.hpp"
#include "paucity/verifier.hpp"

namespace paucity {

using json = nlohmann::json;

inline constexpr const char* kCountCsvHeader = "k,X,shift,M,T,nondiag,distinct_nu,elapsed_ms";
inline constexpr const char* kContrastCsvHeader = "X,k,shift_rational_nondiag,shift_algebraic_nondiag";

/// RFC 4180 quoting for fields that contain a comma or a quote.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// One CSV row. With include_timing == false the elapsed column is 0 so that
/// output is reproducible byte for byte.
inline std::string to_csv_row(const CountReport& r, bool include_timing = true) {
  const long long ms = include_timing ? std::llround(r.elapsed_ms) : 0;
  return std::to_string(r.k) + "," + std::to_string(r.X) + "," + csv_field(r.shift.to_string()) + "," +
         r.mean_value.get_str() + "," + r.diagonal.get_str() + "," + r.nondiagonal.get_str() + "," +
         std::to_string(r.distinct_products) + "," + std::to_string(ms);
}

inline std::string to_csv_row(const ContrastRow& r) {
  return std::to_string(r.X) + "," + std::to_string(r.k) + "," + r.rational_nondiag.get_str() + "," +
         r.algebraic_nondiag.get_str();
}

inline json json_integer(const mpz_class& v) {
  if (auto small = to_int64(v)) return *small;
  return v.get_str();
}

inline mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return to_mpz(j.get<std::int64_t>());
  if (j.is_string()) return detail::parse_integer(j.get<std::string>(), "JSON integer");
  throw ParseError("expected an integer, got " + j.dump());
}

inline json to_json(const CountReport& r, bool include_timing = true) {
  return json{{"k", r.k},
              {"X", r.X},
              {"shift", r.shift.to_string()},
              {"M", json_integer(r.mean_value)},
              {"T", json_integer(r.diagonal)},
              {"nondiag", json_integer(r.nondiagonal)},
              {"distinct_nu", r.distinct_products},
              {"elapsed_ms", include_timing ? std::llround(r.elapsed_ms) : 0LL}};
}

inline json to_json(const SolutionPair& p) { return json{{"x", p.x}, {"y", p.y}}; }

inline json to_json(std::span<const SolutionPair> pairs) {
  json arr = json::array();
  for (const auto& p : pairs) arr.push_back(to_json(p));
  return arr;
}

inline SolutionPair solution_pair_from_json(const json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y")) {
    throw ParseError("witness must be an object with \"x\" and \"y\" arrays");
  }
  SolutionPair p;
  try {
    p.x = j.at("x").get<Tuple>();
    p.y = j.at("y").get<Tuple>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed witness: ") + e.what());
  }
  if (p.x.size() != p.y.size()) throw ParseError("witness sides differ in length");
  return p;
}

inline std::vector<SolutionPair> witnesses_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("witness list must be a JSON array");
  std::vector<SolutionPair> out;
  for (const auto& item : j) out.push_back(solution_pair_from_json(item));
  return out;
}

inline json to_json(const WitnessReport& w) {
  json F = json::array(), psi = json::array(), rho = json::array();
  for (const auto& c : w.F.coefficients()) F.push_back(json_integer(c));
  for (const auto& c : w.psi.coefficients()) psi.push_back(json_integer(c));
  for (const auto& c : w.rho) rho.push_back(json_integer(c));
  json lemma = json::array();
  for (bool b : w.lemma_ok) lemma.push_back(b);
  return json{{"x", w.pair.x},
              {"y", w.pair.y},
              {"F_coeffs", F},
              {"psi_coeffs", psi},
              {"rho", rho},
              {"C_a", w.C_a.get_str()},
              {"C_b", w.C_b.get_str()},
              {"norm_ok", w.norm_identity_ok},
              {"lemma_ok", lemma}};
}

inline json to_json(const ExponentFit& fit, std::optional<int> reference) {
  json j{{"status", fit.fitted() ? "fitted" : "zero-count"}, {"points", fit.points}};
  j["alpha"] = fit.fitted() ? json(fit.alpha) : json(nullptr);
  j["reference_exponent"] = reference ? json(*reference) : json(nullptr);
  return j;
}

}  // namespace paucity
