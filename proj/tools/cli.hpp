#pragma once

// Command-line front end: count, scan, witness, lemma-check, contrast.
//
// Exit codes: 0 success / all checks pass, 1 usage or parse error,
// 2 capacity error, 3 check failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "paucity/paucity.hpp"

namespace paucity::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kCapacity = 2, kCheckFailed = 3 };

struct RunConfig {
  int k = 2;
  std::optional<std::int64_t> X;
  std::vector<std::int64_t> X_list;
  std::string shift = "transcendental";
  std::string algebraic_shift = "minpoly:-2,0,1";
  std::size_t limit = 100;
  unsigned workers = 1;
  std::string format = "csv";
  std::string out;
  std::string in;
  std::size_t memory_budget_mb = 2048;
  bool no_timing = false;

  CountOptions count_options() const {
    CountOptions o;
    o.workers = workers;
    o.memory_budget_mb = memory_budget_mb;
    return o;
  }
};

namespace detail {

inline std::int64_t require_X(const RunConfig& c) {
  if (!c.X) throw InvalidArgument("--X is required");
  return *c.X;
}

inline std::vector<std::int64_t> require_X_list(const RunConfig& c) {
  if (c.X_list.empty()) throw InvalidArgument("--X-list is required");
  for (std::size_t i = 1; i < c.X_list.size(); ++i) {
    if (c.X_list[i] <= c.X_list[i - 1]) throw InvalidArgument("--X-list must be strictly increasing");
  }
  return c.X_list;
}

inline void warn_unverified(const ShiftDescriptor& shift, std::ostream& err) {
  if (shift.kind() == ShiftKind::Algebraic && !shift.minimal_polynomial().irreducibility_verified()) {
    err << "warning: irreducibility of " << shift.to_string()
        << " is only partially verified (no rational root); degree >= 5\n";
  }
}

inline std::string limit_text(std::size_t limit) { return limit == 0 ? "unlimited" : std::to_string(limit); }

}  // namespace detail

inline int cmd_count(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto shift = parse_shift(c.shift);
  detail::warn_unverified(shift, err);
  const auto report = count_mean_value(c.k, detail::require_X(c), shift, c.count_options());
  if (c.format == "json") {
    out << to_json(report, !c.no_timing).dump(2) << "\n";
  } else {
    out << kCountCsvHeader << "\n" << to_csv_row(report, !c.no_timing) << "\n";
  }
  return kOk;
}

inline int cmd_scan(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto shift = parse_shift(c.shift);
  detail::warn_unverified(shift, err);
  const auto xs = detail::require_X_list(c);
  if (xs.size() < 3) throw InsufficientData("scan needs at least 3 X values");
  std::vector<CountReport> reports;
  for (std::int64_t X : xs) reports.push_back(count_mean_value(c.k, X, shift, c.count_options()));
  const auto fit = paucity_exponent_fit(reports);
  const auto reference = reference_exponent(c.k, shift);
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& r : reports) rows.push_back(to_json(r, !c.no_timing));
    out << json{{"rows", rows}, {"fit", to_json(fit, reference)}}.dump(2) << "\n";
    return kOk;
  }
  out << kCountCsvHeader << "\n";
  for (const auto& r : reports) out << to_csv_row(r, !c.no_timing) << "\n";
  std::ostringstream alpha;
  if (fit.fitted()) {
    alpha << fit.alpha;
  } else {
    alpha << "zero-count";
  }
  out << "# alpha=" << alpha.str() << " reference_exponent=" << (reference ? std::to_string(*reference) : "n/a")
      << " points=" << fit.points << "\n";
  return kOk;
}

inline int cmd_witness(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto shift = parse_shift(c.shift);
  detail::warn_unverified(shift, err);
  const std::size_t limit = c.limit == 0 ? kUnlimited : c.limit;
  const auto result = count_with_witnesses(c.k, detail::require_X(c), shift, limit, c.count_options());
  out << to_json(std::span<const SolutionPair>(result.witnesses)).dump() << "\n";
  err << "found " << result.witnesses.size() << " witness pair(s) (limit " << detail::limit_text(c.limit)
      << "), nondiag=" << result.report.nondiagonal.get_str() << "\n";
  return kOk;
}

/// Verifies witnesses read from --in (a file, or '-' for stdin), or found by
/// searching with the configured k, X and shift when --in is absent.
inline int cmd_lemma_check(const RunConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto shift = parse_shift(c.shift);
  detail::warn_unverified(shift, err);
  const auto m = shift.defining_polynomial();
  if (!m) throw InvalidArgument("lemma-check needs an algebraic or rational shift");

  std::vector<SolutionPair> witnesses;
  if (c.in.empty()) {
    const std::size_t limit = c.limit == 0 ? kUnlimited : c.limit;
    witnesses = find_nondiagonal_witnesses(c.k, detail::require_X(c), shift, limit, c.count_options());
  } else {
    json j;
    try {
      if (c.in == "-") {
        j = json::parse(in);
      } else {
        std::ifstream file(c.in);
        if (!file) throw ParseError("cannot open " + c.in);
        j = json::parse(file);
      }
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid witness JSON: ") + e.what());
    }
    witnesses = witnesses_from_json(j);
  }

  std::int64_t X = c.X.value_or(1);
  if (!c.X) {
    for (const auto& w : witnesses) {
      for (Value v : w.x) X = std::max(X, v);
      for (Value v : w.y) X = std::max(X, v);
    }
  }

  std::vector<WitnessReport> reports;
  bool ok = true;
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const auto& w = witnesses[i];
    const auto reduced = cancel_common_factors(w);
    const std::string label = "witness " + std::to_string(i) + " " + to_json(w).dump();
    if (reduced.empty()) {
      err << label << ": rejected, diagonal after cancellation\n";
      ok = false;
      continue;
    }
    try {
      auto report = lemma31_verify(reduced, *m, X);
      if (!report.passed()) {
        err << label << ": identity check failed\n";
        ok = false;
      }
      reports.push_back(std::move(report));
    } catch (const NotASolution& e) {
      err << label << ": not a solution: " << e.what() << "\n";
      ok = false;
    }
  }
  if (!reports.empty()) {
    const auto constants = measure_bound_constants(reports);
    for (const auto& r : reports) {
      if (!rho_within_bound(r, constants.C_b)) {
        err << "witness " << to_json(r.pair).dump() << ": |rho| exceeds k C X^(k-d)\n";
        ok = false;
      }
    }
    err << "checked " << reports.size() << " witness(es); C_a=" << constants.C_a.get_str()
        << " C_b=" << constants.C_b.get_str() << "\n";
  } else {
    err << "checked 0 witnesses\n";
  }

  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  out << arr.dump() << "\n";
  return ok ? kOk : kCheckFailed;
}

inline int cmd_contrast(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto rational = parse_shift(c.shift);
  const auto algebraic = parse_shift(c.algebraic_shift);
  detail::warn_unverified(algebraic, err);
  std::vector<std::int64_t> xs = c.X_list;
  if (xs.empty() && c.X) xs.push_back(*c.X);
  if (xs.empty()) throw InvalidArgument("--X-list or --X is required");
  if (!c.X_list.empty()) xs = detail::require_X_list(c);
  const auto rows = contrast_table(c.k, xs, rational, algebraic, c.count_options());
  if (c.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back(json{{"X", r.X},
                         {"k", r.k},
                         {"shift_rational_nondiag", json_integer(r.rational_nondiag)},
                         {"shift_algebraic_nondiag", json_integer(r.algebraic_nondiag)}});
    }
    out << arr.dump(2) << "\n";
  } else {
    out << kContrastCsvHeader << "\n";
    for (const auto& r : rows) out << to_csv_row(r) << "\n";
  }
  return kOk;
}

/// Parses argv and runs one subcommand. Output goes to `out` unless --out is given.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts solutions of (x1+theta)...(xk+theta) = (y1+theta)...(yk+theta) and checks paucity identities",
               "paucity"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&c](CLI::App* sub) {
    sub->add_option("--k", c.k, "number of factors")->check(CLI::PositiveNumber);
    sub->add_option("--X", c.X, "upper bound for x_i, y_i")->check(CLI::PositiveNumber);
    sub->add_option("--X-list", c.X_list, "comma-separated X values")->delimiter(',');
    sub->add_option("--shift", c.shift, "transcendental | minpoly:c0,...,cd | rational:p/q");
    sub->add_option("--limit", c.limit, "maximum number of witnesses (0 = unlimited)");
    sub->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", c.out, "output file (default stdout)");
    sub->add_option("--memory-budget-mb", c.memory_budget_mb, "memory budget for the enumeration table");
    sub->add_flag("--no-timing", c.no_timing, "write elapsed_ms as 0 for reproducible output");
  };

  auto* count = app.add_subcommand("count", "mean value M, diagonal T and non-diagonal count");
  add_common(count);
  auto* scan = app.add_subcommand("scan", "counts over an X grid with a log-log exponent fit");
  add_common(scan);
  auto* witness = app.add_subcommand("witness", "non-diagonal solution pairs as JSON");
  add_common(witness);
  auto* lemma = app.add_subcommand("lemma-check", "verify factorization identities on witnesses");
  add_common(lemma);
  lemma->add_option("--in", c.in, "witness JSON file, '-' for stdin (default: search with --k/--X/--shift)");
  auto* contrast = app.add_subcommand("contrast", "rational versus algebraic non-diagonal counts");
  add_common(contrast);
  contrast->add_option("--algebraic-shift", c.algebraic_shift, "shift for the second column");
  contrast->get_option("--shift")->default_str("rational:1/2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int rc = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return rc == 0 ? kOk : kUsage;
  }
  if (contrast->parsed() && contrast->count("--shift") == 0) c.shift = "rational:1/2";

  std::ofstream file;
  std::ostream* sink = &out;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) {
      err << "error: cannot open " << c.out << " for writing\n";
      return kUsage;
    }
    sink = &file;
  }

  try {
    if (count->parsed()) return cmd_count(c, *sink, err);
    if (scan->parsed()) return cmd_scan(c, *sink, err);
    if (witness->parsed()) return cmd_witness(c, *sink, err);
    if (lemma->parsed()) return cmd_lemma_check(c, in, *sink, err);
    if (contrast->parsed()) return cmd_contrast(c, *sink, err);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const NotASolution& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const PreconditionViolation& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const InvariantViolation& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace paucity::cli
