#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "paucity/counting.hpp"
#include "paucity/errors.hpp"

namespace paucity {

struct ExponentFit {
  enum class Status {
    Fitted,     ///< least-squares slope over all points
    ZeroCount,  ///< some non-diagonal count is zero; no log-log fit exists
  };
  Status status = Status::ZeroCount;
  double alpha = 0;  ///< slope of log(nondiag) against log(X); meaningful when Fitted
  std::size_t points = 0;

  bool fitted() const { return status == Status::Fitted; }
};

/// Ordinary least-squares slope through (log X_i, log y_i).
inline double log_log_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw InsufficientData("log_log_slope needs >= 2 points");
  const auto n = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += std::log(xs[i]);
    sy += std::log(ys[i]);
  }
  const double mx = sx / n, my = sy / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = std::log(xs[i]) - mx;
    sxy += dx * (std::log(ys[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

/// Growth exponent of the non-diagonal count across reports at strictly
/// increasing X with the same k and shift.
inline ExponentFit paucity_exponent_fit(std::span<const CountReport> reports) {
  if (reports.size() < 3) throw InsufficientData("exponent fit needs at least 3 reports");
  for (std::size_t i = 1; i < reports.size(); ++i) {
    if (reports[i].k != reports[0].k || !(reports[i].shift == reports[0].shift)) {
      throw InsufficientData("exponent fit needs reports with identical k and shift");
    }
    if (reports[i].X <= reports[i - 1].X) throw InsufficientData("exponent fit needs strictly increasing X");
  }
  ExponentFit fit;
  fit.points = reports.size();
  std::vector<double> xs, ys;
  for (const auto& r : reports) {
    if (sgn(r.nondiagonal) <= 0) return fit;
    xs.push_back(static_cast<double>(r.X));
    ys.push_back(r.nondiagonal.get_d());
  }
  fit.status = ExponentFit::Status::Fitted;
  fit.alpha = log_log_slope(xs, ys);
  return fit;
}

/// k - d + 1 for a shift of degree d, or nullopt for a transcendental shift.
inline std::optional<int> reference_exponent(int k, const ShiftDescriptor& shift) {
  const auto d = shift.degree();
  if (!d) return std::nullopt;
  return k - *d + 1;
}

}  // namespace paucity
