#pragma once

// Deterministic 1-D maximization: a uniform scan isolates the global maximum
// on the closed interval, then golden-section search refines it inside the
// two neighbouring grid cells. Interval endpoints are ordinary candidates, so
// a maximum sitting on the boundary is returned exactly at the boundary.

#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypack/cell.hpp"
#include "hypack/error.hpp"
#include "hypack/packing.hpp"

namespace hypack {

struct OptResult {
  double arg = 0.0;
  double value = 0.0;
  Interval bracket{};
  double tol = 0.0;  // half-width of the final bracket
  int evaluations = 0;
};

/// How x is chosen when the density is viewed as a function of p alone.
enum class XPolicy { Start, End, FreeX };

constexpr std::string_view to_string(XPolicy p) {
  switch (p) {
    case XPolicy::Start: return "start";
    case XPolicy::End: return "end";
    case XPolicy::FreeX: return "free";
  }
  return "?";
}

inline std::optional<XPolicy> parse_policy(std::string_view s) {
  if (s == "start") return XPolicy::Start;
  if (s == "end") return XPolicy::End;
  if (s == "free") return XPolicy::FreeX;
  return std::nullopt;
}

struct OptOptions {
  int grid = 1024;
  double xtol = 1e-10;
  double tie = 1e-13;  // grid values closer than this count as equal; smaller argument wins
};

/// Offset applied to an open lower end sitting on the family bound.
inline constexpr double kOpenEndOffset = 1e-6;

template <std::invocable<double> F>
OptResult maximize_1d(F&& f, Interval range, const OptOptions& opt = {}) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  int evals = 0;
  auto eval = [&](double x) {
    ++evals;
    const double v = static_cast<double>(f(x));
    return std::isnan(v) ? kNegInf : v;
  };

  const double lo = range.lo;
  const double hi = range.hi;
  if (!(hi >= lo)) throw Error(ErrorKind::OutOfRange, "maximize: empty interval");
  if (hi == lo) {
    const double v = eval(lo);
    if (v == kNegInf) throw Error(ErrorKind::VariantAbsent, "maximize: objective undefined on the interval");
    return {lo, v, {lo, lo}, 0.0, evals};
  }
  if (opt.grid < 2) throw Error(ErrorKind::OutOfRange, "maximize: grid needs at least 2 points");

  const int n = opt.grid;
  auto grid_x = [&](int i) { return i == n - 1 ? hi : lo + (hi - lo) * static_cast<double>(i) / (n - 1); };
  int best = 0;
  double best_v = kNegInf;
  for (int i = 0; i < n; ++i) {
    const double v = eval(grid_x(i));
    if (v > best_v + opt.tie || (best_v == kNegInf && v > kNegInf)) {
      best = i;
      best_v = v;
    }
  }
  if (best_v == kNegInf) throw Error(ErrorKind::VariantAbsent, "maximize: objective undefined on the whole interval");

  double a = grid_x(best > 0 ? best - 1 : 0);
  double b = grid_x(best < n - 1 ? best + 1 : n - 1);

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  while (b - a > opt.xtol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eval(d);
    }
  }
  const double mid = 0.5 * (a + b);
  const double mid_v = eval(mid);

  OptResult r;
  const bool at_end = best == 0 || best == n - 1;
  if ((at_end && best_v >= mid_v - opt.tie) || best_v > mid_v + opt.tie) {
    r.arg = grid_x(best);
    r.value = best_v;
  } else {
    r.arg = mid;
    r.value = mid_v;
  }
  r.bracket = {std::min(a, r.arg), std::max(b, r.arg)};
  r.tol = 0.5 * (r.bracket.hi - r.bracket.lo);
  r.evaluations = evals;
  return r;
}

/// Best blow-up parameter for a fixed cell.
inline OptResult maximize_over_x(const TruncatedRegularCell& cell, Variant v, const OptOptions& opt = {}) {
  const auto iv = x_interval(cell, v);
  if (!iv) {
    throw Error(ErrorKind::VariantAbsent,
                std::string(to_string(v)) + " has an empty x-interval at p = " + std::to_string(cell.p));
  }
  return maximize_1d([&](double x) { return density(cell, v, x); }, *iv, opt);
}

/// x selected by the policy; nullopt when the variant does not occur.
inline std::optional<double> x_for_policy(const TruncatedRegularCell& cell, Variant v, XPolicy policy) {
  const auto iv = x_interval(cell, v);
  if (!iv) return std::nullopt;
  switch (policy) {
    case XPolicy::Start: return iv->lo;
    case XPolicy::End: return iv->hi;
    case XPolicy::FreeX: return maximize_over_x(cell, v).arg;
  }
  return std::nullopt;
}

/// Density at (p, x chosen by policy); NaN when the variant is absent at p.
inline double density_at_policy(Family f, Variant v, XPolicy policy, double p, LobachevskyFn L = &lobachevsky) {
  const TruncatedRegularCell cell = build(f, p, L);
  const auto x = x_for_policy(cell, v, policy);
  if (!x) return std::numeric_limits<double>::quiet_NaN();
  return density(cell, v, *x);
}

/// Clamp a requested p-range to the family's admissible half-line.
inline Interval admissible_p_range(Family f, Interval p_range) {
  Interval r = p_range;
  if (r.lo <= min_p(f) + kOpenEndOffset) r.lo = min_p(f) + kOpenEndOffset;
  if (!(r.hi > r.lo))
    throw Error(ErrorKind::OutOfRange, "p-range has no admissible part (p > " +
                                           std::to_string(static_cast<int>(min_p(f))) + " required)");
  return r;
}

inline OptResult maximize_over_p(Family f, Variant v, XPolicy policy, Interval p_range,
                                 LobachevskyFn L = &lobachevsky, const OptOptions& opt = {}) {
  if (!variant_defined(f, v))
    throw Error(ErrorKind::VariantMismatch, std::string(to_string(v)) + " is not defined for the " +
                                                std::string(to_string(f)) + " family");
  const Interval range = admissible_p_range(f, p_range);
  try {
    return maximize_1d([&](double p) { return density_at_policy(f, v, policy, p, L); }, range, opt);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::VariantAbsent)
      throw Error(ErrorKind::VariantAbsent, std::string(to_string(v)) + " variant absent on range");
    throw;
  }
}

struct ProfileSample {
  double abscissa;
  double value;
};

struct MonotoneSegment {
  std::size_t first;  // sample indices, inclusive
  std::size_t last;
  int direction;  // +1 increasing, -1 decreasing, 0 flat or undefined
};

struct MonotoneProfile {
  std::vector<ProfileSample> samples;
  std::vector<MonotoneSegment> segments;
  int sign_changes = 0;
  std::vector<double> turning_points;  // abscissae where the direction flips
};

/// Uniform sample of f on the closed range, segmented by the sign of
/// successive differences. Differences within flat_tol count as flat and do
/// not break a run; non-finite samples break it.
template <std::invocable<double> F>
MonotoneProfile monotone_profile(F&& f, Interval range, int n, double flat_tol = 0.0) {
  if (n < 3) throw Error(ErrorKind::OutOfRange, "monotone_profile: need at least 3 samples");
  MonotoneProfile prof;
  prof.samples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = i == n - 1 ? range.hi : range.lo + (range.hi - range.lo) * static_cast<double>(i) / (n - 1);
    prof.samples.push_back({x, static_cast<double>(f(x))});
  }

  int last_dir = 0;
  for (std::size_t k = 0; k + 1 < prof.samples.size(); ++k) {
    const double a = prof.samples[k].value;
    const double b = prof.samples[k + 1].value;
    int dir = 0;
    if (std::isfinite(a) && std::isfinite(b)) {
      const double diff = b - a;
      if (diff > flat_tol) dir = 1;
      else if (diff < -flat_tol) dir = -1;
    } else {
      last_dir = 0;
    }
    if (dir != 0 && last_dir != 0 && dir != last_dir) {
      ++prof.sign_changes;
      prof.turning_points.push_back(prof.samples[k].abscissa);
    }
    if (dir != 0) last_dir = dir;

    if (!prof.segments.empty() && prof.segments.back().direction == dir && prof.segments.back().last == k) {
      prof.segments.back().last = k + 1;
    } else {
      prof.segments.push_back({k, k + 1, dir});
    }
  }
  return prof;
}

inline MonotoneProfile monotone_profile(Family f, Variant v, XPolicy policy, Interval p_range, int n,
                                        LobachevskyFn L = &lobachevsky) {
  const Interval range = admissible_p_range(f, p_range);
  return monotone_profile([&](double p) { return density_at_policy(f, v, policy, p, L); }, range, n);
}

}  // namespace hypack
