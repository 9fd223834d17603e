#pragma once

// Command-line front end: `hypack table|scan|optimize|verify`.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
// CSV output is locale-independent (fmt never consults the global locale),
// LF-terminated, with a fixed header. JSON is emitted with insertion-ordered
// snake_case keys and shortest round-trip number formatting.

#include <charconv>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "hypack/hypack.hpp"

namespace hypack::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Format { Csv, Json };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double parse_number(std::string_view s) {
  double v = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) throw UsageError("not a number: '" + std::string(s) + "'");
  return v;
}

inline std::vector<double> parse_p_list(std::string_view s) {
  std::vector<double> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    out.push_back(parse_number(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  if (out.empty()) throw UsageError("--p needs at least one value");
  return out;
}

inline Interval parse_range(std::string_view s) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) throw UsageError("--p-range expects lo:hi, got '" + std::string(s) + "'");
  const Interval r{parse_number(s.substr(0, colon)), parse_number(s.substr(colon + 1))};
  if (!(r.hi > r.lo)) throw UsageError("--p-range needs lo < hi");
  return r;
}

inline std::string fixed8(double v) { return fmt::format("{:.8f}", v); }

// Shortest representation that round-trips; "nan" for undefined samples.
inline std::string shortest(double v) { return std::isfinite(v) ? fmt::format("{}", v) : std::string("nan"); }

inline Json json_number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

// ---------------------------------------------------------------------------

inline int cmd_table(Family f, const std::vector<double>& ps, Format fmt_kind, std::ostream& out, std::ostream& err,
                     const Kernels& k = {}) {
  int status = kExitOk;
  Json rows = Json::array();
  if (fmt_kind == Format::Csv) out << "p,h,vol_over_48,piece_over_m,delta\n";
  for (double p : ps) {
    try {
      const TableRow r = table_row(f, p, k.lobachevsky);
      if (fmt_kind == Format::Csv) {
        out << shortest(r.p) << ',' << fixed8(r.h) << ',' << fixed8(r.vol_over_48) << ',' << fixed8(r.piece_over_m)
            << ',' << fixed8(r.delta) << '\n';
      } else {
        rows.push_back(Json{{"p", r.p},
                            {"h", r.h},
                            {"vol_over_48", r.vol_over_48},
                            {"piece_over_m", r.piece_over_m},
                            {"delta", r.delta}});
      }
    } catch (const Error& e) {
      status = kExitUsage;
      err << "p=" << shortest(p) << ": " << e.what() << '\n';
      if (fmt_kind == Format::Json) rows.push_back(Json{{"p", json_number(p)}, {"error", e.what()}});
    }
  }
  if (fmt_kind == Format::Json) {
    Json doc{{"family", std::string(to_string(f))}, {"piece_divisor", table_piece_divisor(f)}, {"rows", rows}};
    out << doc.dump() << '\n';
  }
  return status;
}

struct ScanRequest {
  Family family = Family::Octahedron;
  Variant variant = Variant::Congruent;
  std::optional<double> p;          // fixed p: abscissa is x
  std::optional<Interval> p_range;  // otherwise abscissa is p
  std::optional<double> x;          // fixed x for p-scans (overrides policy)
  XPolicy policy = XPolicy::Start;
  int n = 0;
};

inline int cmd_scan(const ScanRequest& req, Format fmt_kind, std::ostream& out, std::ostream& err,
                    const Kernels& k = {}) {
  if (req.n < 2) throw UsageError("--n must be at least 2");
  if (req.p.has_value() == req.p_range.has_value()) throw UsageError("scan needs exactly one of --p or --p-range");
  if (!variant_defined(req.family, req.variant)) {
    throw Error(ErrorKind::VariantMismatch,
                std::string(to_string(req.variant)) + " is not defined for the " + std::string(to_string(req.family)) + " family");
  }

  std::vector<ProfileSample> samples;
  const int n = req.n;
  auto node = [n](Interval r, int i) { return i == n - 1 ? r.hi : r.lo + (r.hi - r.lo) * static_cast<double>(i) / (n - 1); };

  if (req.p) {
    const TruncatedRegularCell cell = build(req.family, *req.p, k.lobachevsky);
    const auto iv = x_interval(cell, req.variant);
    if (!iv) {
      err << "empty interval: " << to_string(req.variant) << " does not occur for " << to_string(req.family)
          << " p = " << shortest(*req.p) << '\n';
      return kExitUsage;
    }
    for (int i = 0; i < n; ++i) {
      const double x = node(*iv, i);
      samples.push_back({x, density(cell, req.variant, x)});
    }
  } else {
    const Interval range = admissible_p_range(req.family, *req.p_range);
    for (int i = 0; i < n; ++i) {
      const double p = node(range, i);
      double value = std::numeric_limits<double>::quiet_NaN();
      if (req.x) {
        const TruncatedRegularCell cell = build(req.family, p, k.lobachevsky);
        const auto iv = x_interval(cell, req.variant);
        if (iv && iv->contains(*req.x, 1e-12)) value = density(cell, req.variant, *req.x);
      } else {
        value = density_at_policy(req.family, req.variant, req.policy, p, k.lobachevsky);
      }
      samples.push_back({p, value});
    }
  }

  if (fmt_kind == Format::Csv) {
    out << "abscissa,density\n";
    for (const auto& s : samples) out << shortest(s.abscissa) << ',' << shortest(s.value) << '\n';
  } else {
    Json arr = Json::array();
    for (const auto& s : samples) arr.push_back(Json{{"abscissa", s.abscissa}, {"density", json_number(s.value)}});
    out << arr.dump() << '\n';
  }
  return kExitOk;
}

struct OptimizeRequest {
  Family family = Family::Octahedron;
  Variant variant = Variant::Congruent;
  XPolicy policy = XPolicy::Start;
  std::optional<double> p;          // fixed p: maximize over x
  std::optional<Interval> p_range;  // otherwise maximize over p
};

inline int cmd_optimize(const OptimizeRequest& req, Format fmt_kind, std::ostream& out, std::ostream& err,
                        const Kernels& k = {}) {
  if (req.p.has_value() == req.p_range.has_value()) throw UsageError("optimize needs exactly one of --p or --p-range");

  Json doc;
  doc["family"] = std::string(to_string(req.family));
  doc["variant"] = std::string(to_string(req.variant));
  OptResult r;
  double p = 0.0;
  double x = 0.0;
  try {
    if (req.p) {
      const TruncatedRegularCell cell = build(req.family, *req.p, k.lobachevsky);
      r = maximize_over_x(cell, req.variant);
      p = *req.p;
      x = r.arg;
      doc["mode"] = "x";
    } else {
      r = maximize_over_p(req.family, req.variant, req.policy, *req.p_range, k.lobachevsky);
      p = r.arg;
      x = x_for_policy(build(req.family, p, k.lobachevsky), req.variant, req.policy).value_or(
          std::numeric_limits<double>::quiet_NaN());
      doc["mode"] = "p";
      doc["policy"] = std::string(to_string(req.policy));
      doc["p_range"] = Json::array({req.p_range->lo, req.p_range->hi});
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::VariantAbsent) {
      err << "variant absent on range: " << e.what() << '\n';
      return kExitUsage;
    }
    throw;
  }
  doc["p"] = p;
  doc["x"] = json_number(x);
  doc["delta"] = r.value;
  doc["bracket"] = Json::array({r.bracket.lo, r.bracket.hi});
  doc["tol"] = r.tol;
  doc["evaluations"] = r.evaluations;

  if (fmt_kind == Format::Json) {
    out << doc.dump() << '\n';
  } else {
    out << "p,x,delta,bracket_lo,bracket_hi,tol,evaluations\n"
        << shortest(p) << ',' << shortest(x) << ',' << shortest(r.value) << ',' << shortest(r.bracket.lo) << ','
        << shortest(r.bracket.hi) << ',' << shortest(r.tol) << ',' << r.evaluations << '\n';
  }
  return kExitOk;
}

inline int cmd_verify(const std::string& only, Format fmt_kind, std::ostream& out, const Kernels& k = {}) {
  const std::vector<Check> checks = verification_manifest();
  if (!only.empty()) {
    bool known = false;
    for (const Check& c : checks) known = known || c.group == only;
    if (!known) throw UsageError("unknown check group '" + only + "'");
  }
  const std::vector<RunReport> reports = run_checks(checks, only, k);
  int failed = 0;
  for (const RunReport& r : reports) failed += r.pass ? 0 : 1;

  if (fmt_kind == Format::Json) {
    Json arr = Json::array();
    for (const RunReport& r : reports) {
      Json j{{"group", r.group},
             {"name", r.name},
             {"provenance", r.provenance},
             {"expected", r.expected},
             {"computed", json_number(r.computed)},
             {"tolerance", r.tolerance},
             {"pass", r.pass}};
      if (!r.error.empty()) j["error"] = r.error;
      arr.push_back(std::move(j));
    }
    out << Json{{"passed", reports.size() - failed}, {"failed", failed}, {"checks", arr}}.dump() << '\n';
  } else {
    out << fmt::format("{:<10} {:<58} {:>14} {:>16} {:>8}  {}\n", "group", "check", "expected", "computed", "tol", "result");
    for (const RunReport& r : reports) {
      out << fmt::format("{:<10} {:<58} {:>14.8f} {:>16.10f} {:>8.0e}  {}", r.group, r.name, r.expected, r.computed,
                         r.tolerance, r.pass ? "PASS" : "FAIL");
      if (!r.error.empty()) out << "  (" << r.error << ')';
      out << '\n';
    }
    out << fmt::format("{} checks, {} passed, {} failed\n", reports.size(), reports.size() - failed, failed);
  }
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------

/// Parses argv and dispatches. Streams are injected so tests can capture output.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const Kernels& kernels = {}) {
  CLI::App app{"Hyperball packings of truncated octahedron and cube tilings", "hypack"};
  app.require_subcommand(1);

  std::string family, variant = "congruent", p_text, range_text, policy = "start", format, out_path, only;
  std::optional<double> x;
  int n = 0;

  const std::vector<std::string> families{"octahedron", "cube"};
  const std::vector<std::string> variants{"congruent", "delta1", "delta2", "delta3"};
  const std::vector<std::string> policies{"start", "end", "free"};
  const std::vector<std::string> formats{"csv", "json"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
  };

  CLI::App* table = app.add_subcommand("table", "Cell data and congruent density for a list of p");
  table->add_option("--family", family)->required()->check(CLI::IsMember(families));
  table->add_option("--p", p_text, "Comma-separated list of p")->required();
  add_common(table);

  CLI::App* scan = app.add_subcommand("scan", "Density curve over x (fixed --p) or over p (--p-range)");
  scan->add_option("--family", family)->required()->check(CLI::IsMember(families));
  scan->add_option("--variant", variant)->check(CLI::IsMember(variants));
  scan->add_option("--p", p_text, "Fixed p; the abscissa is x");
  scan->add_option("--p-range", range_text, "lo:hi; the abscissa is p");
  scan->add_option("--x", x, "Fixed x for p-scans");
  scan->add_option("--policy", policy, "x policy for p-scans")->check(CLI::IsMember(policies));
  scan->add_option("--n", n, "Number of samples (>= 2)")->required();
  add_common(scan);

  CLI::App* optimize = app.add_subcommand("optimize", "Maximize the density over x (--p) or over p (--p-range)");
  optimize->add_option("--family", family)->required()->check(CLI::IsMember(families));
  optimize->add_option("--variant", variant)->check(CLI::IsMember(variants));
  optimize->add_option("--p", p_text);
  optimize->add_option("--p-range", range_text);
  optimize->add_option("--policy", policy)->check(CLI::IsMember(policies));
  add_common(optimize);

  CLI::App* verify = app.add_subcommand("verify", "Check every published reference value");
  verify->add_option("--only", only, "Run a single check group");
  verify->add_option("--format", format)->check(CLI::IsMember(formats));
  verify->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  // optimize defaults to JSON, the others to CSV / text
  if (format.empty()) format = optimize->parsed() ? "json" : "csv";

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      err << "cannot open output file '" << out_path << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }
  const Format fmt_kind = format == "json" ? Format::Json : Format::Csv;

  try {
    const Family fam = family.empty() ? Family::Octahedron : *parse_family(family);
    const Variant var = *parse_variant(variant);
    const XPolicy pol = *parse_policy(policy);

    if (table->parsed()) return cmd_table(fam, parse_p_list(p_text), fmt_kind, *sink, err, kernels);
    if (scan->parsed()) {
      ScanRequest req{fam, var, std::nullopt, std::nullopt, x, pol, n};
      if (!p_text.empty()) req.p = parse_number(p_text);
      if (!range_text.empty()) req.p_range = parse_range(range_text);
      return cmd_scan(req, fmt_kind, *sink, err, kernels);
    }
    if (optimize->parsed()) {
      OptimizeRequest req{fam, var, pol, std::nullopt, std::nullopt};
      if (!p_text.empty()) req.p = parse_number(p_text);
      if (!range_text.empty()) req.p_range = parse_range(range_text);
      return cmd_optimize(req, fmt_kind, *sink, err, kernels);
    }
    return cmd_verify(only, fmt_kind, *sink, kernels);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hypack::cli
