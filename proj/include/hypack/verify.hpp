#pragma once

// Built-in verification manifest: every published reference value the
// library is expected to reproduce, with its provenance and tolerance.
// Tolerances follow the printed precision: 1e-6 for eight-digit table
// entries, 1e-4 for five-digit constants and optimum locations.

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "hypack/cell.hpp"
#include "hypack/error.hpp"
#include "hypack/lobachevsky.hpp"
#include "hypack/optimize.hpp"
#include "hypack/packing.hpp"

namespace hypack {

/// Numerical kernels the checks run against; replaceable to exercise failure paths.
struct Kernels {
  LobachevskyFn lobachevsky = &hypack::lobachevsky;
};

struct Check {
  std::string group;
  std::string name;
  std::string provenance;
  double expected;
  double tolerance;
  std::function<double(const Kernels&)> compute;
};

struct RunReport {
  std::string group;
  std::string name;
  std::string provenance;
  double expected = 0.0;
  double computed = std::numeric_limits<double>::quiet_NaN();
  double tolerance = 0.0;
  bool pass = false;
  std::string error;
};

/// One table row: h, Vol/48, piece/m, congruent density.
struct TableRow {
  double p = 0.0;
  double h = 0.0;
  double vol_over_48 = 0.0;
  double piece_over_m = 0.0;
  double delta = 0.0;
};

inline TableRow table_row(Family f, double p, LobachevskyFn L = &lobachevsky) {
  const TruncatedRegularCell cell = build(f, p, L);
  TableRow row;
  row.p = p;
  row.h = cell.h;
  row.vol_over_48 = cell.volume / 48.0;
  row.piece_over_m = hyperball_piece_volume(cell.face_area, cell.h) / table_piece_divisor(f);
  row.delta = density(cell, Variant::Congruent, 0.0);
  return row;
}

struct GlobalBest {
  Variant variant = Variant::Congruent;
  int p = 0;
  double x = 0.0;
  double value = -1.0;
};

/// Best density over every defined variant and integer p in [p_lo, p_hi].
inline GlobalBest best_over_integer_p(Family f, int p_lo, int p_hi, LobachevskyFn L = &lobachevsky) {
  GlobalBest best;
  for (int p = p_lo; p <= p_hi; ++p) {
    const TruncatedRegularCell cell = build(f, p, L);
    for (Variant v : {Variant::Congruent, Variant::Delta1, Variant::Delta2, Variant::Delta3}) {
      if (!variant_defined(f, v) || !x_interval(cell, v)) continue;
      const OptResult r = maximize_over_x(cell, v);
      if (r.value > best.value + 1e-13) best = {v, p, r.arg, r.value};
    }
  }
  return best;
}

inline std::vector<Check> verification_manifest() {
  std::vector<Check> checks;
  auto add = [&](std::string group, std::string name, std::string prov, double expected, double tol,
                 std::function<double(const Kernels&)> fn) {
    checks.push_back({std::move(group), std::move(name), std::move(prov), expected, tol, std::move(fn)});
  };

  struct PublishedRow {
    int p;
    double h, vol48, piece, delta;
  };
  const PublishedRow octa_rows[] = {
      {5, 0.69128565, 0.16596371, 0.12761435, 0.76892924},  {6, 0.48121183, 0.19616337, 0.13616563, 0.69414405},
      {7, 0.37938071, 0.21217704, 0.13400462, 0.63156984},  {20, 0.11318462, 0.24655736, 0.07142045, 0.28967074},
      {50, 0.04456095, 0.25026133, 0.03221956, 0.12874366}, {100, 0.02223088, 0.25078571, 0.01676445, 0.06684770},
  };
  const PublishedRow cube_rows[] = {
      {7, 1.03799291, 0.16297337, 0.11218983, 0.68839367},  {8, 0.76428546, 0.18789693, 0.12193107, 0.64892530},
      {9, 0.62216938, 0.20295023, 0.12372607, 0.60963750},  {20, 0.23086908, 0.24206876, 0.08613744, 0.35583872},
      {50, 0.08938872, 0.24956032, 0.04129724, 0.16547999}, {100, 0.04449475, 0.25061105, 0.02191401, 0.08744233},
  };

  auto add_table = [&](const char* group, Family f, const PublishedRow* rows, std::size_t n) {
    const std::string fam(to_string(f));
    for (std::size_t i = 0; i < n; ++i) {
      const PublishedRow r = rows[i];
      const std::string row = fam + " p=" + std::to_string(r.p);
      const std::string prov = std::string("published ") + fam + " table, row p=" + std::to_string(r.p);
      const double p = r.p;
      add(group, row + " h", prov, r.h, 1e-6, [f, p](const Kernels& k) { return table_row(f, p, k.lobachevsky).h; });
      add(group, row + " vol/48", prov, r.vol48, 1e-6,
          [f, p](const Kernels& k) { return table_row(f, p, k.lobachevsky).vol_over_48; });
      add(group, row + " piece/" + std::to_string(table_piece_divisor(f)), prov, r.piece, 1e-6,
          [f, p](const Kernels& k) { return table_row(f, p, k.lobachevsky).piece_over_m; });
      add(group, row + " delta", prov, r.delta, 1e-6,
          [f, p](const Kernels& k) { return table_row(f, p, k.lobachevsky).delta; });
    }
  };
  add_table("table1", Family::Octahedron, octa_rows, std::size(octa_rows));
  add_table("table2", Family::Cube, cube_rows, std::size(cube_rows));

  // p -> infinity row, approximated at p = 1e6
  for (Family f : {Family::Octahedron, Family::Cube}) {
    const std::string fam(to_string(f));
    const std::string prov = "published " + fam + " table, limit row p -> infinity";
    add("limit", fam + " p=1e6 vol/48", prov, 0.25096025, 2e-6,
        [f](const Kernels& k) { return table_row(f, 1e6, k.lobachevsky).vol_over_48; });
    add("limit", fam + " p=1e6 h", prov, 0.0, 1e-5, [f](const Kernels& k) { return table_row(f, 1e6, k.lobachevsky).h; });
    add("limit", fam + " p=1e6 piece/" + std::to_string(table_piece_divisor(f)), prov, 0.0, 1e-5,
        [f](const Kernels& k) { return table_row(f, 1e6, k.lobachevsky).piece_over_m; });
  }

  auto cell_value = [](Family f, double p, auto getter) {
    return [f, p, getter](const Kernels& k) { return getter(build(f, p, k.lobachevsky)); };
  };
  using Cell = TruncatedRegularCell;
  const std::string octa5 = "octahedron p=5 distances";
  const std::string cube7 = "cube p=7 distances";
  add("constants", "octahedron 2h(5)", octa5, 1.38257, 1e-4, cell_value(Family::Octahedron, 5, [](const Cell& c) { return 2 * c.h; }));
  add("constants", "octahedron w(5)", octa5, 1.71082, 1e-4, cell_value(Family::Octahedron, 5, [](const Cell& c) { return c.w; }));
  add("constants", "octahedron t(5)", octa5, 1.16974, 1e-4, cell_value(Family::Octahedron, 5, [](const Cell& c) { return c.t; }));
  add("constants", "cube 2h(7)", cube7, 2.07599, 1e-4, cell_value(Family::Cube, 7, [](const Cell& c) { return 2 * c.h; }));
  add("constants", "cube w(7)", cube7, 2.07599, 1e-4, cell_value(Family::Cube, 7, [](const Cell& c) { return c.w; }));
  add("constants", "cube t(7)", cube7, 1.67069, 1e-4, cell_value(Family::Cube, 7, [](const Cell& c) { return c.t; }));
  add("constants", "cube s(7)-h(7)", cube7, 0.41108, 1e-4,
      cell_value(Family::Cube, 7, [](const Cell& c) { return c.s.value() - c.h; }));

  auto x_max = [](Family f, double p, Variant v) {
    return [f, p, v](const Kernels& k) {
      const auto iv = x_interval(build(f, p, k.lobachevsky), v);
      return iv ? iv->hi : std::numeric_limits<double>::quiet_NaN();
    };
  };
  add("intervals", "octahedron p=5 delta1 x_max", "octahedron p=5 delta1 interval", 0.47845, 1e-4, x_max(Family::Octahedron, 5, Variant::Delta1));
  add("intervals", "octahedron p=5 delta2 x_max", "octahedron p=5 delta2 interval", 0.21285, 1e-4, x_max(Family::Octahedron, 5, Variant::Delta2));
  add("intervals", "cube p=7 delta1 x_max", "cube p=7 delta1 interval", 0.63270, 1e-4, x_max(Family::Cube, 7, Variant::Delta1));
  add("intervals", "cube p=7 delta2 x_max", "cube p=7 delta2 interval", 0.40530, 1e-4, x_max(Family::Cube, 7, Variant::Delta2));
  add("intervals", "cube p=7 delta3 x_max", "cube p=7 delta3 interval", 0.41108, 1e-4, x_max(Family::Cube, 7, Variant::Delta3));

  // density at x = 0 (start) or x = x_max (end)
  auto dens = [](Family f, double p, Variant v, bool at_end) {
    return [f, p, v, at_end](const Kernels& k) {
      const Cell cell = build(f, p, k.lobachevsky);
      const auto iv = x_interval(cell, v);
      if (!iv) return std::numeric_limits<double>::quiet_NaN();
      return density(cell, v, at_end ? iv->hi : 0.0);
    };
  };
  add("densities", "octahedron p=5 delta1(x_max)", "octahedron p=5 delta1 endpoint density", 0.72624, 1e-4, dens(Family::Octahedron, 5, Variant::Delta1, true));
  add("densities", "cube p=7 delta1(x_max)", "cube p=7 delta1 endpoint density", 0.64805, 1e-4, dens(Family::Cube, 7, Variant::Delta1, true));
  add("densities", "cube p=7 delta2(0)", "cube p=7 delta2 starting density", 0.64805, 1e-4, dens(Family::Cube, 7, Variant::Delta2, false));
  add("densities", "cube p=7 delta2(x_max)", "cube p=7 delta2 endpoint density", 0.81542, 1e-4, dens(Family::Cube, 7, Variant::Delta2, true));
  add("densities", "cube p=7 delta3(0)", "cube p=7 delta3 starting density", 0.68839, 1e-4, dens(Family::Cube, 7, Variant::Delta3, false));
  add("densities", "cube p=7 delta3(x_max)", "cube p=7 delta3 endpoint density", 0.84931, 1e-4, dens(Family::Cube, 7, Variant::Delta3, true));
  add("densities", "cube p=8 delta3(x_max)", "cube p=8 delta3 endpoint density", 0.82259, 1e-4, dens(Family::Cube, 8, Variant::Delta3, true));
  add("densities", "cube p=8 delta3 x_max", "cube p=8 delta3 interval", 0.45994, 1e-4, x_max(Family::Cube, 8, Variant::Delta3));

  auto over_x = [](Family f, double p, Variant v, bool want_arg) {
    return [=](const Kernels& k) {
      const OptResult r = maximize_over_x(build(f, p, k.lobachevsky), v);
      return want_arg ? r.arg : r.value;
    };
  };
  auto over_p = [](Family f, Variant v, XPolicy pol, Interval range, bool want_arg) {
    return [=](const Kernels& k) {
      const OptResult r = maximize_over_p(f, v, pol, range, k.lobachevsky);
      return want_arg ? r.arg : r.value;
    };
  };
  add("optima", "octahedron p=5 delta1 argmax x", "octahedron p=5: delta1 maximal at the starting point", 0.0, 1e-4, over_x(Family::Octahedron, 5, Variant::Delta1, true));
  add("optima", "octahedron p=5 delta1 max", "octahedron p=5: delta1 maximal at the starting point", 0.76893, 1e-4, over_x(Family::Octahedron, 5, Variant::Delta1, false));
  add("optima", "octahedron p=5 delta2 argmax x", "octahedron p=5: delta2 maximal at the starting point", 0.0, 1e-4, over_x(Family::Octahedron, 5, Variant::Delta2, true));
  add("optima", "cube p=7 delta3 argmax x", "cube p=7: delta3 maximal at x = s - h", 0.41108, 1e-4, over_x(Family::Cube, 7, Variant::Delta3, true));
  add("optima", "cube p=7 delta3 max", "cube p=7: delta3 maximal at x = s - h", 0.84931, 1e-4, over_x(Family::Cube, 7, Variant::Delta3, false));
  add("optima", "cube p=8 delta3 argmax x", "cube p=8: delta3 maximal at x = s - h", 0.45994, 1e-4, over_x(Family::Cube, 8, Variant::Delta3, true));
  add("optima", "cube p=8 delta3 max", "cube p=8: delta3 maximal at x = s - h", 0.82259, 1e-4, over_x(Family::Cube, 8, Variant::Delta3, false));
  add("optima", "octahedron congruent p_opt", "octahedron congruent optimum over real p > 4", 4.11320, 1e-4,
      over_p(Family::Octahedron, Variant::Congruent, XPolicy::Start, {4.0, 20.0}, true));
  add("optima", "octahedron congruent delta_opt", "octahedron congruent optimum over real p > 4", 0.83173, 1e-4,
      over_p(Family::Octahedron, Variant::Congruent, XPolicy::Start, {4.0, 20.0}, false));
  add("optima", "cube congruent p_opt", "cube congruent optimum over real p > 6", 6.33962, 1e-4,
      over_p(Family::Cube, Variant::Congruent, XPolicy::Start, {6.0, 20.0}, true));
  add("optima", "cube congruent delta_opt", "cube congruent optimum over real p > 6", 0.70427, 1e-4,
      over_p(Family::Cube, Variant::Congruent, XPolicy::Start, {6.0, 20.0}, false));
  add("optima", "cube delta2 end p_opt", "cube delta2 endpoint optimum, 6 < p < 7", 6.10563, 1e-4,
      over_p(Family::Cube, Variant::Delta2, XPolicy::End, {6.0, 7.0}, true));
  add("optima", "cube delta2 end delta_opt", "cube delta2 endpoint optimum, 6 < p < 7", 0.85684, 1e-4,
      over_p(Family::Cube, Variant::Delta2, XPolicy::End, {6.0, 7.0}, false));
  add("optima", "cube delta3 end p_opt", "cube delta3 endpoint optimum, 6 < p < 7", 6.26384, 1e-4,
      over_p(Family::Cube, Variant::Delta3, XPolicy::End, {6.0, 7.0}, true));
  add("optima", "cube delta3 end delta_opt", "cube delta3 endpoint optimum, 6 < p < 7", 0.86145, 1e-4,
      over_p(Family::Cube, Variant::Delta3, XPolicy::End, {6.0, 7.0}, false));
  add("optima", "cube delta3 end x_opt", "cube delta3 endpoint optimum, 6 < p < 7", 0.36563, 1e-4, [](const Kernels& k) {
    const OptResult r = maximize_over_p(Family::Cube, Variant::Delta3, XPolicy::End, {6.0, 7.0}, k.lobachevsky);
    return x_interval(build(Family::Cube, r.arg, k.lobachevsky), Variant::Delta3)->hi;
  });

  add("global", "cube best over variants, integer p in [7,50]: value", "cube density upper bound for tilings", 0.84931, 1e-4,
      [](const Kernels& k) { return best_over_integer_p(Family::Cube, 7, 50, k.lobachevsky).value; });
  add("global", "cube best over variants, integer p in [7,50]: p", "cube density upper bound for tilings", 7.0, 0.0,
      [](const Kernels& k) { return static_cast<double>(best_over_integer_p(Family::Cube, 7, 50, k.lobachevsky).p); });
  add("global", "octahedron best over variants, integer p in [5,50]: value", "octahedron density upper bound for tilings", 0.76893, 1e-4,
      [](const Kernels& k) { return best_over_integer_p(Family::Octahedron, 5, 50, k.lobachevsky).value; });
  add("global", "octahedron best over variants, integer p in [5,50]: p", "octahedron density upper bound for tilings", 5.0, 0.0,
      [](const Kernels& k) { return static_cast<double>(best_over_integer_p(Family::Octahedron, 5, 50, k.lobachevsky).p); });

  add("reference", "cube delta3(x_max) at p=6.001", "one-sided limit p -> 6 near the Boroczky-Florian bound", 0.85328, 5e-3,
      dens(Family::Cube, 6.001, Variant::Delta3, true));
  return checks;
}

/// Runs the checks whose group equals `only` (all checks when empty).
inline std::vector<RunReport> run_checks(const std::vector<Check>& checks, const std::string& only = {},
                                         const Kernels& kernels = {}) {
  std::vector<RunReport> reports;
  for (const Check& c : checks) {
    if (!only.empty() && c.group != only) continue;
    RunReport r{c.group, c.name, c.provenance, c.expected, std::numeric_limits<double>::quiet_NaN(), c.tolerance, false, {}};
    try {
      r.computed = c.compute(kernels);
      r.pass = std::isfinite(r.computed) && std::abs(r.expected - r.computed) <= r.tolerance;
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace hypack
