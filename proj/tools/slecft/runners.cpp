// Copyright 2026 The slecft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "runners.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "slecft/errors.hpp"
#include "slecft/green.hpp"
#include "slecft/schramm.hpp"
#include "slecft/sim/estimators.hpp"
#include "slecft/sim/rng.hpp"
#include "slecft/special.hpp"

#ifndef SLECFT_VERSION
#define SLECFT_VERSION "unknown"
#endif

namespace slecft::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string green_path_name(GreenPath p) {
  switch (p) {
    case GreenPath::kGeneric: return "generic";
    case GreenPath::kInteger: return "integer";
    default: return "blended";
  }
}

std::string real_text(double x) { return format_real(x); }

// ---------------------------------------------------------------- tabulate

struct CellPoint {
  double a = 0.0, b = 0.0;
};

ResultTable tabulate_table(const JobConfig& c) {
  const SLEParams p = c.params();
  const Tolerance tol = c.tol;
  const Observable o = c.observable;

  std::vector<CellPoint> cells;
  ResultTable t;
  if (o == Observable::kH) {
    for (double t1 : c.grid.theta1.values())
      for (double t2 : c.grid.theta2.values())
        if (t1 < t2) cells.push_back({t1, t2});
    t.columns = {{"theta1"}, {"theta2"}};
  } else if (o == Observable::kFusedH) {
    for (double th : c.grid.theta.values()) cells.push_back({th, 0.0});
    t.columns = {{"theta"}};
  } else {
    for (double x : c.grid.x.values())
      for (double y : c.grid.y.values()) cells.push_back({x, y});
    t.columns = {{"x"}, {"y"}};
  }

  const bool probability = o == Observable::kSchramm || o == Observable::kFusedSchramm;
  const bool provenance = o == Observable::kGreen || o == Observable::kH || o == Observable::kFusedH;
  t.columns.push_back({"value"});
  if (probability) {
    t.columns.push_back({"raw"});
    t.columns.push_back({"abs_error"});
  }
  if (provenance) {
    t.columns.push_back({"path", ColumnType::kText});
    t.columns.push_back({"note", ColumnType::kText});
  }
  t.columns.push_back({"error", ColumnType::kText});

  const std::size_t lead = (o == Observable::kFusedH) ? 1 : 2;
  t.rows.assign(cells.size(), std::vector<Cell>(t.columns.size()));

  auto eval = [&](std::uint64_t i) {
    const CellPoint& q = cells[i];
    std::vector<Cell>& row = t.rows[i];
    row[0] = q.a;
    if (lead == 2) row[1] = q.b;
    std::size_t k = lead;
    try {
      const cplx z(q.a, q.b);
      switch (o) {
        case Observable::kSchramm:
        case Observable::kFusedSchramm: {
          const Probability pr = o == Observable::kSchramm
                                     ? schramm_probability(z - c.xi1, c.xi2 - c.xi1, p, tol)
                                     : fused_schramm(z - c.xi1, p, tol);
          row[k++] = pr.value;
          row[k++] = pr.raw;
          row[k++] = pr.abs_error;
          break;
        }
        case Observable::kGreen:
        case Observable::kH:
        case Observable::kFusedH: {
          const GreenValue g = o == Observable::kGreen ? green_G_eval(z, c.xi1, c.xi2, p, tol)
                               : o == Observable::kH   ? h_eval({q.a, q.b}, p, tol)
                                                       : fused_h_eval(q.a, p, tol);
          row[k++] = g.value;
          row[k++] = green_path_name(g.path);
          row[k++] = g.diagnostic.value_or("");
          break;
        }
        case Observable::kBichordalGreen:
          row[k++] = bichordal_green(z, c.xi1, c.xi2, p, tol);
          break;
        case Observable::kChordalGreen:
          row[k++] = chordal_green(z - c.xi1, p);
          break;
      }
      const double v = std::get<double>(row[lead]);
      if (!std::isfinite(v)) throw NumericError("non-finite value");
      row.back() = std::string();
    } catch (const std::exception& e) {
      for (std::size_t j = lead; j + 1 < row.size(); ++j) row[j] = std::monostate{};
      row.back() = std::string(e.what());
    }
  };
  sim::for_each_sample(cells.size(), c.threads, eval);
  for (const auto& row : t.rows)
    if (!std::get<std::string>(row.back()).empty()) ++t.n_failures;
  return t;
}

// ------------------------------------------------------------------ verify

struct Check {
  std::string name;
  double measured = kNaN;
  double bound = kNaN;
  bool lower_bound = false;  // pass iff measured >= bound (else <=)
  std::string detail;
  std::string error;

  bool passed() const {
    if (!error.empty() || std::isnan(measured)) return false;
    return lower_bound ? measured >= bound : measured <= bound;
  }
};

// Runs `body` and records an exception as the check's error.
Check run_check(std::string name, double bound, bool lower, const std::function<void(Check&)>& body) {
  Check ck;
  ck.name = std::move(name);
  ck.bound = bound;
  ck.lower_bound = lower;
  try {
    body(ck);
  } catch (const std::exception& e) {
    ck.error = e.what();
  }
  return ck;
}

std::vector<AngleArgs> angle_cells(const JobConfig& c) {
  std::vector<AngleArgs> out;
  for (double t1 : c.grid.theta1.values())
    for (double t2 : c.grid.theta2.values())
      if (t1 < t2) out.push_back({t1, t2});
  return out;
}

std::string at_angles(AngleArgs th) {
  return "theta1=" + real_text(th.theta1) + " theta2=" + real_text(th.theta2);
}

// Tracks the largest deviation and where it occurred.
struct MaxTracker {
  double value = 0.0;
  std::string where;
  void update(double v, const std::function<std::string()>& at) {
    if (!(v <= value)) {
      value = v;
      where = at();
    }
  }
};

/// z with the given angles seen from 0 and 1.
cplx point_from_angles(AngleArgs th) {
  const double y = 1.0 / (1.0 / std::tan(th.theta1) - 1.0 / std::tan(th.theta2));
  return {y / std::tan(th.theta1), y};
}

// Least-squares slope of log|r| against log(step).
double fitted_order(const std::vector<double>& steps, const std::vector<double>& res) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const double x = std::log(steps[i]);
    const double y = std::log(std::max(std::abs(res[i]), 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<Check> suite_closed_forms(const JobConfig& c) {
  const SLEParams p = c.params();
  const int n = static_cast<int>(std::lround(p.alpha));
  const Tolerance tol = c.tol;
  std::vector<Check> out;
  const auto cells = angle_cells(c);
  out.push_back(run_check("h_integer_vs_closed_form", 1e-8, false, [&](Check& ck) {
    MaxTracker m;
    for (AngleArgs th : cells)
      m.update(std::abs(h_integer(th, n, tol) - h_closed_form(th, p.kappa)), [&] { return at_angles(th); });
    ck.measured = m.value;
    ck.detail = "max over " + std::to_string(cells.size()) + " cells at " + m.where;
  }));
  out.push_back(run_check("h_nonnegative", -1e-10, true, [&](Check& ck) {
    double lo = std::numeric_limits<double>::infinity();
    for (AngleArgs th : cells) lo = std::min(lo, h_value(th, p, tol));
    ck.measured = lo;
    ck.detail = "min of h over the angle grid";
  }));
  out.push_back(run_check("fused_h_vs_closed_form", 1e-8, false, [&](Check& ck) {
    MaxTracker m;
    for (double th : c.grid.theta.values())
      m.update(std::abs(fused_h(th, p, tol) - fused_h_closed_form(th, p.kappa)),
               [&] { return "theta=" + real_text(th); });
    ck.measured = m.value;
    ck.detail = "max at " + m.where;
  }));
  if (n == 2) {
    const double xi = c.xi2 - c.xi1;
    out.push_back(run_check("schramm_vs_kappa4_closed_form", 1e-8, false, [&](Check& ck) {
      MaxTracker m;
      for (double x : c.grid.x.values())
        for (double y : c.grid.y.values()) {
          const cplx z(x, y);
          m.update(std::abs(schramm_probability(z, xi, p, tol).raw - schramm_kappa4(z, xi)),
                   [&] { return "z=" + real_text(x) + "+" + real_text(y) + "i"; });
        }
      ck.measured = m.value;
      ck.detail = "xi=" + real_text(xi) + ", max at " + m.where;
    }));
  }
  return out;
}

std::vector<Check> suite_pde(const JobConfig& c) {
  const SLEParams p = c.params();
  const Tolerance tol = c.tol;
  const std::vector<double> steps{1e-2, 5e-3, 2.5e-3, 1.25e-3};
  struct Pt {
    double x, y, xi1, xi2;
  };
  std::vector<Pt> pts;
  sim::SampleStream rng(c.mc.seed.value_or(0), 0);
  for (int i = 0; i < 10; ++i) {
    Pt q;
    q.x = -2.0 + 4.0 * rng.uniform();
    q.y = 0.3 + 1.2 * rng.uniform();
    q.xi1 = -rng.uniform();
    q.xi2 = q.xi1 + 0.5 + rng.uniform();
    pts.push_back(q);
  }
  auto order_check = [&](const std::string& name, auto residual) {
    return run_check(name, 1.8, true, [&](Check& ck) {
      double worst = std::numeric_limits<double>::infinity();
      std::string where;
      for (const Pt& q : pts) {
        std::vector<double> r1, r2;
        for (double h : steps) {
          const PDEResidual r = residual(cplx(q.x, q.y), q.xi1, q.xi2, h);
          r1.push_back(r.residual_1);
          r2.push_back(r.residual_2);
        }
        for (double o : {fitted_order(steps, r1), fitted_order(steps, r2)})
          if (!(o >= worst)) {
            worst = o;
            where = "x=" + real_text(q.x) + " y=" + real_text(q.y) + " xi1=" + real_text(q.xi1) +
                    " xi2=" + real_text(q.xi2);
          }
      }
      ck.measured = worst;
      ck.detail = "min fitted order over 10 points and both operators at " + where;
    });
  };
  std::vector<Check> out;
  out.push_back(order_check("schramm_pde_order", [&](cplx z, double a, double b, double h) {
    return pde_residual_schramm(z, a, b, p, h, tol);
  }));
  out.push_back(order_check("green_pde_order", [&](cplx z, double a, double b, double h) {
    return pde_residual_green(z, a, b, p, h, tol);
  }));
  return out;
}

std::vector<Check> suite_boundary(const JobConfig& c) {
  const SLEParams p = c.params();
  const Tolerance tol = c.tol;
  std::vector<Check> out;
  out.push_back(run_check("h_boundary_limit", 1e-6, false, [&](Check& ck) {
    MaxTracker m;
    const double t2 = kPi - 1e-6;
    for (double t1 : c.grid.theta1.values()) {
      if (!(t1 < t2)) continue;
      m.update(std::abs(h_value({t1, t2}, p, tol) - std::pow(std::sin(t1), p.beta)),
               [&] { return "theta1=" + real_text(t1); });
    }
    ck.measured = m.value;
    ck.detail = "max |h(theta1, pi - 1e-6) - sin^beta(theta1)| at " + m.where;
  }));
  out.push_back(run_check("h_nonnegative", -1e-10, true, [&](Check& ck) {
    double lo = std::numeric_limits<double>::infinity();
    for (AngleArgs th : angle_cells(c)) lo = std::min(lo, h_value(th, p, tol));
    ck.measured = lo;
    ck.detail = "min of h over the angle grid";
  }));
  return out;
}

std::vector<Check> suite_fusion(const JobConfig& c) {
  const SLEParams p = c.params();
  const Tolerance tol = c.tol;
  std::vector<Check> out;
  out.push_back(run_check("schramm_small_xi_vs_fused", 1e-4, false, [&](Check& ck) {
    MaxTracker m;
    for (double x : c.grid.x.values())
      for (double y : c.grid.y.values()) {
        const cplx z(x, y);
        m.update(std::abs(schramm_probability(z, 1e-4, p, tol).raw - fused_schramm(z, p, tol).raw),
                 [&] { return "z=" + real_text(x) + "+" + real_text(y) + "i"; });
      }
    ck.measured = m.value;
    ck.detail = "xi=1e-4, max at " + m.where;
  }));
  if (std::abs(p.kappa - 4.0) < 1e-12) {
    out.push_back(run_check("fused_kappa4_on_axis", 1e-10, false, [&](Check& ck) {
      const double target = 0.25 - 1.0 / (kPi * kPi);
      ck.measured = std::abs(fused_schramm(cplx(0.0, 1.0), p, tol).raw - target);
      ck.detail = "|P_f(i) - (1/4 - 1/pi^2)|";
    }));
  }
  return out;
}

std::vector<Check> suite_continuation(const JobConfig& c) {
  const SLEParams p = c.params();
  const Tolerance tol = c.tol;
  const auto cells = angle_cells(c);
  std::vector<Check> out;
  const std::optional<int> n = p.integer_alpha(kIntegerAlphaTol);
  if (!n) {
    out.push_back(run_check("h_dual_path", 1e-8, false, [&](Check& ck) {
      MaxTracker m;
      for (AngleArgs th : cells) {
        const cplx z = point_from_angles(th);
        const double via_g = green_G(z, 0.0, 1.0, p, tol) / std::pow(z.imag(), p.d - 2.0);
        m.update(std::abs(h_angles(th, p, tol) - via_g), [&] { return at_angles(th); });
      }
      ck.measured = m.value;
      ck.detail = "Pochhammer h vs G / y^(d-2), max at " + m.where;
    }));
    return out;
  }
  const double delta = 1e-3;
  const SLEParams p1 = SLEParams::from_alpha(*n + delta);
  const SLEParams p2 = SLEParams::from_alpha(*n + 2.0 * delta);
  out.push_back(run_check("h_integer_vs_extrapolation", 1e-4, false, [&](Check& ck) {
    MaxTracker m;
    for (AngleArgs th : cells) {
      const double extrap = 2.0 * h_angles(th, p1, tol) - h_angles(th, p2, tol);
      m.update(std::abs(h_integer(th, *n, tol) - extrap), [&] { return at_angles(th); });
    }
    ck.measured = m.value;
    ck.detail = "linear extrapolation from alpha = n + 1e-3, n + 2e-3; max at " + m.where;
  }));
  out.push_back(run_check("fused_h_integer_vs_extrapolation", 1e-4, false, [&](Check& ck) {
    MaxTracker m;
    for (double th : c.grid.theta.values()) {
      const double extrap =
          0.5 * (fused_h_hypergeometric(th, *n - delta) + fused_h_hypergeometric(th, *n + delta));
      m.update(std::abs(fused_h_integer(th, *n, tol) - extrap), [&] { return "theta=" + real_text(th); });
    }
    ck.measured = m.value;
    ck.detail = "midpoint of alpha = n -+ 1e-3; max at " + m.where;
  }));
  return out;
}

ResultTable verify_table(const JobConfig& c) {
  std::vector<Check> checks;
  switch (c.suite) {
    case Suite::kClosedForms: checks = suite_closed_forms(c); break;
    case Suite::kPde: checks = suite_pde(c); break;
    case Suite::kBoundary: checks = suite_boundary(c); break;
    case Suite::kFusion: checks = suite_fusion(c); break;
    case Suite::kContinuation: checks = suite_continuation(c); break;
  }
  ResultTable t;
  t.columns = {{"check", ColumnType::kText},  {"measured"},
               {"bound"},                     {"relation", ColumnType::kText},
               {"passed", ColumnType::kInteger}, {"detail", ColumnType::kText},
               {"error", ColumnType::kText}};
  for (const Check& ck : checks) {
    std::vector<Cell> row{ck.name,
                          std::isnan(ck.measured) ? Cell{} : Cell{ck.measured},
                          ck.bound,
                          std::string(ck.lower_bound ? ">=" : "<="),
                          std::int64_t{ck.passed() ? 1 : 0},
                          ck.detail,
                          ck.error};
    t.rows.push_back(std::move(row));
    if (!ck.passed()) ++t.n_failures;
  }
  return t;
}

// ---------------------------------------------------------------- simulate

sim::DrivingSpec driving_of(const JobConfig& c) {
  const SLEParams p = c.params();
  return c.mc.driving == Driving::kChordal ? sim::DrivingSpec::chordal(p, c.xi1)
                                           : sim::DrivingSpec::slekr(p, c.xi1, c.xi2);
}

sim::MCSettings mc_settings(const JobConfig& c) {
  sim::MCSettings mc;
  mc.n_samples = c.mc.n_samples;
  mc.seed = *c.mc.seed;
  mc.threads = c.threads;
  return mc;
}

bool has_observable_target(const JobConfig& c) {
  if (c.mc.driving == Driving::kChordal) return true;
  return c.rho == 2.0 && c.kappa <= 4.0;
}

// Left-passage probability of z for the configured driving.
double left_passage_target(const JobConfig& c, cplx z) {
  const SLEParams p = c.params();
  const cplx w = z - c.xi1;
  if (c.mc.driving == Driving::kChordal) return chordal_left_passage(w, p);
  if (c.xi2 > c.xi1) return schramm_probability(w, c.xi2 - c.xi1, p, c.tol).raw;
  // Mirror image: the force point on the left swaps left and right.
  return 1.0 - schramm_probability(-std::conj(w), c.xi1 - c.xi2, p, c.tol).raw;
}

double green_target(const JobConfig& c, cplx z) {
  const SLEParams p = c.params();
  if (c.mc.driving == Driving::kChordal) return chordal_green(z - c.xi1, p);
  if (c.xi2 > c.xi1) return green_G(z, c.xi1, c.xi2, p, c.tol);
  return green_G(-std::conj(z), -c.xi1, -c.xi2, p, c.tol);
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& w : v) s += (s.empty() ? "" : "; ") + w;
  return s;
}

ResultTable simulate_table(const JobConfig& c) {
  const SLEParams p = c.params();
  const sim::MCSettings mc = mc_settings(c);
  const cplx z(c.mc.z_re, c.mc.z_im);
  ResultTable t;
  switch (c.mc.estimator) {
    case Estimator::kLeftPassage: {
      sim::LeftPassageConfig lp;
      lp.driving = driving_of(c);
      lp.z = z;
      lp.angle_n = c.mc.angle_n;
      const sim::EstimatorResult r = sim::estimate_left_passage(lp, mc);
      const bool target = has_observable_target(c);
      const double tl = target ? left_passage_target(c, z) : kNaN;
      t.columns = {{"p_left"},          {"p_right"},        {"std_error"},
                   {"target_p_left"},   {"target_p_right"}, {"z_score"},
                   {"n_samples", ColumnType::kInteger},     {"n_failed", ColumnType::kInteger},
                   {"warnings", ColumnType::kText}};
      t.rows.push_back({r.estimate, 1.0 - r.estimate, r.std_error,
                        target ? Cell{tl} : Cell{}, target ? Cell{1.0 - tl} : Cell{},
                        target && r.std_error > 0 ? Cell{(r.estimate - tl) / r.std_error} : Cell{},
                        static_cast<std::int64_t>(r.n_samples), static_cast<std::int64_t>(r.n_failed),
                        join(r.warnings)});
      break;
    }
    case Estimator::kGreenRatio: {
      sim::GreenRatioConfig gr;
      gr.driving = driving_of(c);
      gr.z1 = z;
      gr.z2 = cplx(c.mc.z2_re, c.mc.z2_im);
      gr.eps = c.mc.eps;
      gr.angle_n = c.mc.angle_n;
      const sim::GreenRatioResult r = sim::estimate_green_ratio(gr, mc);
      const bool target = has_observable_target(c);
      double g1 = kNaN, g2 = kNaN;
      if (target) {
        g1 = green_target(c, gr.z1);
        g2 = green_target(c, gr.z2);
      }
      // P(Upsilon <= eps) ~ c_* eps^(2-d) G(z).
      const double scale = c_star(p.a) * std::pow(gr.eps, 2.0 - p.d);
      t.columns = {{"ratio"},      {"std_error"},       {"p1"},        {"p2"},
                   {"target_ratio"}, {"z_score"},       {"rel_error"}, {"abs_check_1"},
                   {"abs_check_2"}, {"n_samples", ColumnType::kInteger},
                   {"n_failed", ColumnType::kInteger}, {"warnings", ColumnType::kText}};
      const double tr = g1 / g2;
      const double est = r.ratio.estimate;
      t.rows.push_back({est, r.ratio.std_error, r.p1, r.p2, target ? Cell{tr} : Cell{},
                        target && r.ratio.std_error > 0 ? Cell{(est - tr) / r.ratio.std_error} : Cell{},
                        target ? Cell{std::abs(est - tr) / tr} : Cell{},
                        target ? Cell{r.p1 / (scale * g1)} : Cell{},
                        target ? Cell{r.p2 / (scale * g2)} : Cell{},
                        static_cast<std::int64_t>(r.ratio.n_samples),
                        static_cast<std::int64_t>(r.ratio.n_failed), join(r.ratio.warnings)});
      break;
    }
    case Estimator::kMartingale: {
      sim::MartingaleConfig mg;
      mg.kind = c.mc.observable == "green" ? sim::MartingaleKind::kGreen : sim::MartingaleKind::kSchramm;
      mg.driving = sim::DrivingSpec::slekr(p, c.xi1, c.xi2);
      mg.z = z;
      mg.checkpoints = c.mc.checkpoints;
      mg.eps_stop = c.mc.eps;
      mg.tol = c.tol;
      const sim::MartingaleResult r = sim::martingale_drift_test(mg, mc);
      t.columns = {{"t"}, {"mean"}, {"std_error"}, {"z_vs_initial"},
                   {"n_samples", ColumnType::kInteger}, {"n_failed", ColumnType::kInteger}};
      t.rows.push_back({0.0, r.initial, 0.0, 0.0, std::int64_t{0}, std::int64_t{0}});
      for (std::size_t i = 0; i < r.means.size(); ++i) {
        const sim::EstimatorResult& m = r.means[i];
        t.rows.push_back({mg.checkpoints[i], m.estimate, m.std_error,
                          m.std_error > 0 ? Cell{(m.estimate - r.initial) / m.std_error} : Cell{},
                          static_cast<std::int64_t>(m.n_samples), static_cast<std::int64_t>(m.n_failed)});
      }
      t.add_meta("flatness", real_text(r.flatness));
      t.add_meta("discarded", std::to_string(r.discarded));
      break;
    }
    case Estimator::kRadialBessel: {
      sim::RadialBesselConfig rb;
      rb.params = p;
      rb.theta0 = c.mc.theta0;
      rb.T = c.mc.horizon;
      rb.dt = c.mc.dt;
      rb.bins = c.mc.bins;
      const sim::RadialBesselResult r = sim::radial_bessel_stationary(rb, mc);
      const double cs = c_star(p.a);
      t.columns = {{"bin_lo"}, {"bin_hi"}, {"density"}, {"psi_mid"}};
      for (std::size_t i = 0; i < r.density.size(); ++i) {
        const double mid = 0.5 * (r.bin_edges[i] + r.bin_edges[i + 1]);
        t.rows.push_back({r.bin_edges[i], r.bin_edges[i + 1], r.density[i],
                          0.5 * cs * std::pow(std::sin(mid), 4.0 * p.a)});
      }
      t.add_meta("ks_distance", real_text(r.ks_distance));
      t.add_meta("mean_theta", real_text(r.mean.estimate));
      t.add_meta("reflections", std::to_string(r.reflections));
      if (!r.warnings.empty()) t.add_meta("warnings", join(r.warnings));
      break;
    }
  }
  return t;
}

std::string resolve_output_path(const std::string& out) {
  namespace fs = std::filesystem;
  const fs::path p(out);
  if (p.is_absolute()) return out;
  if (const char* dir = std::getenv("SLECFT_OUTPUT_DIR"); dir && *dir) return (fs::path(dir) / p).string();
  return out;
}

}  // namespace

ResultTable run_tabulate(const JobConfig& cfg) { return tabulate_table(cfg); }
ResultTable run_verify(const JobConfig& cfg) { return verify_table(cfg); }
ResultTable run_simulate(const JobConfig& cfg) { return simulate_table(cfg); }

JobOutcome run_job(const JobConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  JobOutcome out;
  ResultTable body;
  switch (cfg.command) {
    case Command::kTabulate: body = run_tabulate(cfg); break;
    case Command::kVerify: body = run_verify(cfg); break;
    case Command::kSimulate: body = run_simulate(cfg); break;
  }
  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  ResultTable& t = out.table;
  t.add_meta("slecft_version", SLECFT_VERSION);
  t.add_meta("command", to_string(cfg.command));
  switch (cfg.command) {
    case Command::kTabulate: t.add_meta("observable", to_string(cfg.observable)); break;
    case Command::kVerify: t.add_meta("suite", to_string(cfg.suite)); break;
    case Command::kSimulate: t.add_meta("estimator", to_string(cfg.mc.estimator)); break;
  }
  t.add_meta("kappa", real_text(cfg.kappa));
  if (cfg.command == Command::kSimulate) t.add_meta("seed", std::to_string(*cfg.mc.seed));
  if (cfg.command == Command::kVerify && cfg.suite == Suite::kPde)
    t.add_meta("seed", std::to_string(cfg.mc.seed.value_or(0)));
  t.add_meta("config_hash", config_hash(cfg));
  t.add_meta("config", canonical_string(cfg));
  for (auto& kv : body.metadata) t.metadata.push_back(std::move(kv));
  t.columns = std::move(body.columns);
  t.rows = std::move(body.rows);
  t.n_failures = body.n_failures;

  if (t.n_failures == 0) {
    out.exit_code = kExitOk;
    t.add_meta("status", "ok");
  } else if (cfg.command == Command::kVerify) {
    bool errored = false;
    const std::size_t err = t.column("error");
    for (const auto& row : t.rows) errored |= !std::get<std::string>(row[err]).empty();
    out.exit_code = errored ? kExitNumeric : kExitAcceptance;
    t.add_meta("status", std::to_string(t.n_failures) + " checks failed");
  } else {
    out.exit_code = kExitNumeric;
    t.add_meta("status", std::to_string(t.n_failures) + " cells failed");
  }
  if (cfg.timing) t.add_meta("wall_time_s", real_text(out.wall_seconds));
  return out;
}

void write_table(const ResultTable& t, Format format, std::ostream& out) {
  if (format == Format::kCsv) {
    write_csv(t, out);
  } else {
    out << table_json(t).dump(2) << '\n';
  }
}

std::string write_output(const ResultTable& t, const JobConfig& cfg) {
  if (cfg.out.empty() || cfg.out == "-") {
    write_table(t, cfg.format, std::cout);
    std::cout.flush();
    return "-";
  }
  const std::string path = resolve_output_path(cfg.out);
  // Write to a sibling temporary first so a failed run never leaves a partial file.
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    write_table(t, cfg.format, f);
    if (!f) throw std::runtime_error("failed writing output file '" + path + "'");
  }
  std::filesystem::rename(tmp, path);
  return path;
}

}  // namespace slecft::cli
