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

#include "job_config.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <utility>

#include "slecft/errors.hpp"

namespace slecft::cli {
namespace {

using nlohmann::json;

constexpr double kPiValue = 3.141592653589793;

template <typename E, std::size_t N>
std::string name_of(E value, const std::array<std::pair<E, const char*>, N>& table) {
  for (const auto& [e, s] : table)
    if (e == value) return s;
  return "?";
}

template <typename E, std::size_t N>
E value_of(const std::string& s, const std::array<std::pair<E, const char*>, N>& table,
           const char* what) {
  for (const auto& [e, name] : table)
    if (s == name) return e;
  std::string msg = std::string("unknown ") + what + " '" + s + "' (expected one of:";
  for (const auto& [e, name] : table) msg += std::string(" ") + name;
  throw ValidationError(msg + ")");
}

constexpr std::array<std::pair<Command, const char*>, 3> kCommands{{
    {Command::kTabulate, "tabulate"},
    {Command::kVerify, "verify"},
    {Command::kSimulate, "simulate"},
}};
constexpr std::array<std::pair<Observable, const char*>, 7> kObservables{{
    {Observable::kSchramm, "schramm"},
    {Observable::kFusedSchramm, "fused-schramm"},
    {Observable::kGreen, "green"},
    {Observable::kH, "h"},
    {Observable::kFusedH, "fused-h"},
    {Observable::kBichordalGreen, "bichordal-green"},
    {Observable::kChordalGreen, "chordal-green"},
}};
constexpr std::array<std::pair<Suite, const char*>, 5> kSuites{{
    {Suite::kClosedForms, "closed-forms"},
    {Suite::kPde, "pde"},
    {Suite::kBoundary, "boundary"},
    {Suite::kFusion, "fusion"},
    {Suite::kContinuation, "continuation"},
}};
constexpr std::array<std::pair<Estimator, const char*>, 4> kEstimators{{
    {Estimator::kLeftPassage, "left-passage"},
    {Estimator::kGreenRatio, "green-ratio"},
    {Estimator::kMartingale, "martingale"},
    {Estimator::kRadialBessel, "radial-bessel"},
}};
constexpr std::array<std::pair<Driving, const char*>, 2> kDrivings{{
    {Driving::kChordal, "chordal"},
    {Driving::kSlekr, "slekr"},
}};
constexpr std::array<std::pair<Format, const char*>, 2> kFormats{{
    {Format::kCsv, "csv"},
    {Format::kJson, "json"},
}};

// Reads the members of one JSON object, rejecting unknown keys.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ValidationError(where("") + " must be an object");
  }

  // Call after reading every member.
  void finish() const {
    for (const auto& item : j_.items())
      if (!seen_.count(item.key())) throw ValidationError("unknown config key '" + where(item.key()) + "'");
  }

  const json* find(const std::string& key) {
    seen_.insert(key);
    const auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  void number(const std::string& key, double& out) {
    if (const json* v = find(key)) {
      if (!v->is_number()) throw ValidationError(where(key) + " must be a number");
      out = v->get<double>();
    }
  }

  void integer(const std::string& key, int& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_integer()) throw ValidationError(where(key) + " must be an integer");
      const auto x = v->get<std::int64_t>();
      if (x < -2147483647 || x > 2147483647) throw ValidationError(where(key) + " out of range");
      out = static_cast<int>(x);
    }
  }

  void u64(const std::string& key, std::uint64_t& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_unsigned())
        throw ValidationError(where(key) + " must be a non-negative integer");
      out = v->get<std::uint64_t>();
    }
  }

  void boolean(const std::string& key, bool& out) {
    if (const json* v = find(key)) {
      if (!v->is_boolean()) throw ValidationError(where(key) + " must be true or false");
      out = v->get<bool>();
    }
  }

  void string(const std::string& key, std::string& out) {
    if (const json* v = find(key)) {
      if (!v->is_string()) throw ValidationError(where(key) + " must be a string");
      out = v->get<std::string>();
    }
  }

  template <typename E>
  void enumeration(const std::string& key, E& out, E (*parse)(const std::string&)) {
    std::string s;
    string(key, s);
    if (!s.empty()) out = parse(s);
  }

  std::string where(const std::string& key) const {
    if (key.empty()) return path_.empty() ? "config" : path_;
    return path_.empty() ? key : path_ + "." + key;
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

void read_range(ObjectReader& parent, const std::string& key, Range& r) {
  if (const json* v = parent.find(key)) {
    ObjectReader o(*v, parent.where(key));
    o.number("lo", r.lo);
    o.number("hi", r.hi);
    o.integer("n", r.n);
    o.finish();
  }
}

json range_json(const Range& r) { return {{"lo", r.lo}, {"hi", r.hi}, {"n", r.n}}; }

void check(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

void check_range(const Range& r, const std::string& name) {
  check(std::isfinite(r.lo) && std::isfinite(r.hi), name + ": bounds must be finite");
  check(r.n >= 1, name + ".n must be at least 1");
  check(r.n <= 1000000, name + ".n must be at most 1000000");
  check(r.lo <= r.hi, name + ": lo must not exceed hi");
}

void check_angle_range(const Range& r, const std::string& name) {
  check_range(r, name);
  check(r.lo > 0.0 && r.hi < kPiValue, name + " must lie inside (0, pi)");
}

bool needs_observable_range(Observable o) { return o != Observable::kChordalGreen; }

bool uses_xy(Observable o) { return o != Observable::kH && o != Observable::kFusedH; }

}  // namespace

std::vector<double> Range::values() const {
  std::vector<double> v(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return v;
}

SLEParams JobConfig::params() const {
  try {
    return SLEParams::from_kappa(kappa, rho);
  } catch (const slecft::DomainError& e) {
    throw ValidationError(e.what());
  }
}

std::string to_string(Command c) { return name_of(c, kCommands); }
std::string to_string(Observable o) { return name_of(o, kObservables); }
std::string to_string(Suite s) { return name_of(s, kSuites); }
std::string to_string(Estimator e) { return name_of(e, kEstimators); }
std::string to_string(Driving d) { return name_of(d, kDrivings); }
std::string to_string(Format f) { return name_of(f, kFormats); }

Command parse_command(const std::string& s) { return value_of(s, kCommands, "command"); }
Observable parse_observable(const std::string& s) { return value_of(s, kObservables, "observable"); }
Suite parse_suite(const std::string& s) { return value_of(s, kSuites, "suite"); }
Estimator parse_estimator(const std::string& s) { return value_of(s, kEstimators, "estimator"); }
Driving parse_driving(const std::string& s) { return value_of(s, kDrivings, "driving"); }
Format parse_format(const std::string& s) { return value_of(s, kFormats, "format"); }

JobConfig parse_config(const json& j, JobConfig c) {
  ObjectReader r(j, "");
  r.enumeration("command", c.command, parse_command);
  r.enumeration("observable", c.observable, parse_observable);
  r.enumeration("suite", c.suite, parse_suite);
  r.number("kappa", c.kappa);
  r.number("rho", c.rho);
  r.number("xi1", c.xi1);
  r.number("xi2", c.xi2);
  if (const json* g = r.find("grid")) {
    ObjectReader gr(*g, "grid");
    read_range(gr, "x", c.grid.x);
    read_range(gr, "y", c.grid.y);
    read_range(gr, "theta1", c.grid.theta1);
    read_range(gr, "theta2", c.grid.theta2);
    read_range(gr, "theta", c.grid.theta);
    gr.finish();
  }
  if (const json* t = r.find("tol")) {
    ObjectReader tr(*t, "tol");
    tr.number("rel", c.tol.rel);
    tr.number("abs", c.tol.abs);
    tr.integer("max_intervals", c.tol.max_intervals);
    tr.finish();
  }
  if (const json* m = r.find("mc")) {
    ObjectReader mr(*m, "mc");
    MCSpec& s = c.mc;
    mr.enumeration("estimator", s.estimator, parse_estimator);
    mr.enumeration("driving", s.driving, parse_driving);
    mr.u64("n_samples", s.n_samples);
    if (const json* seed = mr.find("seed")) {
      if (seed->is_null()) {
        s.seed.reset();
      } else {
        if (!seed->is_number_unsigned())
          throw ValidationError("mc.seed must be a non-negative integer");
        s.seed = seed->get<std::uint64_t>();
      }
    }
    mr.number("z_re", s.z_re);
    mr.number("z_im", s.z_im);
    mr.number("z2_re", s.z2_re);
    mr.number("z2_im", s.z2_im);
    mr.number("eps", s.eps);
    mr.integer("angle_n", s.angle_n);
    mr.string("observable", s.observable);
    if (const json* cp = mr.find("checkpoints")) {
      if (!cp->is_array()) throw ValidationError("mc.checkpoints must be an array of numbers");
      s.checkpoints.clear();
      for (const json& t : *cp) {
        if (!t.is_number()) throw ValidationError("mc.checkpoints must be an array of numbers");
        s.checkpoints.push_back(t.get<double>());
      }
    }
    mr.number("theta0", s.theta0);
    mr.number("horizon", s.horizon);
    mr.number("dt", s.dt);
    mr.integer("bins", s.bins);
    mr.finish();
  }
  r.integer("threads", c.threads);
  r.string("out", c.out);
  r.enumeration("format", c.format, parse_format);
  r.boolean("timing", c.timing);
  r.finish();
  return c;
}

JobConfig load_config(const std::string& path, JobConfig base) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ValidationError("config file '" + path + "': " + e.what());
  }
  return parse_config(j, std::move(base));
}

json to_json(const JobConfig& c) {
  const MCSpec& m = c.mc;
  json mc = {
      {"estimator", to_string(m.estimator)},
      {"driving", to_string(m.driving)},
      {"n_samples", m.n_samples},
      {"seed", m.seed ? json(*m.seed) : json(nullptr)},
      {"z_re", m.z_re},
      {"z_im", m.z_im},
      {"z2_re", m.z2_re},
      {"z2_im", m.z2_im},
      {"eps", m.eps},
      {"angle_n", m.angle_n},
      {"observable", m.observable},
      {"checkpoints", m.checkpoints},
      {"theta0", m.theta0},
      {"horizon", m.horizon},
      {"dt", m.dt},
      {"bins", m.bins},
  };
  return {
      {"command", to_string(c.command)},
      {"observable", to_string(c.observable)},
      {"suite", to_string(c.suite)},
      {"kappa", c.kappa},
      {"rho", c.rho},
      {"xi1", c.xi1},
      {"xi2", c.xi2},
      {"grid",
       {{"x", range_json(c.grid.x)},
        {"y", range_json(c.grid.y)},
        {"theta1", range_json(c.grid.theta1)},
        {"theta2", range_json(c.grid.theta2)},
        {"theta", range_json(c.grid.theta)}}},
      {"tol", {{"rel", c.tol.rel}, {"abs", c.tol.abs}, {"max_intervals", c.tol.max_intervals}}},
      {"mc", mc},
      {"threads", c.threads},
      {"out", c.out},
      {"format", to_string(c.format)},
      {"timing", c.timing},
  };
}

void validate(const JobConfig& c) {
  check(std::isfinite(c.kappa) && c.kappa > 0.0 && c.kappa < 8.0, "kappa must lie in (0, 8)");
  check(std::isfinite(c.rho), "rho must be finite");
  check(std::isfinite(c.xi1) && std::isfinite(c.xi2), "xi1 and xi2 must be finite");
  check(c.tol.rel > 0.0 && c.tol.abs >= 0.0, "tol.rel must be positive and tol.abs non-negative");
  check(c.tol.max_intervals >= 1, "tol.max_intervals must be at least 1");
  check(c.threads >= 1, "threads must be at least 1");

  switch (c.command) {
    case Command::kTabulate: {
      const Observable o = c.observable;
      if (needs_observable_range(o)) check(c.kappa <= 4.0, to_string(o) + " requires kappa <= 4");
      if (uses_xy(o)) {
        check_range(c.grid.x, "grid.x");
        check_range(c.grid.y, "grid.y");
        check(c.grid.y.lo > 0.0, "grid.y must be positive (upper half-plane)");
      } else if (o == Observable::kH) {
        check_angle_range(c.grid.theta1, "grid.theta1");
        check_angle_range(c.grid.theta2, "grid.theta2");
      } else {
        check_angle_range(c.grid.theta, "grid.theta");
      }
      if (o == Observable::kSchramm || o == Observable::kGreen)
        check(c.xi1 < c.xi2, to_string(o) + " requires xi1 < xi2");
      if (o == Observable::kBichordalGreen) check(c.xi1 <= c.xi2, "bichordal-green requires xi1 <= xi2");
      break;
    }
    case Command::kVerify: {
      check(c.kappa <= 4.0, "verify suites require kappa <= 4");
      const double al = 8.0 / c.kappa;
      const bool integer = std::abs(al - std::round(al)) < 1e-9;
      if (c.suite == Suite::kClosedForms)
        check(integer && std::round(al) >= 2.0 && std::round(al) <= 4.0,
              "closed-forms suite requires kappa in {4, 8/3, 2}");
      if (c.suite == Suite::kClosedForms || c.suite == Suite::kContinuation ||
          c.suite == Suite::kBoundary) {
        check_angle_range(c.grid.theta1, "grid.theta1");
        check_angle_range(c.grid.theta2, "grid.theta2");
        check_angle_range(c.grid.theta, "grid.theta");
      }
      if (c.suite == Suite::kFusion || c.suite == Suite::kClosedForms) {
        check_range(c.grid.x, "grid.x");
        check_range(c.grid.y, "grid.y");
        check(c.grid.y.lo > 0.0, "grid.y must be positive (upper half-plane)");
      }
      break;
    }
    case Command::kSimulate: {
      const MCSpec& m = c.mc;
      check(m.seed.has_value(), "simulate requires a seed (--seed or mc.seed)");
      check(m.n_samples >= 1, "mc.n_samples must be at least 1");
      switch (m.estimator) {
        case Estimator::kLeftPassage:
        case Estimator::kGreenRatio:
          check(m.z_im > 0.0 && std::isfinite(m.z_re), "mc.z must lie in the upper half-plane");
          check(m.angle_n >= 2, "mc.angle_n must be at least 2");
          if (m.driving == Driving::kSlekr) {
            check(c.xi1 != c.xi2, "slekr driving requires xi1 != xi2");
            check(c.rho > -2.0, "slekr driving requires rho > -2");
          }
          if (m.estimator == Estimator::kGreenRatio) {
            check(m.z2_im > 0.0 && std::isfinite(m.z2_re), "mc.z2 must lie in the upper half-plane");
            check(m.eps > 0.0, "mc.eps must be positive");
          }
          break;
        case Estimator::kMartingale:
          check(c.kappa <= 4.0, "martingale requires kappa <= 4");
          check(m.driving == Driving::kSlekr && c.rho == 2.0,
                "martingale requires slekr driving with rho = 2");
          check(c.xi1 < c.xi2, "martingale requires xi1 < xi2");
          check(m.z_im > 0.0 && std::isfinite(m.z_re), "mc.z must lie in the upper half-plane");
          check(m.observable == "schramm" || m.observable == "green",
                "mc.observable must be 'schramm' or 'green'");
          check(!m.checkpoints.empty(), "mc.checkpoints must not be empty");
          for (std::size_t i = 0; i < m.checkpoints.size(); ++i)
            check(m.checkpoints[i] > 0.0 && (i == 0 || m.checkpoints[i] > m.checkpoints[i - 1]),
                  "mc.checkpoints must be positive and increasing");
          check(m.eps > 0.0, "mc.eps must be positive");
          break;
        case Estimator::kRadialBessel:
          check(m.theta0 > 0.0 && m.theta0 < kPiValue, "mc.theta0 must lie in (0, pi)");
          check(m.horizon > 0.0 && m.dt > 0.0 && m.dt <= m.horizon,
                "mc.horizon and mc.dt must be positive with dt <= horizon");
          check(m.bins >= 1, "mc.bins must be at least 1");
          break;
      }
      break;
    }
  }
}

std::string canonical_string(const JobConfig& c) {
  const json full = to_json(c);
  json k;
  k["command"] = full["command"];
  k["kappa"] = c.kappa;
  auto copy = [&](const char* key) { k[key] = full[key]; };
  auto grid = [&](std::initializer_list<const char*> axes) {
    for (const char* a : axes) k["grid"][a] = full["grid"][a];
  };
  switch (c.command) {
    case Command::kTabulate: {
      copy("observable");
      copy("tol");
      const Observable o = c.observable;
      if (o == Observable::kH) {
        grid({"theta1", "theta2"});
      } else if (o == Observable::kFusedH) {
        grid({"theta"});
      } else {
        grid({"x", "y"});
        copy("xi1");
        if (o != Observable::kFusedSchramm && o != Observable::kChordalGreen) copy("xi2");
      }
      break;
    }
    case Command::kVerify:
      copy("suite");
      copy("tol");
      switch (c.suite) {
        case Suite::kClosedForms: grid({"x", "y", "theta1", "theta2", "theta"}); break;
        case Suite::kBoundary:
        case Suite::kContinuation: grid({"theta1", "theta2", "theta"}); break;
        case Suite::kFusion: grid({"x", "y"}); break;
        case Suite::kPde: k["seed"] = c.mc.seed.value_or(0); break;
      }
      break;
    case Command::kSimulate: {
      const json& m = full["mc"];
      json& km = k["mc"];
      for (const char* key : {"estimator", "n_samples", "seed"}) km[key] = m[key];
      switch (c.mc.estimator) {
        case Estimator::kLeftPassage:
        case Estimator::kGreenRatio:
          for (const char* key : {"driving", "z_re", "z_im", "angle_n"}) km[key] = m[key];
          if (c.mc.estimator == Estimator::kGreenRatio)
            for (const char* key : {"z2_re", "z2_im", "eps"}) km[key] = m[key];
          copy("xi1");
          if (c.mc.driving == Driving::kSlekr) {
            copy("xi2");
            copy("rho");
          }
          break;
        case Estimator::kMartingale:
          for (const char* key : {"driving", "z_re", "z_im", "observable", "checkpoints"})
            km[key] = m[key];
          if (c.mc.observable == "green") km["eps"] = m["eps"];
          copy("xi1");
          copy("xi2");
          copy("rho");
          copy("tol");
          break;
        case Estimator::kRadialBessel:
          for (const char* key : {"theta0", "horizon", "dt", "bins"}) km[key] = m[key];
          break;
      }
      break;
    }
  }
  return k.dump();
}

std::string config_hash(const JobConfig& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical_string(c)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace slecft::cli
