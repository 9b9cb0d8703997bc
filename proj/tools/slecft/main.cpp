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

// slecft: tabulate observables, run verification suites and Monte Carlo
// estimators. See docs/cli.md for the config format and CSV schemas.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "job_config.hpp"
#include "runners.hpp"
#include "slecft/errors.hpp"

namespace {

using slecft::cli::JobConfig;
using slecft::cli::ValidationError;

struct Flags {
  std::string config;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::optional<double> tol;
  std::optional<std::string> observable;
  std::optional<std::string> suite;
  std::optional<std::string> estimator;
  std::vector<std::string> sets;
  bool timing = false;
};

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config, "JSON job file");
  app->add_option("--out", f.out, "Output path ('-' for stdout)");
  app->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--seed", f.seed, "Random seed (required for simulate)");
  app->add_option("--threads", f.threads, "Worker threads")->check(CLI::PositiveNumber);
  app->add_option("--tol", f.tol, "Relative quadrature tolerance")->check(CLI::PositiveNumber);
  app->add_option("--set", f.sets, "Override a config field, e.g. --set mc.n_samples=1000");
  app->add_flag("--timing", f.timing, "Record wall time in the output metadata");
}

// Sets j[a][b]... = value for a dotted path "a.b...".
void set_path(nlohmann::json& j, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw ValidationError("--set expects path=value, got '" + assignment + "'");
  const std::string path = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  nlohmann::json value;
  try {
    value = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    value = text;
  }
  nlohmann::json* node = &j;
  std::size_t start = 0;
  while (true) {
    const auto dot = path.find('.', start);
    const std::string key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (key.empty()) throw ValidationError("--set: malformed path '" + path + "'");
    if (dot == std::string::npos) {
      (*node)[key] = value;
      break;
    }
    node = &(*node)[key];
    start = dot + 1;
  }
}

JobConfig build_config(slecft::cli::Command command, const Flags& f) {
  JobConfig base;
  if (const char* env = std::getenv("SLECFT_THREADS"); env && *env) {
    try {
      base.threads = std::stoi(env);
    } catch (const std::exception&) {
      throw ValidationError(std::string("SLECFT_THREADS is not an integer: ") + env);
    }
  }
  JobConfig cfg = f.config.empty() ? base : slecft::cli::load_config(f.config, base);

  nlohmann::json over = nlohmann::json::object();
  over["command"] = slecft::cli::to_string(command);
  for (const std::string& s : f.sets) set_path(over, s);
  if (f.out) over["out"] = *f.out;
  if (f.format) over["format"] = *f.format;
  if (f.seed) over["mc"]["seed"] = *f.seed;
  if (f.threads) over["threads"] = *f.threads;
  if (f.tol) over["tol"]["rel"] = *f.tol;
  if (f.observable) over["observable"] = *f.observable;
  if (f.suite) over["suite"] = *f.suite;
  if (f.estimator) over["mc"]["estimator"] = *f.estimator;
  if (f.timing) over["timing"] = true;
  return slecft::cli::parse_config(over, cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slecft: SLE observables from screening integrals, with Monte Carlo checks"};
  app.require_subcommand(1);
  Flags flags;

  CLI::App* tab = app.add_subcommand("tabulate", "Evaluate an observable on a grid");
  add_common(tab, flags);
  tab->add_option("--observable", flags.observable,
                  "schramm|fused-schramm|green|h|fused-h|bichordal-green|chordal-green");
  CLI::App* ver = app.add_subcommand("verify", "Run a verification suite");
  add_common(ver, flags);
  ver->add_option("--suite", flags.suite, "closed-forms|pde|boundary|fusion|continuation");
  CLI::App* simc = app.add_subcommand("simulate", "Run a Monte Carlo estimator");
  add_common(simc, flags);
  simc->add_option("--estimator", flags.estimator, "left-passage|green-ratio|martingale|radial-bessel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : slecft::cli::kExitValidation;
  }

  using slecft::cli::Command;
  const Command command = tab->parsed() ? Command::kTabulate : ver->parsed() ? Command::kVerify : Command::kSimulate;

  try {
    const JobConfig cfg = build_config(command, flags);
    const slecft::cli::JobOutcome outcome = slecft::cli::run_job(cfg);
    slecft::cli::write_output(outcome.table, cfg);
    std::cerr << "slecft: " << slecft::cli::to_string(command) << " finished in " << outcome.wall_seconds
              << " s, " << outcome.table.n_failures << " failures\n";
    return outcome.exit_code;
  } catch (const ValidationError& e) {
    std::cerr << "slecft: invalid input: " << e.what() << '\n';
    return slecft::cli::kExitValidation;
  } catch (const slecft::DomainError& e) {
    std::cerr << "slecft: invalid input: " << e.what() << '\n';
    return slecft::cli::kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "slecft: numeric failure: " << e.what() << '\n';
    return slecft::cli::kExitNumeric;
  }
}
