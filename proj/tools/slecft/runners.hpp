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

#pragma once

#include <iosfwd>
#include <string>

#include "job_config.hpp"
#include "result_table.hpp"

namespace slecft::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitNumeric = 2,
  kExitAcceptance = 3,
};

/// Evaluates the observable on the grid. Failed cells keep empty values and
/// a message in the `error` column; n_failures counts them.
ResultTable run_tabulate(const JobConfig& cfg);

/// Runs one verification suite: one row per check with measured value,
/// bound and pass flag. n_failures counts failed checks.
ResultTable run_verify(const JobConfig& cfg);

/// Runs one Monte Carlo estimator. Estimator errors propagate.
ResultTable run_simulate(const JobConfig& cfg);

struct JobOutcome {
  ResultTable table;
  int exit_code = kExitOk;
  double wall_seconds = 0.0;
};

/// Validates, runs the command and fills the metadata block. Throws
/// ValidationError before any work is done when the config is invalid.
JobOutcome run_job(const JobConfig& cfg);

void write_table(const ResultTable& t, Format format, std::ostream& out);

/// Writes to cfg.out (relative paths resolved against SLECFT_OUTPUT_DIR when
/// set) or to stdout when cfg.out is empty. Returns the path written.
std::string write_output(const ResultTable& t, const JobConfig& cfg);

}  // namespace slecft::cli
