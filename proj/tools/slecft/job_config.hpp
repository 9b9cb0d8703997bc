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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "slecft/params.hpp"

namespace slecft::cli {

/// Bad input from the user: unknown keys, out-of-range values, missing seed.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { kTabulate, kVerify, kSimulate };

enum class Observable {
  kSchramm,
  kFusedSchramm,
  kGreen,
  kH,
  kFusedH,
  kBichordalGreen,
  kChordalGreen,
};

enum class Suite { kClosedForms, kPde, kBoundary, kFusion, kContinuation };

enum class Estimator { kLeftPassage, kGreenRatio, kMartingale, kRadialBessel };

enum class Driving { kChordal, kSlekr };

enum class Format { kCsv, kJson };

/// n equally spaced values from lo to hi inclusive (just lo when n == 1).
struct Range {
  double lo = 0.0;
  double hi = 0.0;
  int n = 1;

  std::vector<double> values() const;
};

/// Evaluation grid. Which axes are used follows from the observable:
/// x and y for functions of z, theta1 and theta2 for h (cells with
/// theta1 >= theta2 are skipped), theta for fused-h.
struct GridSpec {
  Range x{-2.0, 2.0, 9};
  Range y{0.25, 2.0, 8};
  Range theta1{0.1, 3.0, 10};
  Range theta2{0.1, 3.0, 10};
  Range theta{0.1, 3.0, 30};
};

struct MCSpec {
  Estimator estimator = Estimator::kLeftPassage;
  Driving driving = Driving::kChordal;
  std::uint64_t n_samples = 10000;
  std::optional<std::uint64_t> seed;
  double z_re = 0.5, z_im = 0.8660254037844386;
  double z2_re = 0.0, z2_im = 2.0;
  double eps = 0.05;
  int angle_n = 100;
  /// Martingale estimator: "schramm" or "green".
  std::string observable = "schramm";
  std::vector<double> checkpoints{0.1, 0.3, 1.0};
  /// Radial Bessel estimator.
  double theta0 = 1.5707963267948966;
  double horizon = 20.0;
  double dt = 1e-2;
  int bins = 50;
};

/// A parsed job. Every field has a default; the config file and the flags
/// only override. Field paths in the file match the member names.
struct JobConfig {
  Command command = Command::kTabulate;
  Observable observable = Observable::kSchramm;
  Suite suite = Suite::kClosedForms;
  double kappa = 4.0;
  double rho = 2.0;
  double xi1 = 0.0;
  double xi2 = 1.0;
  GridSpec grid;
  Tolerance tol;
  MCSpec mc;
  int threads = 1;
  std::string out;
  Format format = Format::kCsv;
  /// Write wall time into the output metadata (breaks byte-identical reruns).
  bool timing = false;

  SLEParams params() const;
};

/// Parses a JSON object into a config on top of `base`. Unknown keys and
/// wrongly typed values are ValidationErrors.
JobConfig parse_config(const nlohmann::json& j, JobConfig base = {});
JobConfig load_config(const std::string& path, JobConfig base = {});

/// Checks ranges and the fields required by the command. Throws ValidationError.
void validate(const JobConfig& cfg);

/// Full serialization; parse_config(to_json(c)) == c.
nlohmann::json to_json(const JobConfig& cfg);

/// Only the fields that affect the numbers of this command, sorted, compact.
std::string canonical_string(const JobConfig& cfg);

/// 64-bit FNV-1a of canonical_string, as 16 hex digits.
std::string config_hash(const JobConfig& cfg);

std::string to_string(Command c);
std::string to_string(Observable o);
std::string to_string(Suite s);
std::string to_string(Estimator e);
std::string to_string(Driving d);
std::string to_string(Format f);

Command parse_command(const std::string& s);
Observable parse_observable(const std::string& s);
Suite parse_suite(const std::string& s);
Estimator parse_estimator(const std::string& s);
Driving parse_driving(const std::string& s);
Format parse_format(const std::string& s);

}  // namespace slecft::cli
