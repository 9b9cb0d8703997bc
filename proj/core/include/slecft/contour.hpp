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

#include <functional>
#include <span>
#include <vector>

#include "slecft/complex_power.hpp"
#include "slecft/params.hpp"
#include "slecft/quadrature.hpp"

namespace slecft {

/// Piecewise path made of straight segments and circular arcs, connected
/// end-to-start by construction.
class ContourPath {
 public:
  struct Segment {
    enum class Kind { kLine, kArc } kind;
    cplx from;
    cplx to;
    // Arc data (unused for lines).
    cplx center{0.0, 0.0};
    double radius = 0.0;
    double theta0 = 0.0;
    double sweep = 0.0;

    cplx point(double t) const;
    cplx derivative(double t) const;
    double length() const;
  };

  explicit ContourPath(cplx start) : start_(start), end_(start) {}

  ContourPath& line_to(cplx q);
  /// Arc about `center` through `sweep` radians (positive = counterclockwise),
  /// starting at the current end point.
  ContourPath& arc_about(cplx center, double sweep);
  /// Leave along a straight spoke, go once around `center` at `radius`, and
  /// come back along the same spoke. `turns` = +1 or -1.
  ContourPath& loop_around(cplx center, double radius, int turns);

  /// Pochhammer contour (p1+, p2+, p1-, p2-) based at `base`.
  static ContourPath pochhammer(cplx base, cplx p1, double r1, cplx p2, double r2);

  ContourPath reversed() const;

  cplx start() const { return start_; }
  cplx end() const { return end_; }
  const std::vector<Segment>& segments() const { return segments_; }

 private:
  cplx start_;
  cplx end_;
  std::vector<Segment> segments_;
};

/// One multivalued factor (orientation * (u - root))^exponent.
struct PowerFactor {
  cplx root;
  double exponent;
  int orientation = 1;  // +1: (u - root), -1: (root - u)
};

/// Final continuous arguments of every factor; a closed path that returns
/// each factor to its starting branch has net_phase == 1 for all factors.
struct BranchState {
  std::vector<double> initial_arg;
  std::vector<double> final_arg;
  std::vector<cplx> net_phase(std::span<const PowerFactor> factors) const;
};

struct ContourResult : QuadResult {
  BranchState branch;
};

/// Optional analytic multiplier g(u, logs): logs[k] is the continued
/// logarithm of factor k at u, so log-weighted integrands share the branch
/// bookkeeping.
using ContourMultiplier = std::function<cplx(cplx, std::span<const cplx>)>;

struct ContourOptions {
  Tolerance tol{};
  /// Minimum allowed distance from the path to a root, relative to the
  /// path's bounding size. Roots exactly at the path's start or end are
  /// allowed.
  double clearance = 1e-9;
  ContourMultiplier multiplier{};
};

/// Integral of prod_k (orientation_k (u - root_k))^{e_k} along `path`. Each
/// factor starts on its principal branch at the path start (or, if its root
/// is the start point, on the branch given by the direction of travel) and is
/// continued analytically along the path.
ContourResult integrate_contour(std::span<const PowerFactor> factors,
                                const ContourPath& path, const ContourOptions& opts = {});

}  // namespace slecft
