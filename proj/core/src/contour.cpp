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

#include "slecft/contour.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "slecft/errors.hpp"

namespace slecft {

// ---------------------------------------------------------------------------
// Geometry

cplx ContourPath::Segment::point(double t) const {
  if (kind == Kind::kLine) return from + (to - from) * t;
  return center + std::polar(radius, theta0 + sweep * t);
}

cplx ContourPath::Segment::derivative(double t) const {
  if (kind == Kind::kLine) return to - from;
  return cplx(0.0, radius * sweep) * std::polar(1.0, theta0 + sweep * t);
}

double ContourPath::Segment::length() const {
  if (kind == Kind::kLine) return std::abs(to - from);
  return radius * std::abs(sweep);
}

ContourPath& ContourPath::line_to(cplx q) {
  Segment s{Segment::Kind::kLine, end_, q};
  segments_.push_back(s);
  end_ = q;
  return *this;
}

ContourPath& ContourPath::arc_about(cplx center, double sweep) {
  Segment s{Segment::Kind::kArc, end_, end_};
  s.center = center;
  s.radius = std::abs(end_ - center);
  if (s.radius == 0.0) throw GeometryError("arc with zero radius");
  s.theta0 = std::arg(end_ - center);
  s.sweep = sweep;
  const double turns = sweep / (2.0 * kPi);
  if (std::abs(turns - std::round(turns)) > 1e-12) {
    s.to = center + std::polar(s.radius, s.theta0 + sweep);
  }
  segments_.push_back(s);
  end_ = s.to;
  return *this;
}

ContourPath& ContourPath::loop_around(cplx center, double radius, int turns) {
  const cplx base = end_;
  const cplx offset = base - center;
  const double dist = std::abs(offset);
  if (!(radius > 0.0 && radius < dist))
    throw GeometryError("loop radius must be positive and exclude the base point");
  const cplx touch = center + offset * (radius / dist);
  line_to(touch);
  arc_about(center, 2.0 * kPi * turns);
  line_to(base);
  return *this;
}

ContourPath ContourPath::pochhammer(cplx base, cplx p1, double r1, cplx p2, double r2) {
  ContourPath path(base);
  path.loop_around(p1, r1, +1);
  path.loop_around(p2, r2, +1);
  path.loop_around(p1, r1, -1);
  path.loop_around(p2, r2, -1);
  return path;
}

ContourPath ContourPath::reversed() const {
  ContourPath out(end_);
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
    Segment s = *it;
    std::swap(s.from, s.to);
    if (s.kind == Segment::Kind::kArc) {
      s.theta0 = it->theta0 + it->sweep;
      s.sweep = -it->sweep;
    }
    out.segments_.push_back(s);
  }
  out.end_ = start_;
  return out;
}

std::vector<cplx> BranchState::net_phase(std::span<const PowerFactor> factors) const {
  std::vector<cplx> out;
  for (std::size_t k = 0; k < factors.size(); ++k)
    out.push_back(std::polar(1.0, factors[k].exponent * (final_arg[k] - initial_arg[k])));
  return out;
}

// ---------------------------------------------------------------------------
// Integration

namespace {

using Segment = ContourPath::Segment;

struct Piece {
  const Segment* seg;
  double t0, t1;
  cplx start, end;
  bool endpoint_singular = false;
  std::vector<double> arg_start;  // continued argument of each factor at start
  std::vector<bool> root_at_start;
};

double distance_to_piece(cplx r, const Segment& s, double t0, double t1) {
  const cplx a = s.point(t0);
  const cplx b = s.point(t1);
  if (s.kind == Segment::Kind::kLine) {
    const cplx ab = b - a;
    const double len2 = std::norm(ab);
    double t = len2 > 0.0 ? ((r - a) * std::conj(ab)).real() / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(r - (a + ab * t));
  }
  const double thA = s.theta0 + s.sweep * t0;
  const double span = std::abs(s.sweep * (t1 - t0));
  const double dir = s.sweep >= 0.0 ? 1.0 : -1.0;
  const cplx rc = r - s.center;
  double best = std::min(std::abs(r - a), std::abs(r - b));
  if (std::abs(rc) > 0.0) {
    double d = std::fmod(dir * (std::arg(rc) - thA), 2.0 * kPi);
    if (d < 0.0) d += 2.0 * kPi;
    if (d <= span) best = std::min(best, std::abs(std::abs(rc) - s.radius));
  } else {
    best = s.radius;
  }
  return best;
}

}  // namespace

ContourResult integrate_contour(std::span<const PowerFactor> factors,
                                const ContourPath& path, const ContourOptions& opts) {
  const auto& segs = path.segments();
  if (segs.empty()) throw GeometryError("integrate_contour: empty path");
  const std::size_t nf = factors.size();

  // Bounding size, for the relative clearance.
  double scale = 0.0;
  for (const auto& s : segs) {
    scale = std::max({scale, std::abs(s.from), std::abs(s.to), s.length()});
  }
  for (const auto& f : factors) scale = std::max(scale, std::abs(f.root));
  const double clearance = opts.clearance * std::max(scale, 1e-300);

  const cplx path_start = path.start();
  const cplx path_end = path.end();
  auto at_path_start = [&](const PowerFactor& f) {
    return std::abs(f.root - path_start) <= clearance;
  };
  auto at_path_end = [&](const PowerFactor& f) {
    return std::abs(f.root - path_end) <= clearance;
  };

  // Split segments into pieces whose length is at most half the distance to
  // every root they do not touch; along such a piece the argument of each
  // factor moves by less than 2 atan(1/4) and Arg of the ratio
  // (u - r)/(start - r) is continuous.
  std::vector<Piece> pieces;
  for (std::size_t si = 0; si < segs.size(); ++si) {
    const Segment& s = segs[si];
    const double len = s.length();
    if (len == 0.0) continue;
    std::vector<std::pair<double, double>> stack{{0.0, 1.0}};
    std::vector<std::pair<double, double>> accepted;
    while (!stack.empty()) {
      auto [t0, t1] = stack.back();
      stack.pop_back();
      const double plen = len * (t1 - t0);
      bool split = false;
      for (const auto& f : factors) {
        const bool first = si == 0 && t0 == 0.0 && at_path_start(f);
        const bool last = si + 1 == segs.size() && t1 == 1.0 && at_path_end(f);
        if (first || last) {
          if (s.kind != Segment::Kind::kLine)
            throw GeometryError("integrate_contour: root at an arc endpoint");
          continue;
        }
        const double dist = distance_to_piece(f.root, s, t0, t1);
        if (dist <= clearance)
          throw GeometryError("integrate_contour: path passes through a root");
        if (plen > 0.5 * dist) {
          split = true;
          break;
        }
      }
      if (split) {
        if (t1 - t0 < 1e-13) throw GeometryError("integrate_contour: cannot resolve path");
        const double tm = 0.5 * (t0 + t1);
        stack.push_back({tm, t1});
        stack.push_back({t0, tm});
      } else {
        accepted.push_back({t0, t1});
      }
    }
    for (auto [t0, t1] : accepted) {
      Piece p{&s, t0, t1, s.point(t0), s.point(t1), false, {}, {}};
      if (t0 == 0.0) p.start = s.from;
      if (t1 == 1.0) p.end = s.to;
      pieces.push_back(std::move(p));
    }
  }
  if (pieces.empty()) throw GeometryError("integrate_contour: degenerate path");

  // Continue the factor arguments from piece to piece.
  std::vector<double> arg(nf);
  BranchState branch;
  for (std::size_t k = 0; k < nf; ++k) {
    const auto& f = factors[k];
    const double o = f.orientation >= 0 ? 1.0 : -1.0;
    if (at_path_start(f)) {
      arg[k] = principal_arg(o * segs.front().derivative(0.0));
    } else {
      arg[k] = principal_arg(o * (path_start - f.root));
    }
  }
  branch.initial_arg = arg;
  for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
    Piece& p = pieces[pi];
    p.arg_start = arg;
    p.root_at_start.assign(nf, false);
    for (std::size_t k = 0; k < nf; ++k) {
      const auto& f = factors[k];
      if (pi == 0 && at_path_start(f)) {
        p.root_at_start[k] = true;
        if (std::abs(f.exponent - std::round(f.exponent)) > 0.0) p.endpoint_singular = true;
        continue;
      }
      if (pi + 1 == pieces.size() && at_path_end(f)) {
        if (std::abs(f.exponent - std::round(f.exponent)) > 0.0) p.endpoint_singular = true;
        continue;  // argument is constant up to the end point
      }
      arg[k] += principal_arg((p.end - f.root) / (p.start - f.root));
    }
  }
  branch.final_arg = arg;

  std::vector<cplx> logs(nf);
  auto integrand_at = [&](const Piece& p, cplx u) -> cplx {
    cplx sum(0.0, 0.0);
    for (std::size_t k = 0; k < nf; ++k) {
      const auto& f = factors[k];
      const double mod = std::log(std::abs(u - f.root));
      double a = p.arg_start[k];
      if (!p.root_at_start[k]) a += principal_arg((u - f.root) / (p.start - f.root));
      logs[k] = cplx(mod, a);
      sum += f.exponent * logs[k];
    }
    cplx v = std::exp(sum);
    if (opts.multiplier) v *= opts.multiplier(u, std::span<const cplx>(logs));
    return v;
  };

  ContourResult result;
  std::vector<std::size_t> regular;
  for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
    const Piece& p = pieces[pi];
    if (!p.endpoint_singular) {
      regular.push_back(pi);
      continue;
    }
    auto f = [&](cplx u) { return integrand_at(p, u); };
    const QuadResult q = integrate_segment(f, p.start, p.end, opts.tol);
    result.value += q.value;
    result.abs_error_estimate += q.abs_error_estimate;
    result.evaluations += q.evaluations;
  }
  if (!regular.empty()) {
    auto panel = [&](std::size_t k, double t) -> cplx {
      const Piece& p = pieces[regular[k]];
      const double ts = p.t0 + (p.t1 - p.t0) * t;
      const cplx u = p.seg->point(ts);
      return integrand_at(p, u) * p.seg->derivative(ts) * (p.t1 - p.t0);
    };
    const QuadResult q = integrate_panels(panel, regular.size(), opts.tol);
    result.value += q.value;
    result.abs_error_estimate += q.abs_error_estimate;
    result.evaluations += q.evaluations;
  }
  result.branch = std::move(branch);
  return result;
}

}  // namespace slecft
