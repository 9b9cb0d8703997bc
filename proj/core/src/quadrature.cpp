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

#include "slecft/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "slecft/errors.hpp"

namespace slecft {
namespace {

// Gauss-Kronrod 10/21 nodes on [-1, 1] (QUADPACK qk21 values).
constexpr std::array<double, 11> kXgk = {
    9.95657163025808080735527280689003e-01, 9.73906528517171720077964012084452e-01,
    9.30157491355708226001207180059508e-01, 8.65063366688984510732096688423493e-01,
    7.80817726586416897063717578345042e-01, 6.79409568299024406234327365114874e-01,
    5.62757134668604683339000099272694e-01, 4.33395394129247190799265943165784e-01,
    2.94392862701460198131126603103866e-01, 1.48874338981631210884826001129720e-01,
    0.0};
constexpr std::array<double, 11> kWgk = {
    1.16946388673718742780643960621920e-02, 3.25581623079647274788189724593898e-02,
    5.47558965743519960313813002445801e-02, 7.50396748109199527670431409161900e-02,
    9.31254545836976055350654650833663e-02, 1.09387158802297641899210590325805e-01,
    1.23491976262065851077208545534710e-01, 1.34709217311473325928054001771707e-01,
    1.42775938577060080797094273138717e-01, 1.47739104901338491374841515972068e-01,
    1.49445554002916905664936468389821e-01};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7, 9.
constexpr std::array<double, 5> kWg = {
    6.66713443086881375935688098933318e-02, 1.49451349150580593145776339657697e-01,
    2.19086362515982043995534934228163e-01, 2.69266719309996355091226921569469e-01,
    2.95524224714752870173892994651338e-01};

constexpr double kEps = std::numeric_limits<double>::epsilon();

double magnitude(double v) { return std::abs(v); }
double magnitude(cplx v) { return std::abs(v); }

template <class T>
struct Interval {
  std::size_t panel;
  double lo, hi;
  T value;
  double error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

template <class T, class F>
Interval<T> gk21(F& f, std::size_t panel, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  std::array<T, 21> fv;
  for (int j = 0; j < 10; ++j) {
    fv[2 * j] = f(panel, center - half * kXgk[j]);
    fv[2 * j + 1] = f(panel, center + half * kXgk[j]);
  }
  fv[20] = f(panel, center);
  T resk = fv[20] * kWgk[10];
  T resg = T{};
  double resabs = magnitude(fv[20]) * kWgk[10];
  for (int j = 0; j < 10; ++j) {
    const T s = fv[2 * j] + fv[2 * j + 1];
    resk += s * kWgk[j];
    resabs += (magnitude(fv[2 * j]) + magnitude(fv[2 * j + 1])) * kWgk[j];
    if (j % 2 == 1) resg += s * kWg[j / 2];
  }
  const T mean = resk * 0.5;
  double resasc = magnitude(fv[20] - mean) * kWgk[10];
  for (int j = 0; j < 10; ++j)
    resasc += (magnitude(fv[2 * j] - mean) + magnitude(fv[2 * j + 1] - mean)) * kWgk[j];
  resk *= half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = magnitude(resk - resg * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps))
    err = std::max(50.0 * kEps * resabs, err);
  if (!std::isfinite(magnitude(resk))) err = std::numeric_limits<double>::infinity();
  return {panel, lo, hi, resk, err};
}

template <class T, class F>
void adaptive(F& f, std::size_t panels, const Tolerance& tol, T& value, double& error,
              long& evaluations) {
  std::priority_queue<Interval<T>> heap;
  std::vector<Interval<T>> frozen;  // too narrow to split further
  T total{};
  double total_err = 0.0;
  for (std::size_t k = 0; k < panels; ++k) {
    auto iv = gk21<T>(f, k, 0.0, 1.0);
    evaluations += 21;
    total += iv.value;
    total_err += iv.error;
    heap.push(iv);
  }
  int count = static_cast<int>(panels);
  while (total_err > std::max(tol.abs, tol.rel * magnitude(total))) {
    if (heap.empty() || count >= tol.max_intervals) {
      value = total;
      error = total_err;
      throw AccuracyError("adaptive quadrature: tolerance not reached", cplx(total),
                          total_err);
    }
    Interval<T> worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi) ||
        (worst.hi - worst.lo) < 64.0 * kEps * std::max(1.0, std::abs(mid))) {
      frozen.push_back(worst);
      continue;
    }
    auto left = gk21<T>(f, worst.panel, worst.lo, mid);
    auto right = gk21<T>(f, worst.panel, mid, worst.hi);
    evaluations += 42;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
    // Re-sum periodically to shed accumulated rounding in the running totals.
    if (count % 64 == 0) {
      T s{};
      double e = 0.0;
      auto copy = heap;
      while (!copy.empty()) {
        s += copy.top().value;
        e += copy.top().error;
        copy.pop();
      }
      for (const auto& iv : frozen) {
        s += iv.value;
        e += iv.error;
      }
      total = s;
      total_err = e;
    }
  }
  value = total;
  error = total_err;
}

}  // namespace

QuadResult integrate_panels(const std::function<cplx(std::size_t, double)>& panel,
                            std::size_t panels, const Tolerance& tol) {
  QuadResult r;
  auto f = [&](std::size_t k, double t) { return panel(k, t); };
  adaptive<cplx>(f, panels, tol, r.value, r.abs_error_estimate, r.evaluations);
  return r;
}

QuadResult integrate_segment_gk(const ComplexIntegrand& g, cplx p, cplx q,
                                const Tolerance& tol) {
  const cplx dq = q - p;
  auto f = [&](std::size_t, double t) { return g(p + dq * t) * dq; };
  QuadResult r;
  adaptive<cplx>(f, 1, tol, r.value, r.abs_error_estimate, r.evaluations);
  return r;
}

RealQuadResult integrate_real(const std::function<double(double)>& g, double lo,
                              double hi, const Tolerance& tol) {
  const double w = hi - lo;
  auto f = [&](std::size_t, double t) { return g(lo + w * t) * w; };
  RealQuadResult r;
  adaptive<double>(f, 1, tol, r.value, r.abs_error_estimate, r.evaluations);
  return r;
}

QuadResult integrate_segment(const ComplexIntegrand& f, cplx p, cplx q,
                             const Tolerance& tol) {
  // x = tanh(pi/2 sinh t); the distance to the nearer endpoint,
  // 1 - |x| = 2 / (1 + exp(pi sinh|t|)), is formed directly so that nodes
  // crowding an endpoint keep full relative precision.
  const cplx half = 0.5 * (q - p);
  const double halfpi = 0.5 * kPi;
  long evals = 0;
  auto node_pair = [&](double t) -> cplx {
    const double s = halfpi * std::sinh(t);
    const double ch = std::cosh(s);
    const double w = halfpi * std::cosh(t) / (ch * ch);
    const double delta = 2.0 / (1.0 + std::exp(2.0 * s));  // 1 - x, x > 0
    cplx acc(0.0, 0.0);
    const cplx up = q - half * delta;
    const cplx lo = p + half * delta;
    if (up != q) {
      acc += f(up) * w;
      ++evals;
    }
    if (lo != p) {
      acc += f(lo) * w;
      ++evals;
    }
    return acc;
  };
  auto level_sum = [&](double h, bool odd_only) -> cplx {
    cplx s(0.0, 0.0);
    const int step = odd_only ? 2 : 1;
    int quiet = 0;
    for (int k = odd_only ? 1 : 1;; k += step) {
      const double t = k * h;
      if (t > 6.5) break;
      const cplx term = node_pair(t);
      s += term;
      if (std::abs(term) <= 1e-20 * (std::abs(s) + 1e-300)) {
        if (++quiet >= 4) break;
      } else {
        quiet = 0;
      }
    }
    return s;
  };

  double h = 1.0;
  cplx sum = f(p + half) * halfpi;  // t = 0 node, weight pi/2
  ++evals;
  sum += level_sum(h, false);
  cplx estimate = sum * h * half;
  double err = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= 12; ++level) {
    h *= 0.5;
    sum += level_sum(h, true);
    const cplx next = sum * h * half;
    err = std::abs(next - estimate);
    estimate = next;
    if (!std::isfinite(std::abs(estimate)))
      throw NumericError("integrate_segment: non-finite integrand");
    if (level >= 3 && err <= std::max(tol.abs, tol.rel * std::abs(estimate))) {
      return {estimate, err, evals};
    }
  }
  throw AccuracyError("integrate_segment: tolerance not reached", estimate, err);
}

}  // namespace slecft
