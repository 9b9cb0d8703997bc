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

// Gauss hypergeometric function on the cut plane.
//
// |w| small: Gauss series. Left half-plane: Pfaff transformation. Everywhere
// else the hypergeometric ODE is integrated by Taylor re-expansion along the
// ray from 0, which never meets the cut [1, inf) and so stays on the
// principal branch. The ODE route has no trouble with c - a - b or b - a
// integer, where the textbook connection formulas degenerate.

#include <cmath>
#include <utility>

#include "slecft/errors.hpp"
#include "slecft/special.hpp"

namespace slecft {
namespace {

constexpr double kSeriesRadius = 0.75;
constexpr int kMaxTerms = 3000;

struct ValueAndDerivative {
  cplx f;
  cplx df;
};

// Gauss series for F and dF/dw.
ValueAndDerivative gauss_series(double a, double b, double c, cplx w) {
  cplx term(1.0, 0.0);  // (a)_k (b)_k / ((c)_k k!) w^k
  cplx sum = term;
  cplx dsum(0.0, 0.0);
  int small_run = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double ratio = (a + k) * (b + k) / ((c + k) * (k + 1.0));
    if (ratio == 0.0) return {sum, dsum};  // terminating series
    const cplx next_over_w = term * ratio;  // coefficient of w^(k+1), times w^k
    dsum += next_over_w * static_cast<double>(k + 1);
    term = next_over_w * w;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      if (++small_run >= 3) return {sum, dsum};
    } else {
      small_run = 0;
    }
  }
  throw NumericError("gauss_2f1: series did not converge");
}

// One Taylor step of z(1-z)F'' + [c-(a+b+1)z]F' - ab F = 0 from z0 to z0+h.
ValueAndDerivative taylor_step(double a, double b, double c, cplx z0,
                               ValueAndDerivative y, cplx h) {
  const cplx p0 = z0 * (1.0 - z0);
  const cplx p1 = 1.0 - 2.0 * z0;
  const cplx q0 = c - (a + b + 1.0) * z0;
  const double q1 = -(a + b + 1.0);
  const double ab = a * b;

  // Work with the scaled coefficients c_k = f_k h^k so that neither h^k nor
  // f_k can overflow on long steps far from the origin.
  cplx ck = y.f;        // c_k
  cplx ck1 = y.df * h;  // c_{k+1}
  cplx value = ck;
  cplx deriv(0.0, 0.0);  // h F'(z0 + h)
  const double scale = std::abs(ck) + std::abs(ck1);
  int small_run = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    value += ck1;
    deriv += static_cast<double>(k + 1) * ck1;
    const double kd = k;
    const cplx ck2 =
        -((p1 * kd + q0) * (kd + 1.0) * ck1 * h + (-kd * (kd - 1.0) + q1 * kd - ab) * ck * h * h) /
        (p0 * (kd + 1.0) * (kd + 2.0));
    ck = ck1;
    ck1 = ck2;
    const double mag = std::abs(ck1) * (k + 2.0);
    if (mag <= 1e-17 * (std::abs(value) + scale)) {
      if (++small_run >= 3) return {value, deriv / h};
    } else {
      small_run = 0;
    }
  }
  throw NumericError("gauss_2f1: Taylor continuation did not converge");
}

ValueAndDerivative continue_along_ray(double a, double b, double c, cplx w) {
  const double r = std::abs(w);
  cplx z = w * (0.5 / r);
  ValueAndDerivative y = gauss_series(a, b, c, z);
  for (int step = 0; step < 100000; ++step) {
    const cplx remaining = w - z;
    const double dist = std::min(std::abs(z), std::abs(1.0 - z));
    const double hmax = 0.5 * dist;
    if (std::abs(remaining) <= hmax) {
      return taylor_step(a, b, c, z, y, remaining);
    }
    const cplx h = remaining * (hmax / std::abs(remaining));
    y = taylor_step(a, b, c, z, y, h);
    z += h;
  }
  throw NumericError("gauss_2f1: continuation step limit");
}

}  // namespace

cplx gauss_2f1(double a, double b, double c, cplx w) {
  if (c <= 0.0 && c == std::floor(c))
    throw DomainError("gauss_2f1: c is a nonpositive integer");
  if (w.imag() == 0.0 && w.real() >= 1.0)
    throw DomainError("gauss_2f1: argument on the branch cut [1, inf)");
  if (!(std::isfinite(w.real()) && std::isfinite(w.imag())))
    throw DomainError("gauss_2f1: non-finite argument");

  // Terminating series are exact anywhere.
  const bool a_poly = a <= 0.0 && a == std::floor(a);
  const bool b_poly = b <= 0.0 && b == std::floor(b);
  if ((a_poly || b_poly) && std::abs(w) <= 1e3) return gauss_series(a, b, c, w).f;

  if (std::abs(w) <= kSeriesRadius) return gauss_series(a, b, c, w).f;

  const cplx wp = w / (w - 1.0);
  if (std::abs(wp) <= kSeriesRadius) {
    // Pfaff: F(a,b;c;w) = (1-w)^(-a) F(a, c-b; c; w/(w-1)).
    return principal_pow(1.0 - w, -a) * gauss_series(a, c - b, c, wp).f;
  }
  return continue_along_ray(a, b, c, w).f;
}

}  // namespace slecft
