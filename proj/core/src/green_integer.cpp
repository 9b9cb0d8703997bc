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

// Green's function at integer alpha = n, where c_hat vanishes and h is
// recovered from the first coefficients of F in powers of (alpha - n).
//
// Even n = 2m: the integrand f0 has a pole of order m at v = 1 with no
// branching, F1 is a residue and F2 is a finite part. Writing
// f0 = (-1)^m g(t) t^(-m) with t = v - 1, the log(eps) and eps^p terms of the
// segment integral and of the small-circle integral of f1 cancel exactly, so
// F2 needs only the Taylor coefficients of g, those of g times the analytic
// part of the logarithm, and one regular integral over [0, 1 - r].
//
// Odd n: f0 is two-valued near v = 1 and F1 is the sum of the two segment
// paths to 1 + eps passing below and above the pole. The two endpoint values
// are negatives of each other, so the sum does not depend on eps.

#include <algorithm>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <vector>

#include "slecft/errors.hpp"
#include "slecft/green.hpp"
#include "slecft/quadrature.hpp"
#include "slecft/special.hpp"

namespace slecft {
namespace {

using Series = std::vector<cplx>;

// Taylor coefficients of (1 + t/c)^e, k = 0..K.
Series binomial_series(double e, cplx c, int K) {
  Series s(K + 1);
  s[0] = 1.0;
  for (int k = 1; k <= K; ++k) s[k] = s[k - 1] * ((e - k + 1.0) / k) / c;
  return s;
}

// Taylor coefficients of log(1 + t/c), k = 0..K.
Series log_series(cplx c, int K) {
  Series s(K + 1, 0.0);
  cplx ck = 1.0;
  for (int k = 1; k <= K; ++k) {
    ck /= c;
    s[k] = ((k % 2 == 1) ? 1.0 : -1.0) / static_cast<double>(k) * ck;
  }
  return s;
}

Series multiply(const Series& a, const Series& b, int K) {
  Series s(K + 1, 0.0);
  for (int i = 0; i <= K && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= K && j < static_cast<int>(b.size()); ++j) s[i + j] += a[i] * b[j];
  return s;
}

cplx integer_pow(cplx z, int e) {
  cplx r = 1.0;
  const cplx b = e >= 0 ? z : 1.0 / z;
  for (int k = 0; k < std::abs(e); ++k) r *= b;
  return r;
}

// Integral of f along the polyline through `nodes`.
cplx polyline_integral(const std::function<cplx(cplx)>& f, std::initializer_list<cplx> nodes,
                       const Tolerance& tol) {
  cplx sum = 0.0;
  const cplx* prev = nullptr;
  for (const cplx& q : nodes) {
    if (prev) sum += integrate_segment_gk(f, *prev, q, tol).value;
    prev = &q;
  }
  return sum;
}

struct WPoints {
  cplx w1, w2;
  cplx c1, c2;        // 1 - w1, 1 - w2
  cplx log_c1, log_c2;  // principal logarithms
};

WPoints w_points(AngleArgs th) {
  const double t1 = th.theta1, t2 = th.theta2;
  const double upper = t2 >= kPi / 2.0 ? 1.0 : 0.0;
  WPoints w;
  w.c1 = std::polar(1.0, -2.0 * t2);
  w.w1 = 1.0 - w.c1;
  w.w2 = (std::sin(t2) / std::sin(t1)) * std::polar(1.0, -(t2 - t1));
  const double mod2 = std::sin(t2 - t1) / std::sin(t1);
  w.c2 = std::polar(mod2, kPi - t2);
  w.log_c1 = cplx(0.0, 2.0 * (kPi * upper - t2));
  w.log_c2 = cplx(std::log(mod2), kPi - t2);
  return w;
}

void check_angles(AngleArgs th) {
  if (!(0.0 < th.theta1 && th.theta1 < th.theta2 && th.theta2 < kPi))
    throw DomainError("angles must satisfy 0 < theta1 < theta2 < pi");
}

ContinuationData even_coefficients(AngleArgs th, int n, const Tolerance& tol) {
  const int m = n / 2;
  const WPoints w = w_points(th);
  const double r = 0.25 * std::min(1.0, std::abs(w.c2));
  const int K = m + 80;

  // g(t) = (1+t)^(n-1) (c1 + t)^(n-1) (c2 + t)^(-m).
  const cplx pref = integer_pow(w.c1, n - 1) * integer_pow(w.c2, -m);
  Series g = multiply(binomial_series(n - 1, 1.0, K), binomial_series(n - 1, w.c1, K), K);
  g = multiply(g, binomial_series(-m, w.c2, K), K);
  for (auto& c : g) c *= pref;

  // Analytic part of log v + log(v - w1) - log(v - w2)/2 around t = 0.
  Series La = log_series(1.0, K);
  const Series l1 = log_series(w.c1, K);
  const Series l2 = log_series(w.c2, K);
  for (int k = 0; k <= K; ++k) La[k] += l1[k] - 0.5 * l2[k];
  La[0] += w.log_c1 - 0.5 * w.log_c2;

  const double sgn = (m % 2 == 0) ? 1.0 : -1.0;  // (-1)^m
  cplx gLa = 0.0;
  for (int j = 0; j <= m - 1; ++j) gLa += g[j] * La[m - 1 - j];

  cplx finite = 0.0;
  for (int k = 0; k <= K; ++k) {
    const int pw = k - m + 1;
    if (pw == 0) continue;
    finite += g[k] * std::pow(-r, pw) / static_cast<double>(pw);
  }
  finite += g[m - 1] * cplx(std::log(r), -kPi);

  auto f0 = [&](cplx v) {
    return integer_pow(v, n - 1) * integer_pow(v - w.w1, n - 1) * integer_pow(v - w.w2, -m) *
           integer_pow(1.0 - v, -m);
  };
  const cplx regular = integrate_segment_gk(f0, 0.0, 1.0 - r, tol).value;

  const cplx two_pi_i(0.0, 2.0 * kPi);
  ContinuationData out;
  out.n = n;
  out.F1 = two_pi_i * two_pi_i * sgn * g[m - 1];
  out.F2 = -2.0 * kPi * kPi * (regular - sgn * finite) - 4.0 * kPi * kPi * sgn * gLa;
  return out;
}

ContinuationData odd_coefficients(AngleArgs th, int n, const Tolerance& tol) {
  const WPoints w = w_points(th);
  const double eps = 0.5 * std::min(std::abs(w.w2.imag()), 0.5);
  const double half = 0.5 * n;
  auto f0 = [&](cplx v) {
    return integer_pow(v, n - 1) * integer_pow(v - w.w1, n - 1) *
           principal_pow(v - w.w2, -half) * principal_pow(1.0 - v, -half);
  };
  const cplx below = polyline_integral(f0, {0.0, cplx(1.0, -eps), cplx(1.0 + eps, 0.0)}, tol);
  const cplx above = polyline_integral(f0, {cplx(1.0 + eps, 0.0), cplx(1.0, eps), 0.0}, tol);
  ContinuationData out;
  out.n = n;
  out.F1 = cplx(0.0, 2.0 * kPi) * (below - above);
  return out;
}

}  // namespace

ContinuationData continuation_data(AngleArgs th, int n, const Tolerance& tol) {
  check_angles(th);
  if (n < 2) throw DomainError("integer continuation requires n >= 2");
  return n % 2 == 0 ? even_coefficients(th, n, tol) : odd_coefficients(th, n, tol);
}

double h_integer(AngleArgs th, int n, const Tolerance& tol) {
  const ContinuationData c = continuation_data(th, n, tol);
  const double t2 = th.theta2;
  const cplx rot = std::polar(1.0, (n - 1) * t2);
  const double pref = h_n(n) * std::pow(std::sin(th.theta1), n - 1);
  if (n % 2 == 1) return pref * (rot * c.F1).imag();
  const double shift = t2 - (t2 >= kPi / 2.0 ? 2.0 * kPi : 0.0);
  return pref * (rot * (c.F2 + cplx(0.0, shift) * c.F1)).imag();
}

double fused_h_integer(double theta, int n, const Tolerance& tol) {
  if (!(0.0 < theta && theta < kPi)) throw DomainError("fused_h: theta must lie in (0, pi)");
  if (n < 2) throw DomainError("integer continuation requires n >= 2");
  const cplx zf(0.5, -0.5 / std::tan(theta));

  // Y1 from the Taylor coefficient of g(v) = v^(n-1) (1 - v zf)^(n-1) at v = 1.
  const int K = 2 * n;
  const Series g = multiply(binomial_series(n - 1, 1.0, K),
                            binomial_series(n - 1, -(1.0 - zf) / zf, K), K);
  const cplx gpref = integer_pow(1.0 - zf, n - 1);
  const double sgn_n = (n % 2 == 0) ? 1.0 : -1.0;
  const cplx two_pi_i(0.0, 2.0 * kPi);
  const cplx Y1 = two_pi_i * two_pi_i * sgn_n * gpref * g[n - 1];

  // Y2 from the contours L^j around 0 and 1, principal logs pointwise.
  const cplx inv = 1.0 / zf;
  const double dist = inv.real() < 0.0   ? std::abs(inv)
                      : inv.real() > 1.0 ? std::abs(inv - 1.0)
                                         : std::abs(inv.imag());
  const double eps = 0.25 * std::min(1.0, dist);
  // 1/zf sits on |v - 1| = 1, so the loop around 1 only has to dodge the cut
  // ray of log(1 - v zf). Near theta = 0, pi eps ~ sin(theta) and the pole
  // (1 - v)^-n would make a loop of radius eps unresolvable.
  const double t_near = std::max(1.0, (std::conj(inv) * 1.0).real() / std::norm(inv));
  const double ray_dist = std::abs(1.0 - t_near * inv);
  const double eps1 = ray_dist >= 0.5 ? 0.25 : eps;
  const double A = 0.5;
  auto y0 = [&](cplx v) {
    return integer_pow(v, n - 1) * integer_pow(1.0 - v * zf, n - 1) * integer_pow(1.0 - v, -n);
  };
  auto y1 = [&](cplx v) {
    return y0(v) * (principal_log(v) + principal_log(1.0 - v * zf) - principal_log(1.0 - v));
  };
  const cplx ie(0.0, eps), ie1(0.0, eps1);
  auto L = [&](const std::function<cplx(cplx)>& f, int j) {
    switch (j) {
      case 1: return polyline_integral(f, {A, ie, -eps}, tol);
      case 2: return polyline_integral(f, {-eps, -ie, A}, tol);
      case 3: return polyline_integral(f, {A, 1.0 - ie1, 1.0 + eps1}, tol);
      default: return polyline_integral(f, {1.0 + eps1, 1.0 + ie1, A}, tol);
    }
  };
  const cplx s1 = L(y1, 1) + L(y1, 2) + L(y1, 3) + L(y1, 4);
  const cplx s0 = L(y0, 1) - L(y0, 2) - L(y0, 3) + L(y0, 4);
  const cplx Y2 = two_pi_i * s1 + 2.0 * kPi * kPi * s0;

  const double pref = std::pow(2.0, n - 3) * h_n(n) * std::pow(std::sin(theta), 2 * n - 2);
  if (n % 2 == 0) return pref * (2.0 * Y2 - cplx(0.0, kPi) * Y1).real();
  return pref * (2.0 / kPi) * (cplx(0.0, 2.0) * Y2 + kPi * Y1).real();
}

}  // namespace slecft
