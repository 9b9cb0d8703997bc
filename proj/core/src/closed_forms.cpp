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

// Explicit h and h_f at alpha = 2, 3, 4 (kappa = 4, 8/3, 2).

#include <cmath>
#include <complex>

#include "slecft/errors.hpp"
#include "slecft/green.hpp"
#include "slecft/special.hpp"

namespace slecft {
namespace {

int alpha_of_kappa(double kappa) {
  const double al = 8.0 / kappa;
  const long n = std::lround(al);
  if ((n == 2 || n == 3 || n == 4) && std::abs(al - n) < 1e-9) return static_cast<int>(n);
  throw DomainError("closed forms exist only for kappa = 4, 8/3, 2");
}

double h_alpha2(double t1, double t2) {
  using std::cos;
  using std::sin;
  return (sin(2 * t1 - 2 * t2) + 2 * t1 * (1 - cos(2 * t2)) + 2 * t2 * (cos(2 * t1) - 1) -
          sin(2 * t1) + sin(2 * t2)) /
         (4 * kPi * sin(t1 - t2));
}

double h_alpha3(double t1, double t2) {
  using std::cos;
  using std::sin;
  const double s = std::sqrt(sin(t1) * sin(t2));
  const double bracket = -6 * cos((t1 - 3 * t2) / 2) + cos((3 * t1 - 5 * t2) / 2) +
                         cos((5 * t1 - 3 * t2) / 2) - 6 * cos((3 * t1 - t2) / 2) -
                         38 * cos((t1 + t2) / 2) + 20 * cos((3 * t1 + 3 * t2) / 2) +
                         14 * cos((5 * t1 + t2) / 2) + 14 * cos((t1 + 5 * t2) / 2);
  const double c = cos((t1 - t2) / 2);
  const double poly = -9 * sin(2 * t1) * sin(2 * t2) + (7 * cos(2 * t2) + 8) * cos(2 * t1) +
                      8 * cos(2 * t2) - 23;
  const double ang = std::arg(std::complex<double>(cos((t1 + t2) / 2), s));
  return (s * bracket - 2 * c * c * poly * ang) / (30 * kPi * (cos(t1 - t2) + 1));
}

double h_alpha4(double t1, double t2) {
  using std::cos;
  using std::sin;
  const double s1 = sin(t1), s2 = sin(t2);
  const double cot1 = cos(t1) / s1, cot2 = cos(t2) / s2;
  const double csc1 = 1 / s1, csc2 = 1 / s2;
  const double first = 72 * std::pow(s1, 5) * cos(t2) * cos(t1 - 3 * t2) / std::pow(sin(t1 - t2), 3);
  const double a = 96 * ((3 * t1 * cot2 + 2) * cot1 + t1 * (3 - 2 * csc1 * csc1) - 3 * cot2) / s1;
  const double b =
      std::pow(csc2, 6) *
      ((3 * (16 * t2 * (3 * sin(t1 - 2 * t2) + s1) * s1 + 5 * sin(2 * t2) - 4 * sin(4 * t2)) * s1) +
       6 * cos(t1 - 6 * t2) - cos(3 * t1 - 6 * t2) +
       (75 * cos(2 * t2) - 30 * cos(4 * t2) - 33) * cos(t1) - 17 * cos(3 * t1));
  const double second = std::pow(s2, 3) / std::pow(cot1 - cot2, 3) * (a + b);
  return (first + second) / (192 * kPi);
}

}  // namespace

double h_closed_form(AngleArgs th, double kappa) {
  if (!(0.0 < th.theta1 && th.theta1 < th.theta2 && th.theta2 < kPi))
    throw DomainError("angles must satisfy 0 < theta1 < theta2 < pi");
  switch (alpha_of_kappa(kappa)) {
    case 2: return h_alpha2(th.theta1, th.theta2);
    case 3: return h_alpha3(th.theta1, th.theta2);
    default: return h_alpha4(th.theta1, th.theta2);
  }
}

double fused_h_closed_form(double t, double kappa) {
  if (!(0.0 < t && t < kPi)) throw DomainError("fused_h: theta must lie in (0, pi)");
  using std::cos;
  using std::sin;
  switch (alpha_of_kappa(kappa)) {
    case 2: return 2 / kPi * (sin(t) - t * cos(t)) * sin(t);
    case 3: return 8 / (15 * kPi) * (4 * t - 3 * sin(2 * t) + 2 * t * cos(2 * t)) * sin(t) * sin(t);
    default:
      return 1 / (12 * kPi) * (27 * sin(t) + 11 * sin(3 * t) - 6 * t * (9 * cos(t) + cos(3 * t))) *
             std::pow(sin(t), 3);
  }
}

}  // namespace slecft
