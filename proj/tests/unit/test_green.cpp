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

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "slecft/errors.hpp"
#include "slecft/green.hpp"
#include "slecft/pde.hpp"
#include "slecft/special.hpp"
#include "test_support.hpp"

using namespace slecft;

namespace {

const SLEParams k4 = SLEParams::from_kappa(4.0);
const SLEParams k3 = SLEParams::from_kappa(3.0);
const SLEParams a25 = SLEParams::from_alpha(2.5);

// Explicit h at kappa = 4.
double h_kappa4(double t1, double t2) {
  const double num = std::sin(2 * t1 - 2 * t2) + 2 * t1 * (1 - std::cos(2 * t2)) +
                     2 * t2 * (std::cos(2 * t1) - 1) - std::sin(2 * t1) + std::sin(2 * t2);
  return num / (4 * kPi * std::sin(t1 - t2));
}

// Explicit h_f at alpha = 2, 3, 4.
double hf_explicit(double t, int n) {
  const double s = std::sin(t);
  switch (n) {
    case 2: return 2 / kPi * (s - t * std::cos(t)) * s;
    case 3: return 8 / (15 * kPi) * (4 * t - 3 * std::sin(2 * t) + 2 * t * std::cos(2 * t)) * s * s;
    default:
      return 1 / (12 * kPi) *
             (27 * s + 11 * std::sin(3 * t) - 6 * t * (9 * std::cos(t) + std::cos(3 * t))) * s * s * s;
  }
}

// Values frozen from tests/oracles/oracles.py (30-digit mpmath evaluation).
constexpr double kGreenA25 = 0.746107844996441898982042365025;  // z = 0.3+0.8i, xi = (0, 1)
constexpr double kGreenA23 = 0.510470426441192214818403469282;  // z = -0.4+0.5i, xi = (-1, 0.5)

std::vector<AngleArgs> delta_grid(int n, double margin) {
  std::vector<AngleArgs> g;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double t1 = margin + (kPi - 2 * margin) * i / (n - 1);
      const double t2 = margin + (kPi - 2 * margin) * j / (n - 1);
      if (t2 > t1 + 1e-3) g.push_back({t1, t2});
    }
  return g;
}

}  // namespace

TEST_CASE("Pochhammer integral: radius invariance and branch return") {
  for (cplx z : {cplx(0.3, 0.8), cplx(-1.0, 0.5), cplx(2.0, 0.2)}) {
    const ContourResult r = pochhammer_I(z, 0.0, 1.0, a25);
    const ContourResult half = pochhammer_I(z, 0.0, 1.0, a25, {}, 0.5);
    CHECK(std::abs(r.value - half.value) <= 1e-9 * std::abs(r.value));
    const double al = a25.alpha;
    const std::array<PowerFactor, 4> f = {{{z, al - 1}, {std::conj(z), al - 1}, {0.0, -al / 2}, {1.0, -al / 2, -1}}};
    for (const cplx ph : r.branch.net_phase(f)) CHECK(std::abs(ph - 1.0) < 1e-13);
  }
}

TEST_CASE("Pochhammer integral has the sign of c_hat") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> ux(-2.0, 3.0), uy(0.1, 2.0);
  for (int k = 0; k < 10; ++k) {
    const cplx z(ux(gen), uy(gen));
    const cplx v = std::exp(cplx(0.0, -kPi * a25.alpha)) * pochhammer_I(z, 0.0, 1.0, a25).value;
    CHECK(v.imag() / c_hat(a25.alpha) > 0.0);
  }
}

TEST_CASE("green_G against the mpmath oracle") {
  CHECK(std::abs(green_G(cplx(0.3, 0.8), 0.0, 1.0, a25) - kGreenA25) < 1e-12);
  CHECK(std::abs(green_G(cplx(-0.4, 0.5), -1.0, 0.5, SLEParams::from_alpha(2.3)) - kGreenA23) < 1e-12);
}

TEST_CASE("G factorises as y^{d-2} h and is scale covariant") {
  for (const SLEParams& p : {a25, k3, k4}) {
    for (cplx z : {cplx(0.3, 0.8), cplx(-1.2, 0.4), cplx(1.7, 1.1)}) {
      const double G = green_G(z, -0.2, 0.9, p);
      const double h = h_value(angles_of(z, -0.2, 0.9), p);
      CHECK(std::abs(G - std::pow(z.imag(), p.d - 2) * h) <= 1e-8 * G);
      const double G2 = green_G(2.0 * z, -0.4, 1.8, p);
      CHECK(std::abs(G2 - std::pow(2.0, p.d - 2) * G) <= 1e-8 * G);
    }
  }
}

TEST_CASE("kappa = 4 Green's function equals the explicit formula") {
  for (cplx z : {cplx(0.3, 0.8), cplx(-1.2, 0.4), cplx(1.7, 1.1), cplx(0.5, 0.05)}) {
    const AngleArgs th = angles_of(z, 0.0, 1.0);
    const double ref = std::pow(z.imag(), k4.d - 2) * h_kappa4(th.theta1, th.theta2);
    CHECK(std::abs(green_G(z, 0.0, 1.0, k4) - ref) < 1e-8);
  }
}

TEST_CASE("dual-path consistency of h") {
  for (double al : {2.3, 2.5, 3.7}) {
    const SLEParams p = SLEParams::from_alpha(al);
    for (const AngleArgs& th : delta_grid(5, 0.2)) {
      // A point with these angles for xi = (0, 1).
      const double s = std::sin(th.theta2 - th.theta1);
      const double r1 = std::sin(th.theta2) / s;
      const cplx z = std::polar(r1, th.theta1);
      const double via_G = green_G(z, 0.0, 1.0, p) / std::pow(z.imag(), p.d - 2);
      CHECK(std::abs(h_angles(th, p) - via_G) < 1e-8);
    }
  }
}

TEST_CASE("boundary values of h") {
  // Explicit kappa = 4 formula at theta2 = pi reduces to sin(theta1).
  for (double t1 : {0.2, 1.0, 2.5}) CHECK(h_kappa4(t1, kPi) == doctest::Approx(std::sin(t1)).epsilon(1e-14));
  for (double kappa : {4.0, 3.0, 2.0}) {
    const SLEParams p = SLEParams::from_kappa(kappa);
    for (double t1 : {0.1, 0.8, 1.6, 2.4, 3.0}) {
      const double h = h_value({t1, kPi - 1e-6}, p);
      CHECK(std::abs(h - std::pow(std::sin(t1), p.beta)) < 1e-5);
    }
  }
}

TEST_CASE("0 <= h <= C sin^beta(theta1)") {
  double cmax = 0.0;
  for (const AngleArgs& th : delta_grid(8, 0.05)) {
    const double h = h_value(th, k3);
    CHECK(h >= -1e-10);
    cmax = std::max(cmax, h / std::pow(std::sin(th.theta1), k3.beta));
  }
  CHECK(cmax < 5.0);
}

TEST_CASE("integer alpha") {
  for (const AngleArgs& th : delta_grid(6, 0.1)) {
    CHECK(std::abs(h_integer(th, 2) - h_kappa4(th.theta1, th.theta2)) < 1e-10);
    CHECK(std::abs(h_integer(th, 3) - h_closed_form(th, 8.0 / 3.0)) < 1e-8);
    CHECK(std::abs(h_integer(th, 4) - h_closed_form(th, 2.0)) < 1e-8);
  }
  // Continuity in alpha: one-sided extrapolation from n + delta, n + 2 delta.
  for (int n : {2, 3}) {
    for (const AngleArgs& th : {AngleArgs{0.5, 1.5}, AngleArgs{1.2, 2.8}}) {
      const double d = 1e-3;
      const double e = 2 * h_angles(th, SLEParams::from_alpha(n + d)) - h_angles(th, SLEParams::from_alpha(n + 2 * d));
      CHECK(std::abs(h_integer(th, n) - e) < 1e-4);
    }
  }
  // For even n the residue coefficient satisfies Im[e^{(n-1) i theta2} F1] = 0.
  for (int n : {2, 4})
    for (const AngleArgs& th : delta_grid(4, 0.3)) {
      const ContinuationData c = continuation_data(th, n);
      CHECK(std::abs((std::exp(cplx(0.0, (n - 1) * th.theta2)) * c.F1).imag()) < 1e-9);
    }
}

TEST_CASE("near-integer alpha blends both evaluations") {
  const GreenValue v = h_eval({0.7, 2.0}, SLEParams::from_alpha(2.0005));
  CHECK(v.path == GreenPath::kBlended);
  CHECK(h_eval({0.7, 2.0}, k4).path == GreenPath::kInteger);
  CHECK(h_eval({0.7, 2.0}, a25).path == GreenPath::kGeneric);
}

TEST_CASE("explicit h is nonnegative on a 100 x 100 grid") {
  for (double kappa : {4.0, 8.0 / 3.0, 2.0}) {
    double hmin = 1.0;
    for (const AngleArgs& th : delta_grid(100, 1e-3)) hmin = std::min(hmin, h_closed_form(th, kappa));
    CHECK(hmin >= -1e-10);
  }
}

TEST_CASE("diagonal limit theta2 -> theta1") {
  // h - h_f is linear in the offset; the limit is taken by Richardson
  // extrapolation from offsets 1e-4 and 2e-4.
  const double d = 1e-4;
  for (double t : {0.4, 1.3, 2.6}) {
    const double lim4 = 2 * h_closed_form({t, t + d}, 4.0) - h_closed_form({t, t + 2 * d}, 4.0);
    CHECK(std::abs(lim4 - hf_explicit(t, 2)) < 1e-6);
    const double lim3 = 2 * h_value({t, t + d}, k3) - h_value({t, t + 2 * d}, k3);
    CHECK(std::abs(lim3 - fused_h(t, k3)) < 1e-6);
    // Direct evaluation keeps working as the angles merge.
    CHECK(std::abs(h_value({t, t + 1e-9}, k3) - fused_h(t, k3)) < 1e-8);
    CHECK(std::abs(h_value({t, t + 1e-9}, k4) - hf_explicit(t, 2)) < 1e-8);
  }
}

TEST_CASE("fused h") {
  CHECK(fused_h(kPi / 2, k4) == doctest::Approx(2.0 / kPi).epsilon(1e-12));
  for (int n : {2, 3, 4}) {
    const SLEParams p = SLEParams::from_alpha(n);
    for (double t : {0.1, 0.9, 1.6, 2.2, 3.0}) {
      CHECK(std::abs(fused_h(t, p) - hf_explicit(t, n)) < 1e-8);
      CHECK(std::abs(fused_h_closed_form(t, 8.0 / n) - hf_explicit(t, n)) < 1e-14);
    }
    CHECK(std::abs(fused_h(1e-4, p)) < 1e-6);
    CHECK(std::abs(fused_h(kPi - 1e-7, p)) < 1e-6);
  }
  // Integer path against extrapolation of the hypergeometric form.
  for (int n : {2, 3, 4})
    for (double t : {0.5, 1.5, 2.5}) {
      const double d = 1e-3;
      const double mid = 0.5 * (fused_h_hypergeometric(t, n + d) + fused_h_hypergeometric(t, n - d));
      CHECK(std::abs(fused_h_integer(t, n) - mid) < 1e-4);
    }
}

TEST_CASE("bichordal Green's function") {
  CHECK(bichordal_green(cplx(0.0, 1.0), 0.0, 0.0, k4) == doctest::Approx(4.0 / kPi).epsilon(1e-12));
  for (const SLEParams& p : {k4, k3})
    for (double x : {0.3, 1.4}) {
      const double a = bichordal_green(cplx(x, 0.7), -0.5, 0.5, p);
      const double b = bichordal_green(cplx(-x, 0.7), -0.5, 0.5, p);
      CHECK(std::abs(a - b) <= 1e-9 * a);
    }
  for (const SLEParams& p : {k4, k3}) {
    const cplx z(0.4, 0.9);
    const double fused = bichordal_green(z, 0.0, 0.0, p);
    double prev = 1.0;
    for (double xi : {1e-2, 1e-3, 1e-4}) {
      const double gap = std::abs(bichordal_green(z, -xi / 2, xi / 2, p) - fused);
      CHECK(gap < prev);
      prev = gap;
    }
    CHECK(prev < 1e-6 * fused);
  }
}

TEST_CASE("chordal Green's function") {
  CHECK(chordal_green(cplx(0.0, 1.0), k4) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(chordal_green(cplx(0.0, 1.0), k4) / chordal_green(cplx(0.0, 2.0), k4) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(chordal_green(std::polar(1.0, 1e-8), k3) < 1e-8);
}

TEST_CASE("Green PDE residuals") {
  SUBCASE("kappa = 4 explicit G") {
    const FourPointFunction G = [](double x, double y, double a, double b) {
      const AngleArgs th = angles_of(cplx(x, y), a, b);
      return std::pow(y, k4.d - 2) * h_kappa4(th.theta1, th.theta2);
    };
    const PDEResidual r = apply_pde_operators(G, 0.3, 0.8, 0.0, 1.0, 2.0, 1e-3, PDEKind::kGreen);
    CHECK(std::abs(r.residual_1) < 1e-5);
    CHECK(std::abs(r.residual_2) < 1e-5);
  }
  SUBCASE("second-order convergence at kappa = 3") {
    std::vector<double> steps, r1, r2;
    for (double h = 1e-2; h > 1.2e-3; h /= 2) {
      const PDEResidual r = pde_residual_green(cplx(0.4, 0.9), -0.3, 0.8, k3, h);
      steps.push_back(h);
      r1.push_back(std::abs(r.residual_1));
      r2.push_back(std::abs(r.residual_2));
    }
    CHECK(testing::fitted_order(steps, r1) >= 1.8);
    CHECK(testing::fitted_order(steps, r2) >= 1.8);
  }
  SUBCASE("zeroth-order term vanishes on the diagonal") {
    const FourPointFunction f = [](double x, double y, double a, double b) {
      return std::sin(x - a) * std::exp(-y) / (1 + (x - b) * (x - b));
    };
    // x - xi1 = y: operator 1 reduces to the Schramm stencil.
    const PDEResidual g = apply_pde_operators(f, 0.7, 0.7, 0.0, 1.5, 2.5, 1e-3, PDEKind::kGreen);
    const PDEResidual s = apply_pde_operators(f, 0.7, 0.7, 0.0, 1.5, 2.5, 1e-3, PDEKind::kSchramm);
    CHECK(g.residual_1 == doctest::Approx(s.residual_1).epsilon(1e-12));
    CHECK(g.residual_2 != doctest::Approx(s.residual_2).epsilon(1e-6));
  }
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(green_G(cplx(0.0, 1.0), 1.0, 0.0, k4), DomainError);
  CHECK_THROWS_AS(h_closed_form({1.0, 2.0}, 3.0), DomainError);
  CHECK_THROWS_AS(pochhammer_I(cplx(0.0, 1.0), 0.0, 1.0, k4), DomainError);
}
