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

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "slecft/errors.hpp"
#include "slecft/pde.hpp"
#include "slecft/schramm.hpp"
#include "slecft/special.hpp"
#include "test_support.hpp"

using namespace slecft;

namespace {

const SLEParams k4 = SLEParams::from_kappa(4.0);
const SLEParams k3 = SLEParams::from_kappa(3.0);
const SLEParams k83 = SLEParams::from_kappa(8.0 / 3.0);

// The alpha = 2 screening integral in closed form.
cplx J_alpha2(cplx z, double xi) {
  const cplx i(0.0, 1.0);
  return 2.0 * i * z.imag() +
         (2.0 * i / xi) * ((z - xi) * (z - xi) * std::arg(z - xi) - z * z * std::arg(z));
}

// Values frozen from tests/oracles/oracles.py (30-digit mpmath evaluation).
constexpr double kSchrammK3 = 0.153624266449187332983810543382;   // z = 0.3+0.7i, xi = 1
constexpr double kSchrammK83 = 0.792830844632491565030505189217;  // z = -0.5+0.4i, xi = 0.5
constexpr double kFusedK3 = 0.0192985385250913555893167112812;    // z = 0.5+i
constexpr double kFusedK83 = 0.839958410194525217811367253051;    // z = -1+0.5i

}  // namespace

TEST_CASE("J at alpha = 2 matches its explicit evaluation") {
  for (cplx z : {cplx(0.3, 0.7), cplx(2.0, 0.1), cplx(-0.5, 1.5), cplx(-20.0, 1.0), cplx(0.5, 40.0)}) {
    const cplx J = schramm_J(z, 1.0, k4).value;
    const cplx ref = J_alpha2(z, 1.0);
    CHECK(std::abs(J - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("J is unchanged by moving the axis crossing right of xi") {
  for (const SLEParams& p : {k4, k3, k83}) {
    const cplx z(0.2, 0.9);
    const double xi = 1.3;
    const cplx base = schramm_J(z, xi, p).value;
    for (double c : {1.5, 3.0, 10.0}) {
      const cplx other = schramm_J(z, xi, p, c).value;
      CHECK(std::abs(other - base) <= 1e-10 * std::abs(base));
    }
  }
  CHECK_THROWS_AS(schramm_J(cplx(0.2, 0.9), 1.3, k3, 1.0), GeometryError);
}

TEST_CASE("Re M integrates to c_alpha over the whole line") {
  // int_{-1e4}^{inf} Re M / c_alpha plus the remaining far-left mass, which is
  // the fused kernel's there to O(xi / 1e4).
  for (const SLEParams& p : {k4, k3}) {
    const double y = 1.0, xi = 1.0, x0 = -1e4;
    const double inner = schramm_probability(cplx(x0, y), xi, p).raw;
    const double outer = 1.0 - fused_schramm(cplx(x0, y), p).raw;
    CHECK(inner + outer == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("kappa = 4 closed form") {
  CHECK(schramm_kappa4(cplx(0.0, 1.0), 1.0) ==
        doctest::Approx(3.0 / 8.0 - 1.0 / (4.0 * kPi)).epsilon(1e-15));
  CHECK(schramm_probability(cplx(0.0, 1.0), 1.0, k4).value ==
        doctest::Approx(3.0 / 8.0 - 1.0 / (4.0 * kPi)).epsilon(1e-10));
  // xi -> 0 gives the fused kappa = 4 value at t = 0.
  CHECK(schramm_kappa4(cplx(0.0, 1.0), 1e-9) == doctest::Approx(0.25 - 1.0 / (kPi * kPi)).epsilon(1e-8));
  for (double x : {-3.0, -0.7, 0.0, 0.4, 1.1, 5.0})
    for (double y : {0.05, 0.5, 2.0})
      for (double xi : {0.1, 1.0, 4.0})
        CHECK(std::abs(schramm_probability(cplx(x, y), xi, k4).raw - schramm_kappa4(cplx(x, y), xi)) < 1e-8);
}

TEST_CASE("generic kappa against the mpmath oracle") {
  CHECK(std::abs(schramm_probability(cplx(0.3, 0.7), 1.0, k3).value - kSchrammK3) < 1e-12);
  CHECK(std::abs(schramm_probability(cplx(-0.5, 0.4), 0.5, k83).value - kSchrammK83) < 1e-12);
}

TEST_CASE("boundary behaviour in arg z") {
  // |1 - P| <= C (pi - arg z)^{alpha-1} and P <= C (arg z)^{alpha-1}.
  for (const SLEParams& p : {k4, k3}) {
    std::vector<double> left, right;
    for (double d : {1e-2, 1e-3, 1e-4}) {
      const double e = p.alpha - 1.0;
      left.push_back((1.0 - schramm_probability(std::polar(1.0, kPi - d), 1.0, p).raw) / std::pow(d, e));
      right.push_back(schramm_probability(std::polar(3.0, d), 1.0, p).raw / std::pow(d, e));
    }
    for (std::size_t i = 1; i < left.size(); ++i) {
      CHECK(left[i] <= 1.1 * left[0]);
      CHECK(right[i] <= 1.1 * right[0]);
    }
    CHECK(schramm_probability(std::polar(1.0, kPi - 1e-4), 1.0, p).value > 0.999);
    CHECK(schramm_probability(std::polar(3.0, 1e-4), 1.0, p).value < 1e-3);
  }
}

TEST_CASE("P lies in [0, 1], decreases in x and is scale invariant") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> ux(-4.0, 4.0), uy(0.05, 3.0), uxi(0.05, 3.0);
  for (int k = 0; k < 12; ++k) {
    const double x = ux(gen), y = uy(gen), xi = uxi(gen);
    const Probability P = schramm_probability(cplx(x, y), xi, k3);
    CHECK(P.raw >= -1e-9);
    CHECK(P.raw <= 1.0 + 1e-9);
    CHECK(schramm_probability(cplx(x + 0.1, y), xi, k3).raw <= P.raw + 1e-9);
    for (double lam : {0.5, 2.0, 10.0})
      CHECK(std::abs(schramm_probability(lam * cplx(x, y), lam * xi, k3).raw - P.raw) < 1e-8);
  }
}

TEST_CASE("passage_split") {
  const PassageSplit s = passage_split(cplx(0.0, 1.0), 0.0, 1.0, k4);
  CHECK(s.left == doctest::Approx(3.0 / 8.0 - 1.0 / (4.0 * kPi)).epsilon(1e-10));
  CHECK(std::abs(s.left + s.middle + s.right - 1.0) < 1e-12);
  CHECK(s.middle > 0.0);
  for (const SLEParams& p : {k4, k3}) {
    for (double x : {0.3, 1.2, -2.0}) {
      const PassageSplit a = passage_split(cplx(x, 0.8), -0.5, 0.5, p);
      const PassageSplit b = passage_split(cplx(-x, 0.8), -0.5, 0.5, p);
      CHECK(std::abs(a.left - b.right) < 1e-10);
      CHECK(std::abs(a.middle - b.middle) < 1e-10);
      CHECK(std::abs(a.left + a.middle + a.right - 1.0) < 1e-8);
    }
  }
  CHECK_THROWS_AS(passage_split(cplx(0.0, 1.0), 1.0, 1.0, k4), DomainError);
}

TEST_CASE("fused Schramm formula") {
  CHECK(std::abs(fused_schramm(cplx(0.0, 1.0), k4).value - (0.25 - 1.0 / (kPi * kPi))) < 1e-10);
  for (double t : {-50.0, -1.5, 0.3, 4.0}) {
    const double at = std::atan(t);
    const double exact = ((kPi - 2 * at) * (kPi - 2 * at) - 4.0 / (1 + t * t)) / (4 * kPi * kPi);
    CHECK(std::abs(fused_schramm(cplx(t, 1.0), k4).value - exact) < 1e-12);
  }
  CHECK(fused_schramm(cplx(-1e6, 1.0), k3).value > 1.0 - 1e-5);
  CHECK(fused_schramm(cplx(1e6, 1.0), k3).value < 1e-5);
  CHECK(std::abs(fused_schramm(cplx(0.5, 1.0), k3).value - kFusedK3) < 1e-12);
  CHECK(std::abs(fused_schramm(cplx(-1.0, 0.5), k83).value - kFusedK83) < 1e-12);
}

TEST_CASE("fusion limit xi -> 0") {
  for (const SLEParams& p : {k4, k3}) {
    for (cplx z : {cplx(0.0, 1.0), cplx(-0.8, 0.6), cplx(1.5, 0.4)}) {
      const double f = fused_schramm(z, p).value;
      double prev = 1.0;
      for (double xi : {1e-2, 1e-3, 1e-4}) {
        const double gap = std::abs(schramm_probability(z, xi, p).value - f);
        CHECK(gap < prev);
        prev = gap;
      }
      CHECK(prev < 1e-4);
    }
  }
}

TEST_CASE("chordal left passage") {
  for (double th : {0.3, kPi / 3, 1.7, 2.9}) {
    const cplx z = std::polar(2.0, th);
    CHECK(chordal_left_passage(z, k4) == doctest::Approx(th / kPi).epsilon(1e-14));
  }
  for (double kappa : {2.0, 3.0, 6.0}) {
    const SLEParams p = SLEParams::from_kappa(kappa);
    const cplx z(0.7, 0.4);
    CHECK(chordal_left_passage(z, p) + chordal_left_passage(-std::conj(z), p) ==
          doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("PDE operators") {
  SUBCASE("constant function") {
    const FourPointFunction one = [](double, double, double, double) { return 1.0; };
    const PDEResidual r = apply_pde_operators(one, 0.3, 0.8, 0.0, 1.0, 2.5, 1e-3, PDEKind::kSchramm);
    CHECK(r.residual_1 == 0.0);
    CHECK(r.residual_2 == 0.0);
  }
  SUBCASE("kappa = 4 closed form") {
    const FourPointFunction P = [](double x, double y, double a, double b) {
      return schramm_kappa4(cplx(x - a, y), b - a);
    };
    const PDEResidual r = apply_pde_operators(P, 0.3, 0.8, 0.0, 1.0, 2.0, 1e-3, PDEKind::kSchramm);
    CHECK(std::abs(r.residual_1) < 1e-5);
    CHECK(std::abs(r.residual_2) < 1e-5);
  }
  SUBCASE("second-order convergence at kappa = 3") {
    std::vector<double> steps, r1, r2;
    for (double h = 1e-2; h > 1.2e-3; h /= 2) {
      const PDEResidual r = pde_residual_schramm(cplx(0.4, 0.9), -0.3, 0.8, k3, h);
      steps.push_back(h);
      r1.push_back(std::abs(r.residual_1));
      r2.push_back(std::abs(r.residual_2));
    }
    CHECK(testing::fitted_order(steps, r1) >= 1.8);
    CHECK(testing::fitted_order(steps, r2) >= 1.8);
  }
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(schramm_probability(cplx(0.0, -1.0), 1.0, k4), DomainError);
  CHECK_THROWS_AS(schramm_probability(cplx(0.0, 1.0), -1.0, k4), DomainError);
  CHECK_THROWS_AS(schramm_probability(cplx(0.0, 1.0), 1.0, SLEParams::from_kappa(5.0)), DomainError);
}
