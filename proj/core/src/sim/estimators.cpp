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


#include "slecft/sim/estimators.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "slecft/errors.hpp"
#include "slecft/green.hpp"
#include "slecft/quadrature.hpp"
#include "slecft/schramm.hpp"
#include "slecft/special.hpp"

namespace slecft::sim {
namespace {

constexpr std::uint64_t kChunk = 256;

void check_settings(const MCSettings& mc) {
  if (mc.n_samples < 1) throw DomainError("n_samples must be at least 1");
  if (mc.threads < 1) throw DomainError("threads must be at least 1");
}

void warn_unterminated(EstimatorResult& r, std::uint64_t bad, std::uint64_t total) {
  if (bad * 100 > total) {
    std::ostringstream msg;
    msg << bad << " of " << total << " tracks did not terminate";
    r.warnings.push_back(msg.str());
  }
}

}  // namespace

void for_each_sample(std::uint64_t n, int threads,
                     const std::function<void(std::uint64_t)>& body) {
  const int workers = static_cast<int>(
      std::min<std::uint64_t>(std::max(threads, 1), (n + kChunk - 1) / kChunk));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::uint64_t begin = next.fetch_add(kChunk);
      if (begin >= n) return;
      const std::uint64_t end = std::min(n, begin + kChunk);
      try {
        for (std::uint64_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

EstimatorResult estimate_left_passage(const LeftPassageConfig& cfg, const MCSettings& mc) {
  check_settings(mc);
  if (!(cfg.z.imag() > 0.0)) throw DomainError("left passage: z must lie in the upper half-plane");
  if (cfg.angle_n < 2) throw DomainError("left passage: angle_n must be at least 2");
  // 0 = right, 1 = left, 2 = unterminated.
  std::vector<std::uint8_t> outcome(mc.n_samples);
  const StopRule rule{0.0, cfg.angle_n, cfg.t_max};
  for_each_sample(mc.n_samples, mc.threads, [&](std::uint64_t i) {
    LoewnerSimulation sim(cfg.driving, mc.policy, mc.seed, i);
    const int h = sim.add_point(cfg.z);
    sim.run(cfg.t_max, rule);
    outcome[i] = sim.point(h).reason != StopReason::kAngle ? 2 : sim.theta1(h) > kPi / 2.0 ? 1 : 0;
  });
  std::uint64_t left = 0, bad = 0;
  for (auto o : outcome) {
    left += o == 1;
    bad += o == 2;
  }
  EstimatorResult r;
  r.seed = mc.seed;
  r.n_failed = bad;
  r.n_samples = mc.n_samples - bad;
  if (r.n_samples == 0) throw NumericError("left passage: no track terminated");
  const double p = static_cast<double>(left) / r.n_samples;
  r.estimate = p;
  r.std_error = std::sqrt(p * (1.0 - p) / r.n_samples);
  warn_unterminated(r, bad, mc.n_samples);
  return r;
}

GreenRatioResult estimate_green_ratio(const GreenRatioConfig& cfg, const MCSettings& mc) {
  check_settings(mc);
  if (!(cfg.z1.imag() > 0.0 && cfg.z2.imag() > 0.0))
    throw DomainError("green ratio: points must lie in the upper half-plane");
  if (!(cfg.eps > 0.0 && cfg.eps < std::min(cfg.z1.imag(), cfg.z2.imag()) / 10.0))
    throw DomainError("green ratio: requires 0 < eps < min(Im z1, Im z2)/10");
  // bit 0: hit at z1, bit 1: hit at z2, bit 2: unterminated.
  std::vector<std::uint8_t> outcome(mc.n_samples);
  const StopRule rule{cfg.eps, cfg.angle_n, cfg.t_max};
  for_each_sample(mc.n_samples, mc.threads, [&](std::uint64_t i) {
    LoewnerSimulation sim(cfg.driving, mc.policy, mc.seed, i);
    sim.add_point(cfg.z1);
    sim.add_point(cfg.z2);
    sim.run(cfg.t_max, rule);
    std::uint8_t o = 0;
    for (int k = 0; k < 2; ++k) {
      const StopReason why = sim.point(k).reason;
      if (why == StopReason::kUpsilon) o |= static_cast<std::uint8_t>(1u << k);
      if (why == StopReason::kTime || why == StopReason::kStepLimit) o |= 4;
    }
    outcome[i] = o;
  });
  std::uint64_t h1 = 0, h2 = 0, h12 = 0, bad = 0;
  for (auto o : outcome) {
    if (o & 4) {
      ++bad;
      continue;
    }
    h1 += o & 1;
    h2 += (o >> 1) & 1;
    h12 += (o & 3) == 3;
  }
  GreenRatioResult out;
  EstimatorResult& r = out.ratio;
  r.seed = mc.seed;
  r.n_failed = bad;
  r.n_samples = mc.n_samples - bad;
  if (h1 == 0 || h2 == 0)
    throw NumericError("green ratio: insufficient samples (no hits at one of the points)");
  const double n = static_cast<double>(r.n_samples);
  const double p1 = h1 / n, p2 = h2 / n, p12 = h12 / n;
  const double R = p1 / p2;
  const double var = R * R *
                     ((1.0 - p1) / p1 + (1.0 - p2) / p2 - 2.0 * (p12 - p1 * p2) / (p1 * p2)) / n;
  out.p1 = p1;
  out.p2 = p2;
  r.estimate = R;
  r.std_error = std::sqrt(std::max(var, 0.0));
  warn_unterminated(r, bad, mc.n_samples);
  return out;
}

double martingale_observable(MartingaleKind kind, const SLEParams& p, cplx Z, double log_gprime,
                             double xi1, double xi2, const Tolerance& tol) {
  if (kind == MartingaleKind::kSchramm) return schramm_probability(Z - xi1, xi2 - xi1, p, tol).raw;
  const double ups = Z.imag() * std::exp(-log_gprime);
  return std::pow(ups, p.d - 2.0) * h_value(angles_of(Z, xi1, xi2), p, tol);
}

MartingaleResult martingale_drift_test(const MartingaleConfig& cfg, const MCSettings& mc) {
  check_settings(mc);
  const auto& cps = cfg.checkpoints;
  if (cps.empty() || !std::is_sorted(cps.begin(), cps.end()) || !(cps.front() > 0.0))
    throw DomainError("martingale: checkpoints must be positive and increasing");
  if (!cfg.driving.force_point || !(cfg.driving.xi1 < cfg.driving.xi2))
    throw DomainError("martingale: requires a force point to the right of the start point");
  const SLEParams& p = cfg.driving.params;
  const std::size_t K = cps.size();

  MartingaleResult out;
  out.initial = martingale_observable(cfg.kind, p, cfg.z, 0.0, cfg.driving.xi1, cfg.driving.xi2,
                                      cfg.tol);

  std::vector<double> values(mc.n_samples * K, 0.0);
  std::vector<std::uint8_t> ok(mc.n_samples, 1);
  StopRule rule;
  if (cfg.kind == MartingaleKind::kGreen) rule.upsilon_eps = cfg.eps_stop;
  for_each_sample(mc.n_samples, mc.threads, [&](std::uint64_t i) {
    LoewnerSimulation sim(cfg.driving, mc.policy, mc.seed, i);
    const int h = sim.add_point(cfg.z);
    double frozen = 0.0;
    bool is_frozen = false;
    try {
      for (std::size_t k = 0; k < K; ++k) {
        if (!is_frozen) {
          sim.run(cps[k], rule);
          const TrackedPoint& pt = sim.point(h);
          const double v =
              martingale_observable(cfg.kind, p, pt.Z, pt.log_gprime, sim.xi1(), sim.xi2(), cfg.tol);
          if (!std::isfinite(v)) throw NumericError("non-finite observable");
          if (pt.reason != StopReason::kRunning) {
            if (pt.reason != StopReason::kUpsilon) throw NumericError("track did not reach checkpoint");
            frozen = v;
            is_frozen = true;
          }
          values[i * K + k] = v;
        } else {
          values[i * K + k] = frozen;
        }
      }
    } catch (const Error&) {
      ok[i] = 0;
    }
  });

  std::uint64_t n = 0;
  for (auto o : ok) n += o;
  out.discarded = mc.n_samples - n;
  if (n < 2) throw NumericError("martingale: fewer than two usable samples");
  const double nd = static_cast<double>(n);
  std::vector<double> mean(K, 0.0);
  for (std::uint64_t i = 0; i < mc.n_samples; ++i)
    if (ok[i])
      for (std::size_t k = 0; k < K; ++k) mean[k] += values[i * K + k];
  for (auto& m : mean) m /= nd;
  for (std::size_t k = 0; k < K; ++k) {
    double ss = 0.0;
    for (std::uint64_t i = 0; i < mc.n_samples; ++i)
      if (ok[i]) ss += std::pow(values[i * K + k] - mean[k], 2);
    EstimatorResult r;
    r.estimate = mean[k];
    r.std_error = std::sqrt(ss / (nd - 1.0) / nd);
    r.n_samples = n;
    r.seed = mc.seed;
    r.n_failed = out.discarded;
    out.means.push_back(r);
  }
  for (std::size_t a = 0; a < K; ++a)
    for (std::size_t b = a + 1; b < K; ++b) {
      const double dm = mean[a] - mean[b];
      double ss = 0.0;
      for (std::uint64_t i = 0; i < mc.n_samples; ++i)
        if (ok[i]) ss += std::pow(values[i * K + a] - values[i * K + b] - dm, 2);
      const double se = std::sqrt(ss / (nd - 1.0) / nd);
      const double z = se > 0.0 ? std::abs(dm) / se : (dm == 0.0 ? 0.0 : INFINITY);
      out.flatness = std::max(out.flatness, z);
    }
  return out;
}

double radial_bessel_cdf(double x, double a) {
  if (x <= 0.0) return 0.0;
  if (x >= kPi) return 1.0;
  const double e = 4.0 * a;
  auto f = [e](double t) { return std::pow(std::sin(t), e); };
  return 0.5 * c_star(a) * integrate_real(f, 0.0, x, Tolerance{1e-12, 1e-14, 4000}).value;
}

RadialBesselResult radial_bessel_stationary(const RadialBesselConfig& cfg, const MCSettings& mc) {
  check_settings(mc);
  if (!(cfg.theta0 > 0.0 && cfg.theta0 < kPi)) throw DomainError("radial Bessel: theta0 in (0, pi)");
  if (!(cfg.T > 0.0 && cfg.dt > 0.0)) throw DomainError("radial Bessel: T and dt must be positive");
  if (cfg.bins < 1) throw DomainError("radial Bessel: bins must be positive");
  const double a = cfg.params.a;
  const auto steps = static_cast<std::uint64_t>(std::ceil(cfg.T / cfg.dt));
  const double dt = cfg.T / static_cast<double>(steps);
  const double sq = std::sqrt(dt);
  std::vector<double> ends(mc.n_samples);
  std::vector<std::uint32_t> refl(mc.n_samples, 0);
  for_each_sample(mc.n_samples, mc.threads, [&](std::uint64_t i) {
    SampleStream rng(mc.seed, i);
    double th = cfg.theta0;
    std::uint32_t r = 0;
    for (std::uint64_t s = 0; s < steps; ++s) {
      th += 2.0 * a / std::tan(th) * dt + sq * rng.normal();
      if (th <= 0.0 || th >= kPi) {
        // Reflect at both walls. A step from very close to a wall can
        // overshoot by many periods, so fold modulo 2 pi.
        ++r;
        th = std::fmod(std::abs(th), 2.0 * kPi);
        if (th > kPi) th = 2.0 * kPi - th;
        if (th <= 0.0 || th >= kPi) th = th <= 0.0 ? dt : kPi - dt;
      }
    }
    ends[i] = th;
    refl[i] = r;
  });

  RadialBesselResult out;
  const double n = static_cast<double>(mc.n_samples);
  double sum = 0.0, ss = 0.0;
  for (double v : ends) sum += v;
  const double m = sum / n;
  for (double v : ends) ss += (v - m) * (v - m);
  for (auto r : refl) out.reflections += r;
  out.mean.estimate = m;
  out.mean.std_error = mc.n_samples > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
  out.mean.n_samples = mc.n_samples;
  out.mean.seed = mc.seed;

  const double width = kPi / cfg.bins;
  out.density.assign(cfg.bins, 0.0);
  for (int b = 0; b <= cfg.bins; ++b) out.bin_edges.push_back(b * width);
  for (double v : ends) {
    const int b = std::min(cfg.bins - 1, static_cast<int>(v / width));
    out.density[b] += 1.0 / (n * width);
  }

  std::vector<double> sorted = ends;
  std::sort(sorted.begin(), sorted.end());
  double ks = 0.0;
  const double e = 4.0 * a;
  auto psi = [&](double t) { return 0.5 * c_star(a) * std::pow(std::sin(t), e); };
  double F = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] > prev) F += integrate_real(psi, prev, sorted[i], Tolerance{1e-12, 1e-15, 4000}).value;
    prev = sorted[i];
    ks = std::max({ks, std::abs(F - i / n), std::abs((i + 1) / n - F)});
  }
  out.ks_distance = ks;
  const double total_steps = n * static_cast<double>(steps);
  if (out.reflections > 0.001 * total_steps) {
    std::ostringstream msg;
    msg << out.reflections << " boundary reflections in " << total_steps << " steps";
    out.warnings.push_back(msg.str());
  }
  return out;
}

}  // namespace slecft::sim
