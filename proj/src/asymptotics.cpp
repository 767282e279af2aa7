// Copyright (c) 2026 the thermal-casimir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "casimir/asymptotics.hpp"

#include <cmath>
#include <future>
#include <optional>

#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

const double kB = constants.boltzmann;
const double hbar = constants.reduced_planck;
const double c_light = constants.light_speed;

struct PowerFit {
  double offset;    // S0
  double amplitude;
  double exponent;
};

// Exact three-point solve of S(T) = S0 + a T^p, temperatures descending.
std::optional<PowerFit> fit_power_tail(const double* T, const double* S) {
  const double num = S[0] - S[1];
  const double den = S[1] - S[2];
  if (den == 0.0 || num / den <= 0.0) return std::nullopt;
  const double target = num / den;
  auto mismatch = [&](double p) {
    return (std::pow(T[0], p) - std::pow(T[1], p)) / (std::pow(T[1], p) - std::pow(T[2], p)) -
           target;
  };
  double lo = 0.05, hi = 12.0;
  double flo = mismatch(lo), fhi = mismatch(hi);
  if (!(flo * fhi < 0.0)) return std::nullopt;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = mismatch(mid);
    if (fm == 0.0 || hi - lo < 1e-12) {
      lo = hi = mid;
      break;
    }
    if (flo * fm < 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  const double p = 0.5 * (lo + hi);
  const double a = num / (std::pow(T[0], p) - std::pow(T[1], p));
  return PowerFit{S[0] - a * std::pow(T[0], p), a, p};
}

}  // namespace

FrequencyRatio FrequencyRatio::from_plasma(double plasma_frequency, double gap) {
  if (!(plasma_frequency > 0.0) || !(gap > 0.0))
    throw EngineError("frequency ratio needs positive plasma frequency and gap");
  const double omega_c = c_light / (2.0 * gap);
  if (std::abs(omega_c * 2.0 * gap / c_light - 1.0) > 1e-12)
    throw EngineError("characteristic frequency is inconsistent with the gap");
  return {plasma_frequency / omega_c};
}

double nernst_entropy_drude(FrequencyRatio ratio, double gap) {
  if (!(ratio.value > 0.0) || !(gap > 0.0))
    throw EngineError("nernst_entropy_drude needs positive ratio and gap");
  const double r2 = ratio.value * ratio.value;
  auto integrand = [r2](double y) {
    const double s = std::sqrt(r2 + y * y);
    // (s - y)/(s + y) = r^2/(s + y)^2, free of the s ~ y cancellation
    const double refl = r2 / ((s + y) * (s + y));
    const double a = refl * refl;
    const double x = a * std::exp(-y);
    if (x < 0.5) return y * std::log1p(-x);
    // 1 - a = 4 s y/(s + y)^2 exactly; no cancellation as y -> 0
    const double one_minus_a = 4.0 * s * y / ((s + y) * (s + y));
    return y * std::log(one_minus_a - a * std::expm1(-y));
  };
  // e^{-y} is below 1e-14 by y = 32; integrate to 64 for safety. The
  // integrand behaves as y ln y near the origin, so the first stretch goes
  // through the endpoint-safe transform.
  auto head = integrate_log_endpoint(integrand, 0.0, 2.0, 1e-12);
  auto rest = integrate_adaptive(integrand, 2.0, 64.0, 1e-12);
  return kB / (16.0 * pi * gap * gap) * (head.value + rest.value);
}

double classical_free_energy(MetalClass metal, double gap, double temperature) {
  if (!(gap > 0.0) || !(temperature > 0.0))
    throw EngineError("classical_free_energy needs positive gap and temperature");
  const double ideal = -zeta3 * kB * temperature / (8.0 * pi * gap * gap);
  return metal == MetalClass::IdealMetal ? ideal : 0.5 * ideal;
}

IdealZeroT ideal_metal_zero_T(double gap) {
  if (!(gap > 0.0)) throw EngineError("gap must be > 0");
  const double z3 = gap * gap * gap;
  return {-pi * pi * hbar * c_light / (720.0 * z3),
          -pi * pi * hbar * c_light / (240.0 * z3 * gap)};
}

const char* to_string(NernstClass c) {
  switch (c) {
    case NernstClass::ConsistentZero:
      return "ConsistentZero";
    case NernstClass::NegativeViolation:
      return "NegativeViolation";
    case NernstClass::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

NernstVerdict nernst_scan(const PlatePair& pair, double gap,
                          std::span<const double> temperature_ladder,
                          const TruncationPolicy& policy) {
  if (!(gap > 0.0)) throw EngineError("gap must be > 0");
  const std::size_t n = temperature_ladder.size();
  for (std::size_t i = 1; i < n; ++i)
    if (!(temperature_ladder[i] < temperature_ladder[i - 1]))
      throw EngineError("temperature ladder must decrease strictly");
  if (n == 0 || !(2.0 * pi * kB * temperature_ladder[n - 1] * gap / (hbar * c_light) < 0.05))
    throw EngineError("ladder must reach 2 pi kB T z/(hbar c) < 0.05");

  NernstVerdict verdict;
  verdict.model = pair.a.describe();

  // Ladder points are independent; evaluate them concurrently and collect
  // in ladder order.
  std::vector<std::future<ThermalResult>> futures;
  futures.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double T = temperature_ladder[i];
    futures.push_back(std::async(std::launch::async,
                                 [&pair, gap, T, &policy] { return entropy(pair, gap, T, policy); }));
  }
  std::vector<ThermalResult> results;
  results.reserve(n);
  for (auto& f : futures) results.push_back(f.get());
  for (std::size_t i = 0; i < n; ++i)
    verdict.ladder.push_back({temperature_ladder[i], results[i].value, results[i].error});

  if (n < 4) return verdict;  // too short to cross-check the fit

  double T_small[3], S_small[3], T_next[3], S_next[3];
  for (int k = 0; k < 3; ++k) {
    T_small[k] = temperature_ladder[n - 3 + k];
    S_small[k] = results[n - 3 + k].value;
    T_next[k] = temperature_ladder[n - 4 + k];
    S_next[k] = results[n - 4 + k].value;
  }
  const auto fit_a = fit_power_tail(T_small, S_small);
  const auto fit_b = fit_power_tail(T_next, S_next);
  if (!fit_a || !fit_b) return verdict;

  double noise = 0.0;
  for (std::size_t i = n - 3; i < n; ++i) noise = std::max(noise, results[i].error);
  const double s0 = fit_a->offset;
  const double uncertainty = std::abs(fit_a->offset - fit_b->offset) + 3.0 * noise +
                             0.01 * std::abs(S_small[2]);
  verdict.entropy_at_zero = s0;
  verdict.uncertainty = uncertainty;
  verdict.fitted_exponent = fit_a->exponent;

  const bool magnitude_decreasing = std::abs(S_small[2]) <= std::abs(S_small[1]) * (1.0 + 1e-3) &&
                                    std::abs(S_small[1]) <= std::abs(S_small[0]) * (1.0 + 1e-3);
  if (s0 + uncertainty < 0.0)
    verdict.classification = NernstClass::NegativeViolation;
  else if (std::abs(s0) < uncertainty && magnitude_decreasing)
    verdict.classification = NernstClass::ConsistentZero;
  else
    verdict.classification = NernstClass::Inconclusive;
  return verdict;
}

}  // namespace casimir
