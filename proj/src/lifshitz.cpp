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

#include "casimir/lifshitz.hpp"

#include <algorithm>
#include <cmath>

#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

const double kB = constants.boltzmann;
const double hbar = constants.reduced_planck;
const double c_light = constants.light_speed;

// ln(1 - A e^{-y}) across both delicate regimes: log1p for a small
// product, and for A e^{-y} near 1 the sum (1 - A) + A (1 - e^{-y}) of two
// nonnegative terms, which costs no cancellation.
inline double log_one_minus(double product, double y) {
  const double x = product * std::exp(-y);
  if (x < 0.5) return std::log1p(-x);
  return std::log((1.0 - product) - product * std::expm1(-y));
}

// A e^{-y} / (1 - A e^{-y}), same branching.
inline double geometric_factor(double product, double y) {
  const double x = product * std::exp(-y);
  if (x < 0.5) return x / (1.0 - x);
  return x / ((1.0 - product) - product * std::expm1(-y));
}

enum class Kernel { FreeEnergy, Pressure };

// Integrand of the y = 2 z q substitution at one Matsubara frequency:
//   free energy: y [ln(1 - A_par e^{-y}) + ln(1 - A_perp e^{-y})]
//   pressure:   -y^2 [A_par e^{-y}/(1 - ...) + A_perp e^{-y}/(1 - ...)]
struct TermIntegrand {
  const PlatePair& pair;
  const ResponseModel& model_a;
  const ResponseModel& model_b;
  SurfaceResponse resp_a, resp_b;
  long l = 0;
  double xi = 0.0;
  double y_min = 0.0;
  double gap = 0.0;
  Kernel kernel = Kernel::FreeEnergy;

  double operator()(double y) const {
    const double k_perp =
        l == 0 ? y / (2.0 * gap) : std::sqrt((y - y_min) * (y + y_min)) / (2.0 * gap);
    ReflectionPair ra, rb;
    if (l == 0) {
      ra = zero_frequency_reflection(model_a, k_perp);
      rb = zero_frequency_reflection(model_b, k_perp);
    } else {
      WavenumberPoint point;
      point.matsubara_index = l;
      point.xi = xi;
      point.k_perp = k_perp;
      point.q = y / (2.0 * gap);
      ra = reflect(resp_a, pair.scheme, point);
      rb = reflect(resp_b, pair.scheme, point);
    }
    const double a_par = ra.r_parallel * rb.r_parallel;
    const double a_perp = ra.r_perpendicular * rb.r_perpendicular;
    if (kernel == Kernel::FreeEnergy)
      return y * (log_one_minus(a_par, y) + log_one_minus(a_perp, y));
    return -y * y * (geometric_factor(a_par, y) + geometric_factor(a_perp, y));
  }
};

struct SumOutcome {
  double sum = 0.0;
  double quad_error = 0.0;
  double tail = 0.0;
  long terms = 0;
};

// Matsubara ladder with half-weighted l = 0 term. Stops once three
// consecutive terms are below the tail tolerance, then folds in a geometric
// estimate of the remainder.
SumOutcome matsubara_sum(const PlatePair& pair, double gap, double temperature, Kernel kernel,
                         const TruncationPolicy& policy) {
  const ResponseModel model_a = pair.a.at_temperature(temperature);
  const ResponseModel model_b = pair.b.at_temperature(temperature);

  double sum = 0.0, comp = 0.0, quad_error = 0.0;
  auto accumulate = [&](double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  };

  SumOutcome out;
  int negligible = 0;
  double prev_term = 0.0;
  for (long l = 0; l <= policy.max_terms; ++l) {
    TermIntegrand f{pair, model_a, model_b, {}, {}, l, 0.0, 0.0, gap, kernel};
    f.xi = matsubara_frequency(l, temperature);
    f.y_min = 2.0 * gap * f.xi / c_light;
    if (l > 0) {
      f.resp_a = evaluate_response(model_a, f.xi);
      f.resp_b = evaluate_response(model_b, f.xi);
    }
    // Terms only matter to the precision of the running sum; the floor also
    // keeps exactly-vanishing terms from being refined against noise.
    const double floor = 0.02 * policy.tail_rel_tol * std::abs(sum);
    auto r = integrate_kernel_tail(f, f.y_min, policy.quad_rel_tol, floor);
    const double weight = l == 0 ? 0.5 : 1.0;
    accumulate(weight * r.value);
    quad_error += weight * r.error;
    out.terms = l + 1;
    if (l > 0) {
      if (std::abs(r.value) <= policy.tail_rel_tol * std::abs(sum)) {
        if (++negligible >= 3) {
          double ratio = std::abs(prev_term) > 0.0 ? std::abs(r.value) / std::abs(prev_term) : 0.0;
          ratio = std::min(ratio, 0.95);
          out.tail = r.value * ratio / (1.0 - ratio);
          accumulate(out.tail);
          out.sum = sum;
          out.quad_error = quad_error + 0.3 * std::abs(out.tail);
          return out;
        }
      } else {
        negligible = 0;
      }
      prev_term = r.value;
    }
  }
  throw EngineError("matsubara sum did not converge within the hard cap");
}

struct ZeroTOutcome {
  double value = 0.0;
  double error = 0.0;
};

// Double integral of the T = 0 limit in the scaled variables u = 2 z xi/c,
// y = 2 z q. The outer integrand inherits the exponential decay of the
// inner one.
ZeroTOutcome zero_temperature_integral(const PlatePair& pair, double gap, Kernel kernel,
                                       const TruncationPolicy& policy) {
  const ResponseModel model_a = pair.a.at_temperature(0.0);
  const ResponseModel model_b = pair.b.at_temperature(0.0);
  const double omega_c = c_light / (2.0 * gap);

  auto outer = [&](double u) {
    TermIntegrand f{pair, model_a, model_b, {}, {}, 1, u * omega_c, u, gap, kernel};
    f.resp_a = evaluate_response(model_a, f.xi);
    f.resp_b = evaluate_response(model_b, f.xi);
    return integrate_kernel_tail(f, u, 0.25 * policy.quad_rel_tol).value;
  };
  auto head = integrate_log_endpoint(outer, 0.0, 2.0, policy.quad_rel_tol);
  auto tail = integrate_exp_tail(outer, 2.0, policy.quad_rel_tol);
  return {head.value + tail.value, head.error + tail.error};
}

void check_geometry(double gap, double temperature) {
  if (!(gap > 0.0)) throw EngineError("gap must be > 0");
  if (!(temperature > 0.0)) throw EngineError("temperature must be > 0");
}

}  // namespace

double matsubara_frequency(long l, double temperature) {
  if (l < 0) throw EngineError("matsubara index must be >= 0");
  if (!(temperature > 0.0)) throw EngineError("temperature must be > 0");
  return 2.0 * pi * kB * temperature * static_cast<double>(l) / hbar;
}

PlatePair::PlatePair(ResponseModel model_a, ResponseModel model_b, ReflectionScheme s)
    : a(std::move(model_a)), b(std::move(model_b)), scheme(s) {
  if (!supports_scheme(a, scheme) || !supports_scheme(b, scheme))
    throw EngineError("model does not support the requested reflection scheme");
}

PlatePair PlatePair::identical(ResponseModel model, ReflectionScheme s) {
  ResponseModel copy = model;
  return PlatePair(std::move(model), std::move(copy), s);
}

ThermalResult free_energy(const PlatePair& pair, double gap, double temperature,
                          const TruncationPolicy& policy) {
  check_geometry(gap, temperature);
  const double prefactor = kB * temperature / (8.0 * pi * gap * gap);
  auto s = matsubara_sum(pair, gap, temperature, Kernel::FreeEnergy, policy);
  return {prefactor * s.sum, prefactor * s.quad_error, s.terms, prefactor * s.tail};
}

ThermalResult pressure(const PlatePair& pair, double gap, double temperature,
                       const TruncationPolicy& policy) {
  check_geometry(gap, temperature);
  const double prefactor = kB * temperature / (8.0 * pi * gap * gap * gap);
  auto s = matsubara_sum(pair, gap, temperature, Kernel::Pressure, policy);
  return {prefactor * s.sum, prefactor * s.quad_error, s.terms, prefactor * s.tail};
}

ThermalResult entropy(const PlatePair& pair, double gap, double temperature,
                      const TruncationPolicy& policy) {
  check_geometry(gap, temperature);
  const double h = policy.entropy_step_rel * temperature;
  if (!(temperature - h > 0.0)) throw EngineError("temperature too small for the entropy step");

  long terms = 0;
  double worst_err = 0.0;
  auto fe = [&](double T) {
    auto r = free_energy(pair, gap, T, policy);
    terms = std::max(terms, r.terms_used);
    worst_err = std::max(worst_err, r.error);
    return r.value;
  };
  const double d_full = (fe(temperature + h) - fe(temperature - h)) / (2.0 * h);
  const double d_half = (fe(temperature + 0.5 * h) - fe(temperature - 0.5 * h)) / h;
  const double derivative = (4.0 * d_half - d_full) / 3.0;
  const double richardson_gap = std::abs(d_half - d_full) / 3.0;
  const double noise = 3.0 * worst_err / h;
  if (richardson_gap > std::max(0.25 * std::abs(derivative), 50.0 * noise) &&
      richardson_gap > 1e-300)
    throw EngineError("entropy differentiation steps disagree");
  return {-derivative, richardson_gap + noise, terms, 0.0};
}

ThermalResult free_energy_zero_T(const PlatePair& pair, double gap,
                                 const TruncationPolicy& policy) {
  if (!(gap > 0.0)) throw EngineError("gap must be > 0");
  const double prefactor = hbar * c_light / (32.0 * pi * pi * gap * gap * gap);
  auto r = zero_temperature_integral(pair, gap, Kernel::FreeEnergy, policy);
  return {prefactor * r.value, prefactor * r.error, 0, 0.0};
}

ThermalResult pressure_zero_T(const PlatePair& pair, double gap, const TruncationPolicy& policy) {
  if (!(gap > 0.0)) throw EngineError("gap must be > 0");
  const double prefactor = hbar * c_light / (32.0 * pi * pi * gap * gap * gap * gap);
  auto r = zero_temperature_integral(pair, gap, Kernel::Pressure, policy);
  return {prefactor * r.value, prefactor * r.error, 0, 0.0};
}

}  // namespace casimir
