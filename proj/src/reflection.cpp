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

#include "casimir/reflection.hpp"

#include <cmath>
#include <stdexcept>

namespace casimir {

namespace {
const double c_light = constants.light_speed;

void require_positive_frequency(const WavenumberPoint& point) {
  if (point.matsubara_index < 1 || !(point.xi > 0.0))
    throw MaterialError("reflection formulas require l >= 1; use zero_frequency_reflection");
}
}  // namespace

double WavenumberPoint::medium_wavenumber(double eps) const {
  return std::sqrt(k_perp * k_perp + eps * xi * xi / (c_light * c_light));
}

WavenumberPoint make_wavenumber_point(long matsubara_index, double xi, double k_perp) {
  if (matsubara_index < 0) throw MaterialError("matsubara_index must be >= 0");
  if (k_perp < 0.0) throw MaterialError("k_perp must be >= 0");
  WavenumberPoint p;
  p.matsubara_index = matsubara_index;
  p.xi = xi;
  p.k_perp = k_perp;
  p.q = std::sqrt(k_perp * k_perp + xi * xi / (c_light * c_light));
  return p;
}

ReflectionPair lifshitz_reflection(double eps, const WavenumberPoint& point) {
  require_positive_frequency(point);
  if (!(eps >= 1.0) || !std::isfinite(eps))
    throw MaterialError("lifshitz_reflection requires finite eps >= 1");
  const double k = point.medium_wavenumber(eps);
  const double q = point.q;
  // Difference forms via eps - 1 avoid the k ~ q cancellation of
  // near-vacuum media: k^2 - q^2 = (eps - 1) xi^2/c^2 exactly.
  const double xi_c2 = point.xi * point.xi / (c_light * c_light);
  const double kp2 = point.k_perp * point.k_perp;
  const double r_par = (eps - 1.0) * ((eps + 1.0) * kp2 + eps * xi_c2) /
                       ((eps * q + k) * (eps * q + k));
  const double r_perp = (eps - 1.0) * xi_c2 / ((k + q) * (k + q));
  return {r_par, r_perp};
}

ReflectionPair impedance_reflection(double impedance, const WavenumberPoint& point) {
  require_positive_frequency(point);
  const double cq = c_light * point.q;
  const double xi = point.xi;
  return {(cq - impedance * xi) / (cq + impedance * xi),
          (xi - cq * impedance) / (xi + cq * impedance)};
}

ReflectionPair exact_impedance_reflection(double impedance, double eps,
                                          const WavenumberPoint& point) {
  require_positive_frequency(point);
  // On the imaginary axis the momentum factor (1 - c^2 k^2/(omega^2 eps))
  // becomes 1 + c^2 k^2/(xi^2 eps) >= 1: positive real branch throughout.
  const double ck = c_light * point.k_perp;
  const double factor = std::sqrt(1.0 + ck * ck / (point.xi * point.xi * eps));
  const double z_par = impedance * factor;
  const double z_perp = impedance / factor;
  const double cq = c_light * point.q;
  const double xi = point.xi;
  return {(cq - z_par * xi) / (cq + z_par * xi), (xi - cq * z_perp) / (xi + cq * z_perp)};
}

ReflectionPair zero_frequency_reflection(const ResponseModel& model, double k_perp) {
  if (k_perp < 0.0) throw MaterialError("k_perp must be >= 0");
  const double ck = c_light * k_perp;
  switch (model.zero_frequency_rule()) {
    case ZeroFrequencyRule::SchwingerLimit:
      return {1.0, 1.0};
    case ZeroFrequencyRule::DrudeLimit:
      return {1.0, 0.0};
    case ZeroFrequencyRule::PlasmaLimit: {
      const double wp = model.limit_plasma_frequency();
      const double s = std::sqrt(ck * ck + wp * wp);
      // (s - ck)/(s + ck) = wp^2/(s + ck)^2, exact for ck >> wp too
      return {1.0, wp * wp / ((s + ck) * (s + ck))};
    }
    case ZeroFrequencyRule::ImpedanceLimit: {
      // Normal/anomalous skin effect: the impedance vanishes at zero
      // frequency along the dispersion-consistent path, giving perfect
      // reflection. Infrared optics keeps a momentum-dependent limit.
      if (std::holds_alternative<model::NormalSkin>(model.raw())) return {1.0, 1.0};
      const double wp = model.limit_plasma_frequency();
      return {1.0, (wp - ck) / (wp + ck)};
    }
  }
  throw MaterialError("unknown zero-frequency rule");
}

SurfaceResponse evaluate_response(const ResponseModel& model, double xi) {
  SurfaceResponse r;
  if (model.is_ideal()) {
    r.ideal = true;
    r.impedance = 0.0;
    return r;
  }
  if (model.has_permittivity()) {
    r.has_eps = true;
    r.eps = model.permittivity_at(xi).value;
    r.impedance = 1.0 / std::sqrt(r.eps);
  } else {
    r.impedance = model.impedance_at(xi);
  }
  return r;
}

ReflectionPair reflect(const SurfaceResponse& response, ReflectionScheme scheme,
                       const WavenumberPoint& point) {
  if (response.ideal) return {1.0, 1.0};
  switch (scheme) {
    case ReflectionScheme::LifshitzPermittivity:
      if (!response.has_eps)
        throw MaterialError("permittivity scheme needs a permittivity model");
      return lifshitz_reflection(response.eps, point);
    case ReflectionScheme::LeontovichImpedance:
      return impedance_reflection(response.impedance, point);
    case ReflectionScheme::ExactImpedance:
      if (!response.has_eps)
        throw MaterialError("exact-impedance scheme needs a permittivity model");
      return exact_impedance_reflection(response.impedance, response.eps, point);
  }
  throw MaterialError("unknown reflection scheme");
}

bool supports_scheme(const ResponseModel& model, ReflectionScheme scheme) {
  if (model.is_ideal()) return true;
  if (scheme == ReflectionScheme::LeontovichImpedance) return true;
  return model.has_permittivity();
}

}  // namespace casimir
