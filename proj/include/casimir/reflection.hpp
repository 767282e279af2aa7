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

#pragma once

#include "casimir/material.hpp"

namespace casimir {

/// Reflection amplitudes for the two field polarizations at one imaginary
/// frequency and transverse momentum. Real on the imaginary axis; all
/// magnitudes are bounded by 1 for passive media.
struct ReflectionPair {
  double r_parallel = 0.0;       // transverse magnetic
  double r_perpendicular = 0.0;  // transverse electric
};

/// One point of the (Matsubara index, transverse momentum) lattice.
/// q = sqrt(k_perp^2 + xi^2/c^2) is the vacuum decay wavenumber; the
/// in-medium wavenumber depends on the permittivity and is derived where
/// needed via medium_wavenumber().
struct WavenumberPoint {
  long matsubara_index = 0;  // l >= 0
  double xi = 0.0;           // rad/s
  double k_perp = 0.0;       // 1/m
  double q = 0.0;            // 1/m

  double medium_wavenumber(double eps) const;  // sqrt(k_perp^2 + eps xi^2/c^2)
};

WavenumberPoint make_wavenumber_point(long matsubara_index, double xi, double k_perp);

/// Fresnel coefficients from the permittivity,
///   r_par = (eps q - k)/(eps q + k),  r_perp = (k - q)/(k + q).
/// Positive frequencies only; l = 0 is served by zero_frequency_reflection.
ReflectionPair lifshitz_reflection(double eps, const WavenumberPoint& point);

/// Coefficients from the Leontovich surface impedance,
///   r_par = (c q - Z xi)/(c q + Z xi),  r_perp = (xi - c q Z)/(xi + c q Z).
ReflectionPair impedance_reflection(double impedance, const WavenumberPoint& point);

/// Momentum-dependent impedances built from the Leontovich impedance,
///   Z_par = Z (1 + c^2 k^2/(xi^2 eps))^{1/2},  Z_perp = Z (...)^{-1/2},
/// inserted into the impedance-form coefficients. With Z = 1/sqrt(eps) and
/// (xi, k_perp) independent this reproduces lifshitz_reflection exactly.
ReflectionPair exact_impedance_reflection(double impedance, double eps,
                                          const WavenumberPoint& point);

/// Analytic l = 0 limits, selected by the model's prescription rather than
/// evaluated numerically: the entire difference between the competing
/// descriptions of the thermal force lives in this choice.
ReflectionPair zero_frequency_reflection(const ResponseModel& model, double k_perp);

/// Which reflection formula the engine feeds with the material response.
enum class ReflectionScheme {
  LifshitzPermittivity,
  LeontovichImpedance,
  ExactImpedance,
};

/// A model evaluated at one positive frequency; computed once per Matsubara
/// term and shared across the transverse-momentum quadrature.
struct SurfaceResponse {
  bool ideal = false;
  bool has_eps = false;
  double eps = 1.0;
  double impedance = 1.0;
};

SurfaceResponse evaluate_response(const ResponseModel& model, double xi);

/// Dispatch to the scheme's reflection formula; ideal metals reflect
/// perfectly under every scheme.
ReflectionPair reflect(const SurfaceResponse& response, ReflectionScheme scheme,
                       const WavenumberPoint& point);

/// True when the model can serve the scheme (permittivity forms need eps).
bool supports_scheme(const ResponseModel& model, ReflectionScheme scheme);

}  // namespace casimir
