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

#include "casimir/reflection.hpp"

namespace casimir {

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Convergence knobs shared by every spectral sum and quadrature.
struct TruncationPolicy {
  double quad_rel_tol = 1e-10;   // transverse-momentum integrals
  double tail_rel_tol = 1e-10;   // Matsubara stop rule
  long max_terms = 1000000;      // hard cap on the frequency ladder
  double entropy_step_rel = 1e-3;  // relative temperature step for -dF/dT
};

/// xi_l = 2 pi kB T l / hbar.
double matsubara_frequency(long l, double temperature);

/// Temperature-indexed frequency ladder with its truncation policy.
struct MatsubaraGrid {
  double temperature = 0.0;  // K
  TruncationPolicy policy{};

  double frequency(long l) const { return matsubara_frequency(l, temperature); }
};

/// Two semispaces facing each other across a vacuum gap, plus the scheme
/// used to turn their response into reflection amplitudes. Dissimilar
/// plates enter through the product r^(a) r^(b) per polarization.
struct PlatePair {
  ResponseModel a;
  ResponseModel b;
  ReflectionScheme scheme = ReflectionScheme::LifshitzPermittivity;

  PlatePair(ResponseModel model_a, ResponseModel model_b,
            ReflectionScheme s = ReflectionScheme::LifshitzPermittivity);
  static PlatePair identical(ResponseModel model,
                             ReflectionScheme s = ReflectionScheme::LifshitzPermittivity);
};

/// One converged thermal quantity with its numerical pedigree.
struct ThermalResult {
  double value = 0.0;   // J/m^2, Pa, or J/(m^2 K)
  double error = 0.0;   // quadrature + truncation estimate, same units
  long terms_used = 0;  // Matsubara terms evaluated (0 for T = 0 integrals)
  double tail = 0.0;    // geometric tail folded into value
};

/// Free energy per unit area of the fluctuating field,
///   F = (kB T / 2 pi) sum_l' int k dk [ln(1 - r_par^a r_par^b e^{-2 q z})
///                                      + ln(1 - r_perp^a r_perp^b e^{-2 q z})],
/// with the l = 0 term taken from the models' zero-frequency prescriptions
/// and carrying weight 1/2. Negative for every passive pair.
ThermalResult free_energy(const PlatePair& pair, double gap, double temperature,
                          const TruncationPolicy& policy = {});

/// Pressure -dF/dz from the analytic kernel; agrees with the central finite
/// difference of free_energy (attractive, hence negative).
ThermalResult pressure(const PlatePair& pair, double gap, double temperature,
                       const TruncationPolicy& policy = {});

/// Entropy per unit area S = -dF/dT by central differences with one
/// Richardson step; the temperature dependence of the Drude relaxation is
/// inside the differentiation.
ThermalResult entropy(const PlatePair& pair, double gap, double temperature,
                      const TruncationPolicy& policy = {});

/// T = 0 limit: the frequency sum becomes (hbar/2 pi) int dxi.
ThermalResult free_energy_zero_T(const PlatePair& pair, double gap,
                                 const TruncationPolicy& policy = {});
ThermalResult pressure_zero_T(const PlatePair& pair, double gap,
                              const TruncationPolicy& policy = {});

}  // namespace casimir
