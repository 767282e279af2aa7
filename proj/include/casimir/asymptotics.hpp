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

#include <span>
#include <string>
#include <vector>

#include "casimir/lifshitz.hpp"

namespace casimir {

/// Plasma frequency in units of the characteristic gap frequency
/// omega_c = c/(2z).
struct FrequencyRatio {
  double value = 0.0;

  static FrequencyRatio from_plasma(double plasma_frequency, double gap);
};

/// Residual entropy per unit area of the dissipative free-electron model
/// with a perfect lattice,
///   S(z,0) = (kB/16 pi z^2) int_0^inf y dy
///            ln[1 - ((y - sqrt(r^2 + y^2))/(y + sqrt(r^2 + y^2)))^2 e^{-y}],
/// r = omega_p/omega_c. Strictly negative for every finite r: the closed
/// form behind the thermodynamic (Nernst) test.
double nernst_entropy_drude(FrequencyRatio ratio, double gap);

enum class MetalClass { IdealMetal, DrudeClass };

/// High-temperature (classical) free energy per unit area: only the
/// zero-frequency term survives. Ideal boundaries keep both polarizations,
///   F = -zeta(3) kB T/(8 pi z^2);
/// the dissipative model loses the transverse-electric half and gives
/// exactly half of that.
double classical_free_energy(MetalClass metal, double gap, double temperature);

struct IdealZeroT {
  double energy = 0.0;    // J/m^2
  double pressure = 0.0;  // Pa
};

/// Casimir's closed forms for ideal plates at T = 0:
/// E = -pi^2 hbar c/(720 z^3), P = -pi^2 hbar c/(240 z^4).
IdealZeroT ideal_metal_zero_T(double gap);

enum class NernstClass { ConsistentZero, NegativeViolation, Inconclusive };

struct NernstLadderPoint {
  double temperature = 0.0;  // K
  double entropy = 0.0;      // J/(m^2 K)
  double error = 0.0;        // numerical estimate for this rung
};

struct NernstVerdict {
  std::string model;
  NernstClass classification = NernstClass::Inconclusive;
  double entropy_at_zero = 0.0;  // extrapolated S(z, 0), J/(m^2 K)
  double uncertainty = 0.0;
  double fitted_exponent = 0.0;  // p of S(T) = S0 + a T^p on the smallest rungs
  std::vector<NernstLadderPoint> ladder;
};

const char* to_string(NernstClass c);

/// Compute S on a strictly decreasing temperature ladder, fit the low-T
/// tail S(T) = S0 + a T^p on the three smallest rungs, extrapolate to zero
/// and classify. Requires at least four rungs and a ladder reaching
/// 2 pi kB T z/(hbar c) < 0.05.
NernstVerdict nernst_scan(const PlatePair& pair, double gap,
                          std::span<const double> temperature_ladder,
                          const TruncationPolicy& policy = {});

}  // namespace casimir
