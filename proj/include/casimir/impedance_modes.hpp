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
#include <vector>

namespace casimir {

/// One point of the mode analysis, evaluated on the imaginary axis
/// omega = i xi where the dispersion functions are real and pole-free.
struct ModePoint {
  double xi = 0.0;      // rad/s
  double k_perp = 0.0;  // 1/m
  double gap = 0.0;     // m

  double q() const;  // sqrt(k_perp^2 + xi^2/c^2), real and positive
};

struct DispersionPair {
  double parallel = 0.0;
  double perpendicular = 0.0;
};

/// Dispersion functions of the two-semispace photon modes with
/// polarization-dependent impedances Z_par, Z_perp. On the imaginary axis,
/// with h = xi Z_par/(c q) and g = c q Z_perp/xi,
///   Delta_par  = e^{-qz} [(1 + h^2) sinh(qz) + 2 h cosh(qz)],
///   Delta_perp = e^{-qz} [(1 + g^2) sinh(qz) + 2 g cosh(qz)].
/// The real-axis poles at h^2 = -1 cannot occur here.
DispersionPair dispersion_exact(const ModePoint& point, double z_parallel, double z_perpendicular);

/// Same dispersion functions with a single Leontovich impedance; coincides
/// with dispersion_exact when Z_par = Z_perp = Z.
DispersionPair dispersion_leontovich(const ModePoint& point, double impedance);

struct EquivalenceRow {
  double omega = 0.0;            // rad/s (imaginary-axis magnitude)
  double z_par_ratio = 0.0;      // |Z_par/Z - 1|
  double z_perp_ratio = 0.0;     // |Z_perp/Z - 1|
  double delta_par_ratio = 0.0;  // |Delta_exact/Delta_leontovich - 1|, TM
  double delta_perp_ratio = 0.0; // same, TE
};

/// Walk a descending frequency ladder along the dispersion-consistent path
/// c k_perp = slope * omega for the free-electron response
/// eps = 1 + wp^2/xi^2. The momentum correction inside the impedances is
/// slope^2/eps, so every reported ratio must fall off as omega^2.
std::vector<EquivalenceRow> equivalence_scan(double plasma_frequency, double gap,
                                             double path_slope,
                                             std::span<const double> omega_ladder);

/// Same walk with k_perp pinned while omega -> 0. On this path the
/// transverse-electric impedance correction survives the limit, so the TE
/// ratios converge to a nonzero constant instead of vanishing.
std::vector<EquivalenceRow> fixed_momentum_scan(double plasma_frequency, double gap,
                                                double k_perp,
                                                std::span<const double> omega_ladder);

/// Least-squares slope of log(ratio) against log(omega); the decay exponent
/// of a scan column.
double fitted_decay_exponent(std::span<const EquivalenceRow> rows,
                             double EquivalenceRow::*column);

}  // namespace casimir
