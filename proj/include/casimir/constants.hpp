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

namespace casimir {

/// Fundamental constants in SI units (CODATA 2018 exact values).
struct PhysicalConstants {
  double boltzmann;            // J/K
  double reduced_planck;       // J s
  double light_speed;          // m/s
  double vacuum_permittivity;  // F/m
};

inline constexpr PhysicalConstants constants{
    1.380649e-23,
    1.054571817e-34,
    2.99792458e8,
    8.8541878128e-12,
};

static_assert(constants.boltzmann > 0.0);
static_assert(constants.reduced_planck > 0.0);
static_assert(constants.light_speed > 0.0);
static_assert(constants.vacuum_permittivity > 0.0);

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double zeta3 = 1.2020569031595942854;

}  // namespace casimir
