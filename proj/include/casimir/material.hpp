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

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

#include "casimir/constants.hpp"

namespace casimir {

class OpticalTable;

struct MaterialError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Free-electron parameters of a metal. The relaxation rate is pinned to a
/// reference value at a reference temperature and follows the
/// Bloch-Grueneisen law elsewhere; residual_relaxation = 0 describes a
/// perfect lattice with no defects or impurities.
struct DrudeParameters {
  double plasma_frequency = 0.0;       // rad/s
  double reference_relaxation = 0.0;   // rad/s, at reference_temperature
  double reference_temperature = 300;  // K
  double debye_temperature = 170.0;    // K
  double residual_relaxation = 0.0;    // rad/s

  void validate() const;
};

/// Electron-phonon relaxation rate gamma(T) in rad/s: residual relaxation
/// plus a Bloch-Grueneisen term (n = 5 exponent) normalized so that
/// gamma(reference_temperature) equals reference_relaxation. Vanishes as
/// T^5 when the residual part is zero.
double relaxation_at(const DrudeParameters& params, double temperature);

/// Dimensionless Bloch-Grueneisen shape (T/Theta)^5 * integral; exposed for
/// testing the low-temperature T^5 behavior.
double bloch_grueneisen_shape(double temperature, double debye_temperature);

/// Permittivity on the imaginary frequency axis. An ideal metal is reported
/// through the marker rather than as a large float, so the zero-frequency
/// prescription can be applied structurally.
struct Permittivity {
  bool infinite = false;
  double value = 1.0;  // valid only when !infinite
};

/// Which analytic limit supplies the l = 0 reflection coefficients.
enum class ZeroFrequencyRule {
  SchwingerLimit,   // eps -> inf first, l = 0 afterwards: (1, 1)
  DrudeLimit,       // (1, 0)
  PlasmaLimit,      // (1, (sqrt(c^2 k^2 + wp^2) - c k)/(sqrt(...) + c k))
  ImpedanceLimit,   // from the impedance of the relevant frequency region
};

namespace model {

struct IdealMetal {};

struct Plasma {
  double plasma_frequency;
};

struct Drude {
  DrudeParameters params;
  double temperature;
  double relaxation;  // gamma(temperature), cached at construction
};

struct Tabulated {
  std::shared_ptr<const OpticalTable> table;
  double temperature;
  ZeroFrequencyRule rule;
};

/// Impedance of the normal skin effect, Z(i xi) = sqrt(eps0 xi / sigma).
/// Permittivity is deliberately not exposed for this variant.
struct NormalSkin {
  double dc_conductivity;  // S/m
};

/// Impedance of the infrared-optics region, Z(i xi) = xi/sqrt(xi^2 + wp^2).
struct InfraredOptics {
  double plasma_frequency;
};

}  // namespace model

/// A metal's electromagnetic response on the imaginary frequency axis:
/// permittivity and/or surface impedance, plus exactly one zero-frequency
/// prescription. All evaluations are pure; instances are cheap to copy.
class ResponseModel {
 public:
  using Variant = std::variant<model::IdealMetal, model::Plasma, model::Drude,
                               model::Tabulated, model::NormalSkin, model::InfraredOptics>;

  static ResponseModel ideal_metal();
  static ResponseModel plasma(double plasma_frequency);
  static ResponseModel drude(const DrudeParameters& params, double temperature);
  static ResponseModel tabulated(std::shared_ptr<const OpticalTable> table, double temperature,
                                 ZeroFrequencyRule rule = ZeroFrequencyRule::DrudeLimit);
  static ResponseModel impedance_normal_skin(double dc_conductivity);
  static ResponseModel impedance_infrared_optics(double plasma_frequency);

  /// eps(i xi) for xi > 0. Throws MaterialError for impedance-only variants;
  /// the l = 0 value is never obtained through this path.
  Permittivity permittivity_at(double xi) const;

  /// Z(i xi) for xi > 0; exactly 0 for an ideal metal.
  double impedance_at(double xi) const;

  ZeroFrequencyRule zero_frequency_rule() const;

  /// Plasma frequency entering the zero-frequency reflection limits
  /// (plasma/infrared-optics rules); throws if the variant has none.
  double limit_plasma_frequency() const;

  /// Rebind temperature-dependent variants (Drude relaxation, tabulated
  /// tail) to a new temperature; other variants are returned unchanged.
  ResponseModel at_temperature(double temperature) const;

  bool is_ideal() const;
  bool has_permittivity() const;

  std::string describe() const;

  const Variant& raw() const { return v_; }

 private:
  explicit ResponseModel(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

}  // namespace casimir
