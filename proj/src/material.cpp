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

#include "casimir/material.hpp"

#include <cmath>
#include <sstream>

#include "casimir/optical_data.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

void DrudeParameters::validate() const {
  if (!(plasma_frequency > 0.0)) throw MaterialError("plasma_frequency must be > 0");
  if (!(reference_relaxation > 0.0)) throw MaterialError("reference_relaxation must be > 0");
  if (!(reference_temperature > 0.0)) throw MaterialError("reference_temperature must be > 0");
  if (!(debye_temperature > 0.0)) throw MaterialError("debye_temperature must be > 0");
  if (residual_relaxation < 0.0) throw MaterialError("residual_relaxation must be >= 0");
}

double bloch_grueneisen_shape(double temperature, double debye_temperature) {
  if (temperature <= 0.0) return 0.0;
  const double upper = std::min(debye_temperature / temperature, 60.0);
  auto integrand = [](double x) {
    if (x < 1e-12) return x * x * x;
    const double u = -std::expm1(-x);  // 1 - e^-x
    return std::pow(x, 5) * std::exp(-x) / (u * u);
  };
  auto r = integrate_adaptive(integrand, 0.0, upper, 1e-12);
  return std::pow(temperature / debye_temperature, 5) * r.value;
}

double relaxation_at(const DrudeParameters& params, double temperature) {
  params.validate();
  if (temperature < 0.0) throw MaterialError("temperature must be >= 0");
  const double g0 = params.residual_relaxation;
  if (temperature == 0.0) return g0;
  const double ref_shape = bloch_grueneisen_shape(params.reference_temperature, params.debye_temperature);
  const double shape = bloch_grueneisen_shape(temperature, params.debye_temperature);
  return g0 + (params.reference_relaxation - g0) * shape / ref_shape;
}

ResponseModel ResponseModel::ideal_metal() { return ResponseModel{model::IdealMetal{}}; }

ResponseModel ResponseModel::plasma(double plasma_frequency) {
  if (!(plasma_frequency > 0.0)) throw MaterialError("plasma_frequency must be > 0");
  return ResponseModel{model::Plasma{plasma_frequency}};
}

ResponseModel ResponseModel::drude(const DrudeParameters& params, double temperature) {
  params.validate();
  return ResponseModel{model::Drude{params, temperature, relaxation_at(params, temperature)}};
}

ResponseModel ResponseModel::tabulated(std::shared_ptr<const OpticalTable> table, double temperature,
                                       ZeroFrequencyRule rule) {
  if (!table) throw MaterialError("tabulated model requires a table");
  if (rule == ZeroFrequencyRule::SchwingerLimit)
    throw MaterialError("the Schwinger prescription applies to ideal metals only");
  return ResponseModel{model::Tabulated{std::move(table), temperature, rule}};
}

ResponseModel ResponseModel::impedance_normal_skin(double dc_conductivity) {
  if (!(dc_conductivity > 0.0)) throw MaterialError("dc_conductivity must be > 0");
  return ResponseModel{model::NormalSkin{dc_conductivity}};
}

ResponseModel ResponseModel::impedance_infrared_optics(double plasma_frequency) {
  if (!(plasma_frequency > 0.0)) throw MaterialError("plasma_frequency must be > 0");
  return ResponseModel{model::InfraredOptics{plasma_frequency}};
}

Permittivity ResponseModel::permittivity_at(double xi) const {
  if (!(xi > 0.0)) throw MaterialError("permittivity_at requires xi > 0");
  return std::visit(
      [xi](const auto& m) -> Permittivity {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, model::IdealMetal>) {
          return {true, 0.0};
        } else if constexpr (std::is_same_v<T, model::Plasma>) {
          const double w = m.plasma_frequency;
          return {false, 1.0 + w * w / (xi * xi)};
        } else if constexpr (std::is_same_v<T, model::Drude>) {
          const double w = m.params.plasma_frequency;
          return {false, 1.0 + w * w / (xi * (xi + m.relaxation))};
        } else if constexpr (std::is_same_v<T, model::Tabulated>) {
          return {false, kk_to_imaginary_axis(*m.table, xi, m.temperature)};
        } else if constexpr (std::is_same_v<T, model::InfraredOptics>) {
          const double w = m.plasma_frequency;
          return {false, 1.0 + w * w / (xi * xi)};
        } else {
          throw MaterialError("permittivity undefined for this variant");
        }
      },
      v_);
}

double ResponseModel::impedance_at(double xi) const {
  if (!(xi > 0.0)) throw MaterialError("impedance_at requires xi > 0");
  if (std::holds_alternative<model::IdealMetal>(v_)) return 0.0;
  if (const auto* ns = std::get_if<model::NormalSkin>(&v_))
    return std::sqrt(constants.vacuum_permittivity * xi / ns->dc_conductivity);
  if (const auto* io = std::get_if<model::InfraredOptics>(&v_)) {
    const double w = io->plasma_frequency;
    return xi / std::sqrt(xi * xi + w * w);
  }
  return 1.0 / std::sqrt(permittivity_at(xi).value);
}

ZeroFrequencyRule ResponseModel::zero_frequency_rule() const {
  return std::visit(
      [](const auto& m) -> ZeroFrequencyRule {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, model::IdealMetal>)
          return ZeroFrequencyRule::SchwingerLimit;
        else if constexpr (std::is_same_v<T, model::Plasma>)
          return ZeroFrequencyRule::PlasmaLimit;
        else if constexpr (std::is_same_v<T, model::Drude>)
          return ZeroFrequencyRule::DrudeLimit;
        else if constexpr (std::is_same_v<T, model::Tabulated>)
          return m.rule;
        else
          return ZeroFrequencyRule::ImpedanceLimit;
      },
      v_);
}

double ResponseModel::limit_plasma_frequency() const {
  if (const auto* p = std::get_if<model::Plasma>(&v_)) return p->plasma_frequency;
  if (const auto* io = std::get_if<model::InfraredOptics>(&v_)) return io->plasma_frequency;
  if (const auto* t = std::get_if<model::Tabulated>(&v_)) return t->table->tail().plasma_frequency;
  if (const auto* d = std::get_if<model::Drude>(&v_)) return d->params.plasma_frequency;
  throw MaterialError("model has no plasma frequency");
}

ResponseModel ResponseModel::at_temperature(double temperature) const {
  if (const auto* d = std::get_if<model::Drude>(&v_)) return drude(d->params, temperature);
  if (const auto* t = std::get_if<model::Tabulated>(&v_))
    return tabulated(t->table, temperature, t->rule);
  return *this;
}

bool ResponseModel::is_ideal() const { return std::holds_alternative<model::IdealMetal>(v_); }

bool ResponseModel::has_permittivity() const {
  return !std::holds_alternative<model::NormalSkin>(v_) &&
         !std::holds_alternative<model::IdealMetal>(v_);
}

std::string ResponseModel::describe() const {
  std::ostringstream out;
  out.precision(10);
  std::visit(
      [&out](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, model::IdealMetal>) {
          out << "ideal";
        } else if constexpr (std::is_same_v<T, model::Plasma>) {
          out << "plasma omega_p=" << m.plasma_frequency;
        } else if constexpr (std::is_same_v<T, model::Drude>) {
          out << "drude omega_p=" << m.params.plasma_frequency
              << " gamma_ref=" << m.params.reference_relaxation
              << " t_ref=" << m.params.reference_temperature
              << " theta_debye=" << m.params.debye_temperature
              << " gamma0=" << m.params.residual_relaxation << " T=" << m.temperature;
        } else if constexpr (std::is_same_v<T, model::Tabulated>) {
          out << "tabulated rows=" << m.table->omega().size() << " T=" << m.temperature
              << " source=" << m.table->provenance();
        } else if constexpr (std::is_same_v<T, model::NormalSkin>) {
          out << "normal-skin sigma=" << m.dc_conductivity;
        } else {
          out << "infrared-optics omega_p=" << m.plasma_frequency;
        }
      },
      v_);
  return out.str();
}

}  // namespace casimir
