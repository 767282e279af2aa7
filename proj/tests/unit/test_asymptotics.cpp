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

#include "doctest.h"

using namespace casimir;

namespace {
const DrudeParameters gold{1.37e16, 5.32e13, 300.0, 170.0, 0.0};
const double kB = constants.boltzmann;
}  // namespace

TEST_CASE("residual entropy integral of the dissipative perfect lattice") {
  const double z = 1e-6;
  SUBCASE("frozen quadrature value at ratio 20") {
    CHECK(nernst_entropy_drude({20.0}, z) ==
          doctest::Approx(-2.2951017176008475e-13).epsilon(1e-9));
  }
  SUBCASE("strictly negative for every finite ratio") {
    for (double ratio : {0.1, 1.0, 20.0, 91.0, 500.0})
      CHECK(nernst_entropy_drude({ratio}, z) < 0.0);
  }
  SUBCASE("vanishes as the ratio goes to zero") {
    CHECK(std::abs(nernst_entropy_drude({1e-5}, z)) < 1e-21);
  }
  SUBCASE("monotone decreasing in the ratio: better conductors lose more") {
    double prev = 0.0;
    for (double ratio : {0.5, 2.0, 8.0, 32.0, 128.0}) {
      const double s = nernst_entropy_drude({ratio}, z);
      CHECK(s < prev);
      prev = s;
    }
  }
}

TEST_CASE("classical free energies") {
  const double z = 10e-6, T = 300.0;
  const double ideal = classical_free_energy(MetalClass::IdealMetal, z, T);
  const double drude = classical_free_energy(MetalClass::DrudeClass, z, T);
  // only the parallel channel survives dissipation: exactly half
  CHECK(drude / ideal == 0.5);
  CHECK(drude == doctest::Approx(-zeta3 * kB * T / (16.0 * pi * z * z)).epsilon(1e-15));
  CHECK(drude == doctest::Approx(-9.905119259696985e-13).epsilon(1e-12));  // frozen
  // 1/z^2 law
  CHECK(classical_free_energy(MetalClass::IdealMetal, 2.0 * z, T) / ideal ==
        doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("ideal-metal zero-temperature closed forms") {
  const auto at_1um = ideal_metal_zero_T(1e-6);
  CHECK(at_1um.pressure == doctest::Approx(-1.3001257724477536e-3).epsilon(1e-12));
  const auto at_half = ideal_metal_zero_T(0.5e-6);
  CHECK(at_half.pressure / at_1um.pressure == doctest::Approx(16.0).epsilon(1e-13));
  CHECK(at_1um.pressure == doctest::Approx(3.0 * at_1um.energy / 1e-6).epsilon(1e-13));
}

TEST_CASE("frequency ratio construction") {
  auto r = FrequencyRatio::from_plasma(gold.plasma_frequency, 1e-6);
  CHECK(r.value == doctest::Approx(gold.plasma_frequency * 2e-6 / constants.light_speed));
  CHECK_THROWS_AS(FrequencyRatio::from_plasma(-1.0, 1e-6), EngineError);
}

TEST_CASE("nernst scans" * doctest::timeout(240)) {
  const double z = 1e-6;
  TruncationPolicy policy;
  policy.quad_rel_tol = 1e-11;
  policy.tail_rel_tol = 1e-11;
  const std::vector<double> ladder{16.0, 8.0, 4.0, 2.0};

  SUBCASE("lossless plasma satisfies the heat theorem") {
    auto verdict = nernst_scan(PlatePair::identical(ResponseModel::plasma(gold.plasma_frequency)),
                               z, ladder, policy);
    CHECK(verdict.classification == NernstClass::ConsistentZero);
  }

  SUBCASE("perfect-lattice dissipation violates it with the predicted limit") {
    auto verdict =
        nernst_scan(PlatePair::identical(ResponseModel::drude(gold, 300.0)), z, ladder, policy);
    CHECK(verdict.classification == NernstClass::NegativeViolation);
    const double exact =
        nernst_entropy_drude(FrequencyRatio::from_plasma(gold.plasma_frequency, z), z);
    CHECK(verdict.entropy_at_zero == doctest::Approx(exact).epsilon(1e-3));
    CHECK(verdict.entropy_at_zero < 0.0);
  }

  SUBCASE("surface-impedance description stays consistent") {
    auto model = ResponseModel::impedance_infrared_optics(gold.plasma_frequency);
    auto verdict = nernst_scan(PlatePair::identical(model, ReflectionScheme::LeontovichImpedance),
                               z, ladder, policy);
    CHECK(verdict.classification == NernstClass::ConsistentZero);
  }

  SUBCASE("residual relaxation restores the zero limit") {
    // A weak conductor pulls the entropy recovery up to reachable
    // temperatures; for good metals it happens at millikelvin scales.
    const double omega_c = constants.light_speed / (2.0 * z);
    DrudeParameters weak{3.0 * omega_c, 5.32e13, 300.0, 170.0, 5.32e13};
    auto pair = PlatePair::identical(ResponseModel::drude(weak, 300.0));
    const std::vector<double> deep_ladder{4.0, 2.0, 1.0, 0.5, 0.25, 0.125};
    auto verdict = nernst_scan(pair, z, deep_ladder, policy);
    CHECK(verdict.classification == NernstClass::ConsistentZero);
    // the ladder itself sits on the negative plateau
    CHECK(verdict.ladder.front().entropy < 0.0);
  }

  SUBCASE("short ladders are inconclusive") {
    auto verdict = nernst_scan(PlatePair::identical(ResponseModel::plasma(gold.plasma_frequency)),
                               z, std::vector<double>{8.0, 4.0, 2.0}, policy);
    CHECK(verdict.classification == NernstClass::Inconclusive);
  }

  SUBCASE("ladder preconditions") {
    const std::vector<double> shuffled{4.0, 8.0, 2.0, 1.0};
    const std::vector<double> too_warm{300.0, 200.0, 100.0, 50.0};
    auto pair = PlatePair::identical(ResponseModel::plasma(1e16));
    CHECK_THROWS_AS(nernst_scan(pair, z, shuffled, policy), EngineError);
    // lowest rung too warm: 2 pi kB T z/(hbar c) must drop below 0.05
    CHECK_THROWS_AS(nernst_scan(pair, z, too_warm, policy), EngineError);
  }
}
