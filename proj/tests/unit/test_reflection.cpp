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
#include <random>

#include "doctest.h"

using namespace casimir;

namespace {
const double c_light = constants.light_speed;

WavenumberPoint point_at(double xi, double k_perp, long l = 1) {
  return make_wavenumber_point(l, xi, k_perp);
}
}  // namespace

TEST_CASE("lifshitz reflection coefficients") {
  const double xi = 3.0e14;
  SUBCASE("vacuum does not reflect") {
    auto r = lifshitz_reflection(1.0, point_at(xi, 2.0e6));
    CHECK(r.r_parallel == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r.r_perpendicular == doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("large eps approaches perfect reflection") {
    auto r = lifshitz_reflection(1e12, point_at(xi, xi / c_light));
    CHECK(r.r_parallel == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(r.r_perpendicular == doctest::Approx(1.0).epsilon(1e-5));
  }
  SUBCASE("eps = 2 at k_perp = xi/c") {
    // q = sqrt(2) xi/c, k = sqrt(3) xi/c: closed forms evaluated directly
    auto r = lifshitz_reflection(2.0, point_at(xi, xi / c_light));
    const double rp = (2.0 * std::sqrt(2.0) - std::sqrt(3.0)) / (2.0 * std::sqrt(2.0) + std::sqrt(3.0));
    const double rt = (std::sqrt(3.0) - std::sqrt(2.0)) / (std::sqrt(3.0) + std::sqrt(2.0));
    CHECK(r.r_parallel == doctest::Approx(rp).epsilon(1e-14));
    CHECK(r.r_perpendicular == doctest::Approx(rt).epsilon(1e-14));
  }
  SUBCASE("zero frequency is rejected") {
    WavenumberPoint p = point_at(xi, 1e6);
    p.matsubara_index = 0;
    p.xi = 0.0;
    CHECK_THROWS_AS((void)lifshitz_reflection(2.0, p), MaterialError);
  }
}

TEST_CASE("impedance reflection coefficients") {
  const double xi = 3.0e14;
  SUBCASE("zero impedance reflects perfectly") {
    auto r = impedance_reflection(0.0, point_at(xi, 5.0e6));
    CHECK(r.r_parallel == 1.0);
    CHECK(r.r_perpendicular == 1.0);
  }
  SUBCASE("unit impedance at normal incidence is vacuum") {
    auto r = impedance_reflection(1.0, point_at(xi, 0.0));
    CHECK(r.r_parallel == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r.r_perpendicular == doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("matches the permittivity form for good conductors") {
    // Z = 1/sqrt(eps). The neglected momentum term is c^2 k^2/(xi^2 eps),
    // so the 1% agreement holds for eps >= 100 once c k_perp <= xi sqrt(eps)/10;
    // at c k_perp = xi sqrt(eps)/3 the TE deviation saturates near 4%
    // independently of eps.
    for (double eps : {100.0, 1e3, 1e5}) {
      for (double frac : {0.1, 0.5, 1.0}) {
        const double k_perp = frac * xi * std::sqrt(eps) / (10.0 * c_light);
        auto p = point_at(xi, k_perp);
        auto leontovich = impedance_reflection(1.0 / std::sqrt(eps), p);
        auto lifshitz = lifshitz_reflection(eps, p);
        CHECK(leontovich.r_parallel == doctest::Approx(lifshitz.r_parallel).epsilon(0.01));
        CHECK(leontovich.r_perpendicular ==
              doctest::Approx(lifshitz.r_perpendicular).epsilon(0.01));
      }
      // O(1/eps) agreement at fixed geometry, c k_perp = xi
      auto p = point_at(xi, xi / c_light);
      auto leontovich = impedance_reflection(1.0 / std::sqrt(eps), p);
      auto lifshitz = lifshitz_reflection(eps, p);
      CHECK(std::abs(leontovich.r_perpendicular - lifshitz.r_perpendicular) <= 5.0 / eps);
      const double saturated = std::abs(
          impedance_reflection(1.0 / std::sqrt(eps),
                               point_at(xi, xi * std::sqrt(eps) / (3.0 * c_light)))
              .r_perpendicular -
          lifshitz_reflection(eps, point_at(xi, xi * std::sqrt(eps) / (3.0 * c_light)))
              .r_perpendicular);
      CHECK(saturated < 0.06);  // bounded but not percent-level
    }
  }
}

TEST_CASE("momentum-dependent impedances recover the permittivity form") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> log_eps(0.1, 25.0);
  std::uniform_real_distribution<double> log_k(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double eps = std::exp(log_eps(rng) * 0.5);
    const double xi = 3.0e14;
    const double k_perp = std::pow(10.0, log_k(rng)) * xi / c_light;
    auto p = point_at(xi, k_perp);
    auto exact = exact_impedance_reflection(1.0 / std::sqrt(eps), eps, p);
    auto direct = lifshitz_reflection(eps, p);
    CHECK(exact.r_parallel == doctest::Approx(direct.r_parallel).epsilon(1e-12));
    CHECK(exact.r_perpendicular == doctest::Approx(direct.r_perpendicular).epsilon(1e-12));
  }
  SUBCASE("normal incidence degenerates to the Leontovich form") {
    auto p = point_at(2.0e14, 0.0);
    auto exact = exact_impedance_reflection(0.3, 11.0, p);
    auto leontovich = impedance_reflection(0.3, p);
    CHECK(exact.r_parallel == doctest::Approx(leontovich.r_parallel).epsilon(1e-15));
    CHECK(exact.r_perpendicular == doctest::Approx(leontovich.r_perpendicular).epsilon(1e-15));
  }
  SUBCASE("eps -> inf gives perfect reflection") {
    auto p = point_at(2.0e14, 3.0e6);
    auto r = exact_impedance_reflection(1e-7, 1e14, p);
    CHECK(r.r_parallel == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(r.r_perpendicular == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("zero-frequency prescriptions") {
  const DrudeParameters gold{1.37e16, 5.32e13, 300.0, 170.0, 0.0};
  SUBCASE("schwinger: ideal metal keeps both channels") {
    auto r = zero_frequency_reflection(ResponseModel::ideal_metal(), 4.0e6);
    CHECK(r.r_parallel == 1.0);
    CHECK(r.r_perpendicular == 1.0);
  }
  SUBCASE("dissipative response loses the transverse-electric channel") {
    for (double k : {0.0, 1e5, 1e7}) {
      auto r = zero_frequency_reflection(ResponseModel::drude(gold, 300.0), k);
      CHECK(r.r_parallel == 1.0);
      CHECK(r.r_perpendicular == 0.0);
    }
  }
  SUBCASE("lossless plasma keeps a momentum-dependent limit") {
    const double wp = gold.plasma_frequency;
    auto model = ResponseModel::plasma(wp);
    CHECK(zero_frequency_reflection(model, 0.0).r_perpendicular == doctest::Approx(1.0));
    const double k = 2.0e7;
    const double s = std::sqrt(c_light * c_light * k * k + wp * wp);
    CHECK(zero_frequency_reflection(model, k).r_perpendicular ==
          doctest::Approx((s - c_light * k) / (s + c_light * k)).epsilon(1e-14));
    // wp -> inf recovers the ideal limit at fixed k_perp
    auto big = ResponseModel::plasma(1e22);
    CHECK(zero_frequency_reflection(big, k).r_perpendicular == doctest::Approx(1.0).epsilon(1e-5));
  }
  SUBCASE("infrared-optics impedance limit") {
    const double wp = gold.plasma_frequency;
    auto model = ResponseModel::impedance_infrared_optics(wp);
    const double k = wp / c_light;  // c k_perp = omega_p: TE channel closes
    auto r = zero_frequency_reflection(model, k);
    CHECK(r.r_parallel == 1.0);
    CHECK(r.r_perpendicular == doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("normal-skin impedance limit reflects perfectly") {
    auto r = zero_frequency_reflection(ResponseModel::impedance_normal_skin(4.1e7), 3.0e6);
    CHECK(r.r_parallel == 1.0);
    CHECK(r.r_perpendicular == 1.0);
  }
}

TEST_CASE("continuity and discontinuity of the xi -> 0 limit") {
  // The lossless plasma reflection is continuous at l = 0; any dissipation
  // makes the transverse-electric channel drop to zero instead.
  const double wp = 1.37e16;
  const double k_perp = 4.0e6;
  auto plasma = ResponseModel::plasma(wp);
  const double plasma_limit = zero_frequency_reflection(plasma, k_perp).r_perpendicular;
  DrudeParameters lossy{wp, 5.32e13, 300.0, 170.0, 0.0};
  auto drude = ResponseModel::drude(lossy, 300.0);

  double plasma_prev_gap = 1e9;
  for (int k = 2; k <= 8; ++k) {
    const double xi = wp * std::pow(10.0, -k);
    auto p = make_wavenumber_point(1, xi, k_perp);
    const double rp = lifshitz_reflection(plasma.permittivity_at(xi).value, p).r_perpendicular;
    const double gap = std::abs(rp - plasma_limit);
    CHECK(gap <= plasma_prev_gap + 1e-12);
    plasma_prev_gap = gap;
  }
  CHECK(plasma_prev_gap < 1e-10);

  const double xi_small = wp * 1e-8;
  auto p = make_wavenumber_point(1, xi_small, k_perp);
  const double rd = lifshitz_reflection(drude.permittivity_at(xi_small).value, p).r_perpendicular;
  CHECK(std::abs(rd) < 1e-3);          // heads to zero, not to the plasma value
  CHECK(plasma_limit > 0.8);           // which stays order one at this momentum
}

TEST_CASE("passivity on a sampled grid") {
  const DrudeParameters gold{1.37e16, 5.32e13, 300.0, 170.0, 0.0};
  auto drude = ResponseModel::drude(gold, 300.0);
  auto io = ResponseModel::impedance_infrared_optics(gold.plasma_frequency);
  for (double xi = 1e13; xi <= 1e16; xi *= 4.2) {
    for (double k = 1e4; k <= 1e9; k *= 13.0) {
      auto p = make_wavenumber_point(1, xi, k);
      for (auto scheme : {ReflectionScheme::LifshitzPermittivity,
                          ReflectionScheme::LeontovichImpedance, ReflectionScheme::ExactImpedance}) {
        for (const auto& model : {drude, io}) {
          auto r = reflect(evaluate_response(model, xi), scheme, p);
          CHECK(std::abs(r.r_parallel) <= 1.0);
          CHECK(std::abs(r.r_perpendicular) <= 1.0);
        }
      }
    }
  }
}

TEST_CASE("wavenumber ordering") {
  // q >= k_perp, q >= xi/c, and the in-medium wavenumber dominates q for
  // eps >= 1, on a sampled lattice
  for (double xi = 1e12; xi <= 1e16; xi *= 40.0) {
    for (double k = 0.0; k <= 1e8; k = k == 0.0 ? 1e3 : k * 300.0) {
      auto p = make_wavenumber_point(2, xi, k);
      CHECK(p.q >= k);
      CHECK(p.q >= xi / c_light);
      for (double eps : {1.0, 1.7, 300.0, 2.4e5}) CHECK(p.medium_wavenumber(eps) >= p.q);
    }
  }
  CHECK_THROWS_AS(make_wavenumber_point(-2, 1e14, 1e5), MaterialError);
  CHECK_THROWS_AS(make_wavenumber_point(1, 1e14, -1e5), MaterialError);
}

TEST_CASE("scheme support") {
  auto skin = ResponseModel::impedance_normal_skin(4.1e7);
  CHECK(supports_scheme(skin, ReflectionScheme::LeontovichImpedance));
  CHECK_FALSE(supports_scheme(skin, ReflectionScheme::LifshitzPermittivity));
  CHECK_FALSE(supports_scheme(skin, ReflectionScheme::ExactImpedance));
  CHECK(supports_scheme(ResponseModel::ideal_metal(), ReflectionScheme::LifshitzPermittivity));
}
