// Copyright 2026 The gkcodes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gkcodes/gk_curve.hpp"

using namespace gkcodes;

namespace {

// every (a, b, c) over the field satisfying both equations, by direct search
std::vector<CurvePoint> brute_force_points(const FieldTower& f) {
  const auto q = static_cast<std::int64_t>(f.q());
  std::vector<CurvePoint> out;
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    for (std::uint32_t b = 0; b < f.size(); ++b) {
      if (f.pow(Fe{b}, q + 1) != f.add(f.pow(Fe{a}, q), Fe{a})) continue;
      const Fe rhs = f.sub(f.pow(Fe{b}, q * q), Fe{b});
      for (std::uint32_t c = 0; c < f.size(); ++c) {
        if (f.pow(Fe{c}, q * q - q + 1) == rhs) out.push_back(CurvePoint::affine(Fe{a}, Fe{b}, Fe{c}));
      }
    }
  }
  out.push_back(CurvePoint::at_infinity());
  return out;
}

}  // namespace

TEST_CASE("q=2 point table equals a brute-force enumeration, in order") {
  const FieldTower f = FieldTower::make(2, 1);
  const CurveTable curve(f);
  const auto brute = brute_force_points(f);
  REQUIRE(curve.size() == brute.size());
  for (std::size_t i = 0; i < brute.size(); ++i) CHECK(curve.points()[i] == brute[i]);
  CHECK(curve.size() == 225);
  CHECK(curve.genus() == 10);
  CHECK(curve.is_infinity(Place{224}));
  CHECK(curve.point(curve.origin()) == CurvePoint::affine(f.zero(), f.zero(), f.zero()));
}

TEST_CASE("q=2 orbits, planes and Gamma_0") {
  const FieldTower f = FieldTower::make(2, 1);
  const CurveTable curve(f);
  CHECK(curve.orbit1().size() == 9);
  CHECK(curve.orbit2().size() == 216);
  CHECK(curve.orbit1().back() == curve.infinity());
  for (Place p : curve.orbit1()) {
    if (curve.is_infinity(p)) continue;
    const CurvePoint& pt = curve.point(p);
    // O1 consists of the F_4-rational points
    CHECK(f.in_subfield(pt.x, 2));
    CHECK(f.in_subfield(pt.y, 2));
    CHECK(pt.z == f.zero());
  }
  CHECK(curve.full_x_abscissas().size() == 24);
  std::set<Place> covered;
  for (Fe a : curve.full_x_abscissas()) {
    for (Place p : curve.plane_section_x(a)) covered.insert(p);
  }
  CHECK(covered.size() == 216);

  CHECK(curve.gamma0().size() == 28);
  CHECK(curve.gamma0_by_polynomial() == curve.gamma0_by_fibers());
  std::size_t total = 0;
  for (Fe c : curve.gamma0()) {
    CHECK(curve.plane_section_z(c).size() == 8);
    total += curve.plane_section_z(c).size();
  }
  CHECK(total == 224);
  // z-coordinates of affine points lie in Gamma_0
  for (std::uint32_t i = 0; i + 1 < curve.size(); ++i) CHECK(curve.in_gamma0(curve.point(Place{i}).z));
  CHECK_FALSE(curve.in_gamma0(f.one()));
}

TEST_CASE("lookup") {
  const FieldTower f = FieldTower::make(2, 1);
  const CurveTable curve(f);
  for (std::uint32_t i = 0; i < curve.size(); ++i) CHECK(curve.index_of(curve.point(Place{i})) == Place{i});
  CHECK_FALSE(curve.find(CurvePoint::affine(f.one(), f.one(), f.zero())).has_value());
  CHECK_THROWS_AS(curve.index_of(CurvePoint::affine(f.one(), f.one(), f.zero())), Error);
  CHECK_FALSE(is_on_curve(f, CurvePoint::affine(f.one(), f.one(), f.zero())));
  CHECK(is_on_curve(f, CurvePoint::at_infinity()));
}

TEST_CASE("q=3 counts match maximality") {
  const FieldTower f = FieldTower::make(3, 1);
  const CurveTable curve(f);
  const std::int64_t q = 3, q3 = 27;
  const std::int64_t g = (q3 + 1) * (q * q - 2) / 2 + 1;
  CHECK(curve.genus() == g);
  CHECK(static_cast<std::int64_t>(curve.size()) == q3 * q3 + 1 + 2 * g * q3);
  CHECK(curve.size() == 6076);
  CHECK(curve.orbit1().size() == 28);
  CHECK(curve.full_x_abscissas().size() == 243 - 27);
  CHECK(curve.gamma0().size() == 243 - 27 + 9);
  for (const auto& pt : curve.points()) REQUIRE(is_on_curve(f, pt));
}
