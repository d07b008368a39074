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

#include "gkcodes/divisors.hpp"

using namespace gkcodes;

namespace {

struct Fixture {
  FieldTower f = FieldTower::make(2, 1);
  CurveTable curve{f};
  FunctionField ff{curve};
};

const Fixture& fixture() {
  static const Fixture fx;
  return fx;
}

Fe trace(const FieldTower& f, Fe a) { return f.add(f.pow(a, 2), a); }

}  // namespace

TEST_CASE("divisor arithmetic") {
  const Place a{1}, b{2};
  Divisor d = Divisor::single(a, 3) + Divisor::single(b, -1);
  CHECK(d.degree() == 2);
  CHECK(d.weight(a) == 3);
  CHECK_FALSE(d.is_effective());
  d -= Divisor::single(b, -1);
  CHECK(d.is_effective());
  CHECK(d.support() == std::vector<Place>{a});
  CHECK((2 * d).weight(a) == 6);
  d.add(a, -3);
  CHECK(d.empty());
  const std::vector<Place> pts{a, b};
  CHECK(Divisor::sum_of(pts, 2).degree() == 4);
}

TEST_CASE("coordinate divisors") {
  const auto& [f, curve, ff] = fixture();
  CHECK(ff.principal_divisor(ff.x()) ==
        Divisor::single(curve.origin(), 9) - Divisor::single(curve.infinity(), 9));
  Divisor dy = Divisor::single(curve.infinity(), -6);
  Divisor dz = Divisor::single(curve.infinity(), -8);
  for (std::uint32_t i = 0; i + 1 < curve.size(); ++i) {
    if (curve.point(Place{i}).y == f.zero()) dy.add(Place{i}, 3);
    if (curve.point(Place{i}).z == f.zero()) dz.add(Place{i}, 1);
  }
  CHECK(ff.principal_divisor(ff.y()) == dy);
  CHECK(ff.principal_divisor(ff.z()) == dz);
  // x / z^2 has valuation -9 + 16 = 7 at infinity
  const FunctionExpr x_over_z2 = FunctionExpr::of(ff.x()) * FunctionExpr::of(ff.z(), -2);
  CHECK(ff.valuation(x_over_z2, curve.infinity()) == 7);
  CHECK(ff.valuation(FunctionExpr::of(ff.x(), -9), curve.infinity()) == 81);
}

TEST_CASE("x - alpha in its three cases") {
  const auto& [f, curve, ff] = fixture();
  int full = 0, ramified = 0, trace_zero = 0;
  for (std::uint32_t i = 0; i < f.size(); ++i) {
    const Fe alpha{i};
    Atom a;
    try {
      a = ff.x_minus(alpha);
    } catch (const Error&) {
      continue;
    }
    const Divisor d = ff.principal_divisor(a);
    CHECK(d.degree() == 0);
    CHECK(d.weight(curve.infinity()) == -9);
    const auto fiber = curve.plane_section_x(alpha);
    if (!f.in_subfield(alpha, 2)) {
      CHECK(fiber.size() == 9);
      for (Place p : fiber) CHECK(d.weight(p) == 1);
      ++full;
    } else if (trace(f, alpha) != f.zero()) {
      for (Place p : fiber) CHECK(d.weight(p) == 3);
      ++ramified;
    } else {
      CHECK(fiber.size() == 1);
      CHECK(d.weight(fiber[0]) == 9);
      ++trace_zero;
    }
    // series valuations agree with the table on the fiber and at infinity
    for (const auto& [p, w] : d.weights()) {
      const auto v = series::valuation(ff.atom_series(a, p, 2));
      REQUIRE(v.has_value());
      CHECK(*v == w);
    }
  }
  CHECK(full == 24);
  CHECK(ramified == 2);
  CHECK(trace_zero == 2);
}

TEST_CASE("z - c and tangent atoms") {
  const auto& [f, curve, ff] = fixture();
  for (Fe c : curve.gamma0()) {
    const Divisor d = ff.principal_divisor(ff.z_minus(c));
    CHECK(d.degree() == 0);
    CHECK(d.weight(curve.infinity()) == -8);
    for (Place p : curve.plane_section_z(c)) CHECK(d.weight(p) == 1);
  }
  CHECK(ff.z_minus(f.zero()) == ff.z());
  CHECK_THROWS_AS(ff.z_minus(f.one()), Error);
  for (Place p : curve.orbit1()) {
    if (curve.is_infinity(p)) {
      CHECK_THROWS_AS(ff.tangent(p), Error);
      continue;
    }
    const Atom t = ff.tangent(p);
    const Divisor expect = Divisor::single(p, 9) - Divisor::single(curve.infinity(), 9);
    CHECK(ff.principal_divisor(t) == expect);
    const auto v = series::valuation(ff.atom_series(t, p, 2));
    REQUIRE(v.has_value());
    CHECK(*v == 9);
    // the tangent form evaluated by hand: x - b^q y + a^q
    const CurvePoint& tp = curve.point(p);
    for (std::uint32_t i = 0; i + 1 < curve.size(); ++i) {
      const CurvePoint& pt = curve.point(Place{i});
      const Fe direct = f.add(f.sub(pt.x, f.mul(f.pow(tp.y, 2), pt.y)), f.pow(tp.x, 2));
      REQUIRE(ff.atom_value(t, Place{i}) == direct);
    }
  }
  CHECK_THROWS_AS(ff.tangent(Place{50}), Error);
}

TEST_CASE("local expansions satisfy the curve equations") {
  const auto& [f, curve, ff] = fixture();
  const int prec = 12;
  for (std::uint32_t i = 0; i + 1 < curve.size(); ++i) {
    const Place p{i};
    const auto xyz = ff.coordinate_series(p, prec);
    const auto& [x, y, z] = xyz;
    // z = c + t exactly
    CHECK(z.coefficient(0) == curve.point(p).z);
    CHECK(z.coefficient(1) == f.one());
    for (int j = 2; j < std::min(z.precision(), prec); ++j) CHECK(z.coefficient(j) == f.zero());
    const Laurent r1 = series::sub(f, series::pow(f, y, 3), series::add(f, series::pow(f, x, 2), x));
    const Laurent r2 = series::sub(f, series::pow(f, z, 3), series::sub(f, series::pow(f, y, 4), y));
    for (int j = 0; j < prec; ++j) {
      REQUIRE(r1.coefficient(j) == f.zero());
      REQUIRE(r2.coefficient(j) == f.zero());
    }
  }
  // z/x is a local parameter at infinity
  const auto inf = ff.coordinate_series(curve.infinity(), prec);
  const Laurent param = series::normalize(series::mul(f, inf[2], series::inverse(f, inf[0])));
  CHECK(series::valuation(param) == std::optional<int>(1));
  CHECK(param.coefficient(1) == f.one());
}

TEST_CASE("evaluation") {
  const auto& [f, curve, ff] = fixture();
  CHECK(ff.evaluate(FunctionExpr::constant(f.one()), Place{7}) == f.one());
  CHECK(ff.evaluate(FunctionExpr::of(ff.x()), curve.origin()) == f.zero());
  // termwise evaluation against arithmetic on the coordinates
  const Fe alpha = curve.full_x_abscissas().front();
  FunctionExpr fn = FunctionExpr::of(ff.x_minus(alpha)) * FunctionExpr::of(ff.y(), 2) * FunctionExpr::of(ff.z(), -1);
  fn.scalar = f.generator();
  for (std::uint32_t i = 0; i + 1 < curve.size(); ++i) {
    const CurvePoint& pt = curve.point(Place{i});
    if (pt.z == f.zero()) continue;
    const Fe direct = f.mul(f.generator(), f.div(f.mul(f.sub(pt.x, alpha), f.pow(pt.y, 2)), pt.z));
    REQUIRE(ff.evaluate(fn, Place{i}) == direct);
    REQUIRE(ff.evaluate_by_series(FunctionSum(fn), Place{i}) == direct);
  }
  // sums evaluate termwise
  FunctionSum sum;
  sum.terms = {FunctionExpr::of(ff.x()), FunctionExpr::of(ff.y())};
  for (std::uint32_t i = 0; i + 1 < curve.size(); ++i) {
    const CurvePoint& pt = curve.point(Place{i});
    REQUIRE(ff.evaluate(sum, Place{i}) == f.add(pt.x, pt.y));
  }
  CHECK_THROWS_AS(ff.evaluate(FunctionExpr::of(ff.z(), -1), curve.origin()), Error);
}

TEST_CASE("leading coefficients") {
  const auto& [f, curve, ff] = fixture();
  const FunctionSum inv_z = FunctionExpr::of(ff.z(), -1);
  for (Place p : curve.orbit1()) {
    if (!curve.is_infinity(p)) CHECK(ff.leading_coefficient(inv_z, p, 1) == f.one());
  }
  const FunctionSum x_over_z2 = FunctionExpr::of(ff.x()) * FunctionExpr::of(ff.z(), -2);
  CHECK(ff.leading_coefficient(x_over_z2, curve.infinity(), 0) == f.zero());
  CHECK(ff.leading_coefficient(FunctionExpr::of(ff.x()), Place{30}, 0) == curve.point(Place{30}).x);
  CHECK_THROWS_AS(ff.leading_coefficient(inv_z, curve.origin(), 0), Error);
}

TEST_CASE("the explicit minimum-weight function has pole divisor 3H") {
  const auto& [f, curve, ff] = fixture();
  FunctionExpr fn;
  for (int i = 0; i < 3; ++i) fn *= FunctionExpr::of(ff.x_minus(curve.full_x_abscissas()[i]));
  fn *= FunctionExpr::of(ff.z(), -3);
  Divisor poles;
  const Divisor d = ff.divisor_of(fn);
  for (const auto& [p, w] : d.weights()) {
    if (w < 0) poles.set(p, -w);
  }
  CHECK(poles == Divisor::sum_of(curve.orbit1(), 3));
  CHECK(poles.degree() == 27);
  for (int i = 0; i < 3; ++i) {
    for (Place p : curve.plane_section_x(curve.full_x_abscissas()[i])) CHECK(ff.evaluate(fn, p) == f.zero());
  }
}

TEST_CASE("divisor_of is additive") {
  const auto& [f, curve, ff] = fixture();
  const FunctionExpr a = FunctionExpr::of(ff.x(), 2) * FunctionExpr::of(ff.z_minus(curve.gamma0()[3]), -1);
  const FunctionExpr b = FunctionExpr::of(ff.y(), -1) * FunctionExpr::of(ff.tangent(curve.orbit1()[2]));
  CHECK(ff.divisor_of(a * b) == ff.divisor_of(a) + ff.divisor_of(b));
  CHECK(ff.divisor_of(a * b).degree() == 0);
  CHECK(ff.divisor_of(FunctionExpr::constant(f.generator())).empty());
  CHECK(ff.divisor_of(a.pow(3)) == 3 * ff.divisor_of(a));
}
