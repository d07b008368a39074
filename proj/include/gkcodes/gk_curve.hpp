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

#ifndef GKCODES_GK_CURVE_HPP
#define GKCODES_GK_CURVE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gkcodes/field_tower.hpp"

namespace gkcodes {

/// A point of the curve Y^{q+1} = X^q + X, Z^{q^2-q+1} = Y^{q^2} - Y: either
/// the unique point at infinity or an affine triple.
struct CurvePoint {
  bool infinity = false;
  Fe x, y, z;

  static CurvePoint at_infinity() { return CurvePoint{true, {}, {}, {}}; }
  static CurvePoint affine(Fe a, Fe b, Fe c) { return CurvePoint{false, a, b, c}; }

  // Affine points order lexicographically by coordinate index; infinity last.
  friend auto operator<=>(const CurvePoint& l, const CurvePoint& r) {
    if (l.infinity != r.infinity) return l.infinity ? std::strong_ordering::greater
                                                    : std::strong_ordering::less;
    if (l.infinity) return std::strong_ordering::equal;
    if (auto c = l.x <=> r.x; c != 0) return c;
    if (auto c = l.y <=> r.y; c != 0) return c;
    return l.z <=> r.z;
  }
  friend bool operator==(const CurvePoint& l, const CurvePoint& r) { return (l <=> r) == 0; }
};

/// Index of a rational place in CurveTable order.
struct Place {
  std::uint32_t id = 0;

  friend constexpr auto operator<=>(Place, Place) = default;
};

/// True iff the point satisfies both defining equations (infinity always does).
bool is_on_curve(const FieldTower& field, const CurvePoint& p);

/// All F_{q^6}-rational points, in lexicographic order (index(a), index(b),
/// index(c)) with P∞ last, together with the orbit split and the x- and
/// z-plane sections. Immutable after construction.
class CurveTable {
 public:
  explicit CurveTable(FieldTower field);

  const FieldTower& field() const { return field_; }
  std::uint64_t q() const { return field_.q(); }
  /// (q^5 - 2q^3 + q^2) / 2
  std::int64_t genus() const { return genus_; }
  std::size_t size() const { return points_.size(); }

  const CurvePoint& point(Place p) const { return points_.at(p.id); }
  std::span<const CurvePoint> points() const { return points_; }
  Place infinity() const { return Place{static_cast<std::uint32_t>(points_.size() - 1)}; }
  /// P₀ = (0,0,0)
  Place origin() const { return origin_; }
  bool is_infinity(Place p) const { return p == infinity(); }

  std::optional<Place> find(const CurvePoint& p) const;
  /// Like find, but throws when the point is not rational on the curve.
  Place index_of(const CurvePoint& p) const;

  /// O₁ = X(F_{q^2}) (affine points with c = 0, then P∞) and O₂ = the rest.
  std::span<const Place> orbit1() const { return orbit1_; }
  std::span<const Place> orbit2() const { return orbit2_; }
  bool in_orbit1(Place p) const;

  /// Affine rational points on the plane X = a.
  std::span<const Place> plane_section_x(Fe a) const;
  /// Affine rational points on the plane Z = c.
  std::span<const Place> plane_section_z(Fe c) const;

  /// Abscissas a whose plane X = a carries q^3 + 1 rational points, sorted.
  const std::vector<Fe>& full_x_abscissas() const { return full_x_; }

  /// Γ₀ sorted by canonical index. Built by both the polynomial condition and
  /// fiber counting; construction fails if the two disagree.
  const std::vector<Fe>& gamma0() const { return gamma0_; }
  bool in_gamma0(Fe c) const;

  /// {0} ∪ {c ≠ 0 : c^{(q^3+1)(q^2-1)} + c^{(q^3+1)(q^2-q)} + 1 = 0}
  std::vector<Fe> gamma0_by_polynomial() const;
  /// {c : the plane Z = c carries exactly q^3 affine rational points}
  std::vector<Fe> gamma0_by_fibers() const;

 private:
  FieldTower field_;
  std::int64_t genus_ = 0;
  std::vector<CurvePoint> points_;
  Place origin_;
  std::vector<Place> orbit1_, orbit2_;
  std::vector<std::uint32_t> x_start_;     // CSR offsets over the x coordinate
  std::vector<std::uint32_t> z_start_;     // CSR offsets into z_order_
  std::vector<Place> z_order_;
  std::vector<Place> all_affine_;
  std::vector<Fe> full_x_;
  std::vector<Fe> gamma0_;
  std::vector<bool> gamma0_mask_;
};

}  // namespace gkcodes

#endif  // GKCODES_GK_CURVE_HPP
