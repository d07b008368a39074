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

#ifndef GKCODES_DIVISORS_HPP
#define GKCODES_DIVISORS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gkcodes/gk_curve.hpp"
#include "gkcodes/series.hpp"

namespace gkcodes {

/// Finite integer combination of rational places.
class Divisor {
 public:
  Divisor() = default;

  static Divisor single(Place p, int weight = 1);
  static Divisor sum_of(std::span<const Place> places, int weight = 1);

  int weight(Place p) const;
  void set(Place p, int weight);
  void add(Place p, int weight);
  std::int64_t degree() const;
  bool empty() const { return w_.empty(); }
  bool is_effective() const;
  /// Places with nonzero weight, ascending.
  std::vector<Place> support() const;
  const std::map<Place, int>& weights() const { return w_; }

  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(int k, Divisor a);
  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::map<Place, int> w_;  // no zero weights stored
};

enum class AtomKind : std::uint8_t { X, Y, Z, XMinus, ZMinus, Tangent };

/// A function with a known principal divisor supported on rational places:
/// x, y, z, x - α, z - c (c ∈ Γ₀) or the tangent form x - b^q y + a^q at an
/// affine point (a, b, 0) of O₁. Build atoms through FunctionField, which
/// validates them.
struct Atom {
  AtomKind kind = AtomKind::X;
  Fe param;       // α for XMinus, c for ZMinus
  Place point;    // tangency point for Tangent

  friend constexpr auto operator<=>(const Atom&, const Atom&) = default;
};

/// scalar · Π atom^exponent. Factors are kept sorted with nonzero exponents.
struct FunctionExpr {
  Fe scalar{1};
  std::vector<std::pair<Atom, int>> factors;

  static FunctionExpr constant(Fe c);
  static FunctionExpr of(const Atom& a, int exponent = 1);

  FunctionExpr& operator*=(const FunctionExpr& o);
  friend FunctionExpr operator*(FunctionExpr a, const FunctionExpr& b) { return a *= b; }
  FunctionExpr pow(int n) const;
  /// Exponent of the given atom (0 when absent).
  int exponent(const Atom& a) const;
  friend bool operator==(const FunctionExpr&, const FunctionExpr&) = default;
};

/// Formal F_{q^6}-linear combination of monomials.
struct FunctionSum {
  std::vector<FunctionExpr> terms;

  FunctionSum() = default;
  FunctionSum(FunctionExpr t) { terms.push_back(std::move(t)); }  // NOLINT implicit
};

/// Power series of the coordinates at a place. At an affine point the
/// triple is (x, y, z) in t = z - z(P); at P∞ it is (1/x, y/x, z/x) in
/// t = z/x.
struct LocalExpansion {
  Laurent x, y, z;
};

/// Divisor and valuation calculus for atom monomials on the curve, plus
/// evaluation and local expansions at rational places.
///
/// Local parameters: z - c at an affine point with z-coordinate c; z/x at P∞.
/// Expansions at affine points come from Hensel lifting through
/// Y^{q^2} - Y = z^{q^2-q+1} and X^q + X = y^{q+1}; P∞ is reached through the
/// inversion (x, y, z) -> (1/x, y/x, -z/x), which swaps P∞ and P₀.
class FunctionField {
 public:
  explicit FunctionField(const CurveTable& curve);

  const CurveTable& curve() const { return curve_; }
  const FieldTower& field() const { return curve_.field(); }

  Atom x() const { return Atom{AtomKind::X, {}, {}}; }
  Atom y() const { return Atom{AtomKind::Y, {}, {}}; }
  Atom z() const { return Atom{AtomKind::Z, {}, {}}; }
  /// Rejects α outside F_{q^2} unless the plane X = α carries q^3 + 1
  /// rational points.
  Atom x_minus(Fe alpha) const;
  /// Rejects c ∉ Γ₀. z - 0 is normalized to z.
  Atom z_minus(Fe c) const;
  /// Tangent form at an affine point of O₁.
  Atom tangent(Place p) const;
  /// Throws when an atom was not built by (or is invalid for) this curve.
  void validate(const Atom& a) const;

  Divisor principal_divisor(const Atom& a) const;
  int atom_valuation(const Atom& a, Place p) const;
  /// Value at an affine place (the atom may vanish there).
  Fe atom_value(const Atom& a, Place p) const;

  Divisor divisor_of(const FunctionExpr& f) const;
  int valuation(const FunctionExpr& f, Place p) const;
  /// min over terms is a lower bound; the exact value comes from series.
  int valuation(const FunctionSum& f, Place p) const;

  /// Coordinate triple at P to the given absolute precision (see LocalExpansion).
  LocalExpansion local_expansion(Place p, int precision) const;
  /// The coordinate functions x, y, z themselves as Laurent series in the
  /// canonical local parameter, each with at least `relative` known terms.
  std::array<Laurent, 3> coordinate_series(Place p, int relative) const;

  /// Laurent expansion of an atom at P with at least `relative` known terms
  /// past its leading one. Checks the leading order against the divisor table.
  Laurent atom_series(const Atom& a, Place p, int relative) const;
  /// The same atom computed from arbitrary coordinate series.
  Laurent atom_from_coordinates(const Atom& a, const std::array<Laurent, 3>& xyz) const;

  /// Coefficient of t^j in the expansion of f at P.
  Fe laurent_coefficient(const FunctionExpr& f, Place p, int j) const;
  Fe laurent_coefficient(const FunctionSum& f, Place p, int j) const;

  /// f(P). Every term must be regular at P.
  Fe evaluate(const FunctionExpr& f, Place p) const;
  Fe evaluate(const FunctionSum& f, Place p) const;
  /// f(P) computed only from Laurent expansions, bypassing the termwise path.
  Fe evaluate_by_series(const FunctionSum& f, Place p) const;
  /// (t^b f)(P); requires valuation(f, P) >= -b.
  Fe leading_coefficient(const FunctionSum& f, Place p, int b) const;

  std::string to_string(const Atom& a) const;
  std::string to_string(const FunctionExpr& f) const;

 private:
  LocalExpansion expansion_cached(Place p, int precision) const;
  LocalExpansion compute_affine_expansion(const CurvePoint& pt, int precision) const;
  Laurent numerator_at_infinity(const Atom& a, const LocalExpansion& inf) const;

  const CurveTable& curve_;
  std::int64_t q_;
  mutable std::mutex cache_mutex_;
  mutable std::map<Place, LocalExpansion> cache_;
};

}  // namespace gkcodes

#endif  // GKCODES_DIVISORS_HPP
