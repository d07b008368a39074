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

#ifndef GKCODES_SYMMETRY_HPP
#define GKCODES_SYMMETRY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gkcodes/codes.hpp"
#include "gkcodes/perm_group.hpp"

namespace gkcodes {

enum class AutKind : std::uint8_t { Translation, Diagonal, Multiplier, Inversion, FieldFrobenius };

/// Explicit curve automorphisms.
///   Translation(a, b), a ∈ F_{q^2}, b^q + b = a^{q+1}: (x + a^q y + b, y + a, z)
///   Diagonal(λ, γ), λ ∈ F_{q^2}*, γ^{q^2-q+1} = λ:      (λ^{q+1} x, λ y, γ z)
///   Multiplier(η), η^{q^2-q+1} = 1:                     (x, y, η z)
///   Inversion:                                          (1/x, y/x, -z/x), P₀ <-> P∞
///   FieldFrobenius(i):                                  coordinatewise p^i-th power
/// Only FieldFrobenius is semilinear; the others fix P∞ except Inversion.
struct CurveAutomorphism {
  AutKind kind = AutKind::Translation;
  Fe a;        // a, λ or η
  Fe b;        // b or γ
  int power = 0;

  static CurveAutomorphism translation(Fe a, Fe b) { return {AutKind::Translation, a, b, 0}; }
  static CurveAutomorphism diagonal(Fe lambda, Fe gamma) { return {AutKind::Diagonal, lambda, gamma, 0}; }
  static CurveAutomorphism multiplier(Fe eta) { return {AutKind::Multiplier, eta, {}, 0}; }
  static CurveAutomorphism inversion() { return {AutKind::Inversion, {}, {}, 0}; }
  static CurveAutomorphism frobenius(int i) { return {AutKind::FieldFrobenius, {}, {}, i}; }

  bool geometric() const { return kind != AutKind::FieldFrobenius; }
  friend bool operator==(const CurveAutomorphism&, const CurveAutomorphism&) = default;
};

std::string describe(const CurveAutomorphism& s);

/// Throws on malformed parameters (e.g. b^q + b != a^{q+1}).
void validate_automorphism(const FieldTower& f, const CurveAutomorphism& s);

CurvePoint apply_point(const FieldTower& f, const CurveAutomorphism& s, const CurvePoint& p);

/// perm[i] = index of σ(P_i); throws if some image is not a rational point.
Permutation point_permutation(const CurveTable& curve, const CurveAutomorphism& s);

/// σ applied to coordinate series (x, y, z) of a point, giving the
/// coordinate series of the image. Geometric automorphisms only.
std::array<Laurent, 3> apply_series(const FieldTower& f, const CurveAutomorphism& s,
                                    const std::array<Laurent, 3>& xyz);

/// Series of A∘σ at P in the canonical parameter of P.
Laurent pullback_series(const FunctionField& ff, const CurveAutomorphism& s, const Atom& a, Place p,
                        int relative);

/// The canonical local parameter at σ(P) pulled back to P, to `relative`
/// terms; its leading coefficient compares the two parameters.
Laurent pulled_back_parameter(const FunctionField& ff, const CurveAutomorphism& s, Place p,
                              int relative);

/// Generators of the symmetry group used for a code family:
///   C, Cprime       Translations, Diagonal, Multiplier, Inversion, Frobenius(1)
///   Ctilde, s = 0   the same without Inversion
///   s > 0           Translations, a plane-stabilizing Diagonal (if any),
///                   a Multiplier of order r (if r > 1), Frobenius(1)
/// Throws when s > 0 and the plane list is not closed under Frobenius and
/// c -> λc, λ^r = 1.
std::vector<CurveAutomorphism> generators_for(const CurveTable& curve, const CodeSpec& spec);

/// Translation generators from F_p-bases of F_{q^2} and of the trace-zero
/// subgroup {b : b^q + b = 0}.
std::vector<CurveAutomorphism> translation_generators(const FieldTower& f);
/// Diagonal(λ, γ) with λ the smallest-index generator of F_{q^2}* and γ
/// from solve_power.
CurveAutomorphism diagonal_generator(const FieldTower& f);
/// Multiplier by the smallest-index element of order n (n | q^2 - q + 1).
CurveAutomorphism multiplier_of_order(const FieldTower& f, std::uint64_t n);

/// out[j] = (scale[j] · in[src[j]])^{p^frobenius}
struct CodeMap {
  std::vector<std::uint32_t> src;
  std::vector<Fe> scale;
  int frobenius = 0;
};

std::vector<Fe> apply_code_map(const FieldTower& f, const CodeMap& map, const std::vector<Fe>& word);

/// Monomial map on code coordinates induced by σ. Scaling is 1 except at
/// lengthening coordinates, where it is ((t_P / (t_{σP}∘σ))(P))^{b_P}.
/// Throws unless σ preserves G as a divisor and the coordinate set.
CodeMap induced_code_map(const FunctionField& ff, const CurveAutomorphism& s, const LinearCode& code);

/// Swap of two coordinates (negative control).
CodeMap transposition_map(std::size_t n, std::size_t i, std::size_t j);

/// Every mapped generator row lies in the row space.
bool check_invariance(const FieldTower& f, const LinearCode& code, const CodeMap& map);

/// Closure order of the point permutations of the geometric generators.
GroupOrder closure_order(const CurveTable& curve, const std::vector<CurveAutomorphism>& gens,
                         std::uint64_t budget);

}  // namespace gkcodes

#endif  // GKCODES_SYMMETRY_HPP
