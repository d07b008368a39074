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

#ifndef GKCODES_CODES_HPP
#define GKCODES_CODES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gkcodes/divisors.hpp"
#include "gkcodes/linalg.hpp"
#include "gkcodes/riemann_roch.hpp"

namespace gkcodes {

enum class Family { C, Cprime, Cbar, Ctilde };

std::string family_name(Family f);
/// Accepts C, Cprime, Cbar, Ctilde (case-sensitive).
Family parse_family(const std::string& s);

struct CodeSpec {
  Family family = Family::C;
  int m = 1;
  /// Extra planes (Cbar, Ctilde); planes holds c_0 = 0 followed by s
  /// distinct nonzero elements of Γ₀.
  int s = 0;
  std::vector<Fe> planes;
};

/// δ = gcd(3, q + 1)
std::int64_t delta(std::int64_t q);
/// r = gcd(s, (q^2 - q + 1)/δ)
std::int64_t plane_symmetry_order(std::int64_t q, std::int64_t s);

struct PlaneSelection {
  std::vector<Fe> planes;  // c_0 = 0 first
  /// Closed under Frobenius and under multiplication by the r-th roots of unity.
  bool closed = false;
};

/// Unions of ⟨Frobenius, μ_r⟩-orbits in Γ₀ \ {0}, picked greedily in index
/// order subject to reaching exactly s elements. When no union has size s
/// the smallest remaining elements fill the gap and `closed` is false.
PlaneSelection auto_planes(const CurveTable& curve, int s);

/// True iff {c_1, ..., c_s} is closed under c -> c^p and c -> λc, λ^r = 1.
bool planes_closed(const CurveTable& curve, const std::vector<Fe>& planes, std::int64_t r);

/// Validates family parameters and the plane list; throws on violations.
void validate_spec(const CurveTable& curve, const CodeSpec& spec);

struct CodeDivisors {
  Divisor g;
  std::vector<Place> d;  // coordinate order = curve order
};

CodeDivisors derive_divisors(const CurveTable& curve, const CodeSpec& spec);

// Closed-form parameters. q is the base field order.
std::int64_t formula_length(std::int64_t q, const CodeSpec& spec);
std::int64_t formula_degree(std::int64_t q, const CodeSpec& spec);
/// d* from the family formula (the Cbar one written as a single expansion).
std::int64_t formula_designed_distance(std::int64_t q, const CodeSpec& spec);
/// The other spelling of the Cbar designed distance, n̄ - deg Ḡ.
std::int64_t cbar_designed_distance_by_degree(std::int64_t q, std::int64_t m, std::int64_t s);
/// k formula of the family; for Ctilde the stated constant -(q^5-2q^3+q^2-4)/2.
std::int64_t formula_dimension(std::int64_t q, const CodeSpec& spec);
/// deg G + 1 - g
std::int64_t riemann_roch_dimension(std::int64_t q, const CodeSpec& spec);

struct MRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool contains(std::int64_t m) const { return lo <= m && m <= hi; }
};
/// Range of m for which the family's dimension formula is stated.
MRange dimension_range(std::int64_t q, const CodeSpec& spec);

struct LinearCode {
  std::string label;
  Matrix generator;  // k independent rows
  std::size_t n = 0;
  std::size_t k = 0;
  std::int64_t designed_distance = 0;
  Divisor g;
  std::vector<Place> coordinates;
  /// b_i in (t^{b_i} f)(P_i); all zero except for the lengthening.
  std::vector<int> shifts;
  std::size_t basis_size = 0;  // ℓ(G)
};

/// Evaluation (or leading-coefficient) image of a Riemann–Roch space.
LinearCode evaluation_code(const FunctionField& ff, const Divisor& g, const std::vector<Place>& d,
                           const std::vector<int>& shifts, unsigned threads = 1);

LinearCode build_code(const FunctionField& ff, const CodeSpec& spec, unsigned threads = 1);

/// Row of code coordinates of a function: f(P_i), or (t^{b_i} f)(P_i).
std::vector<Fe> code_word(const FunctionField& ff, const FunctionSum& f,
                          const std::vector<Place>& coordinates, const std::vector<int>& shifts,
                          unsigned threads = 1);

std::size_t weight(const std::vector<Fe>& word);

struct Witness {
  FunctionExpr function;
  std::vector<Fe> word;
  std::size_t weight = 0;
};

/// The explicit low-weight codeword: Π (x - a_i)/z for C and Cprime, the
/// product of (z - γ)/(z - c_i) for Ctilde. Throws for Cbar.
Witness witness_min_weight(const FunctionField& ff, const CodeSpec& spec);

LinearCode dual_code(const FieldTower& f, const LinearCode& code);

struct DistanceReport {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  bool exact() const { return lower == upper; }
  bool enumerated = false;
};

/// Exact minimum distance by enumerating projective messages when
/// |F|^k / (|F| - 1) <= budget; otherwise the interval
/// [max(d*, 1), min(witness weight, weight of any reduced generator row)].
DistanceReport exhaustive_min_distance(const FieldTower& f, const LinearCode& code,
                                       std::uint64_t budget,
                                       std::optional<std::size_t> witness_weight = std::nullopt);

/// n + 1 - k - d; requires an exact distance.
std::int64_t singleton_defect(const LinearCode& code, const DistanceReport& d);

struct OmegaReport {
  std::vector<Fe> u;
  std::size_t dual_dimension = 0;
  std::size_t scaled_dimension = 0;
  std::size_t stacked_rank = 0;
};

/// Scales C_L(D, (q^5-q^3+q^2-m-2)H) by the residues of dz/φ with
/// φ = f / z^{q^5+q^2-1} and compares with the dual of C_L(D, mH). Throws
/// unless the two row spaces coincide and u is nowhere zero.
OmegaReport omega_equivalence(const FunctionField& ff, int m, unsigned threads = 1);

}  // namespace gkcodes

#endif  // GKCODES_CODES_HPP
