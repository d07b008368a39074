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

#ifndef GKCODES_SERIES_HPP
#define GKCODES_SERIES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gkcodes/field_tower.hpp"

namespace gkcodes {

/// Truncated Laurent series sum_{i} coeffs[i] t^{order + i}, known modulo
/// t^{order + coeffs.size()} (the absolute precision).
struct Laurent {
  int order = 0;
  std::vector<Fe> coeffs;

  int precision() const { return order + static_cast<int>(coeffs.size()); }
  /// Coefficient of t^j; zero below `order`, throws beyond the precision.
  Fe coefficient(int j) const;
};

namespace series {

Laurent constant(Fe c, int precision);
/// t itself, known to the given absolute precision.
Laurent variable(int precision);

Laurent add(const FieldTower& f, const Laurent& a, const Laurent& b);
Laurent sub(const FieldTower& f, const Laurent& a, const Laurent& b);
Laurent scale(const FieldTower& f, const Laurent& a, Fe c);
Laurent add_constant(const FieldTower& f, const Laurent& a, Fe c);
Laurent mul(const FieldTower& f, const Laurent& a, const Laurent& b);
/// Throws when no nonzero coefficient is known.
Laurent inverse(const FieldTower& f, const Laurent& a);
Laurent pow(const FieldTower& f, const Laurent& a, std::int64_t n);
/// f(t) -> f(-t)
Laurent negate_variable(const FieldTower& f, const Laurent& a);
/// Raises every coefficient to p^k and substitutes t -> t^{p^k} (the p^k-th
/// power map in characteristic p). Requires order >= 0.
Laurent frobenius_power(const FieldTower& f, const Laurent& a, unsigned k);

/// Strips known leading zeros; the result has coeffs[0] != 0 unless every
/// known coefficient vanishes (then coeffs is empty).
Laurent normalize(Laurent a);
/// Index of the first nonzero known coefficient, if any.
std::optional<int> valuation(const Laurent& a);
/// Truncate to the given absolute precision (no-op if already coarser).
Laurent truncate(Laurent a, int precision);

}  // namespace series
}  // namespace gkcodes

#endif  // GKCODES_SERIES_HPP
