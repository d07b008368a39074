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

#ifndef GKCODES_RIEMANN_ROCH_HPP
#define GKCODES_RIEMANN_ROCH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "gkcodes/divisors.hpp"

namespace gkcodes {

struct RRBasis {
  Divisor divisor;
  std::vector<FunctionSum> functions;
  std::int64_t dimension = 0;
  /// deg G > 2g - 2 and the size equals deg G + 1 - g.
  bool certified = false;
};

/// Smallest divisor G_top >= G of the form Σ_c w_c·(plane Z = c) + w∞·P∞,
/// with w_c = max(0, max weight of G on the plane).
Divisor plane_cover(const CurveTable& curve, const Divisor& g);

/// Basis of ℒ(G_top) for G_top = plane_cover(G): h^{-1}·x^a y^b z^l with
/// b <= q, l <= q^2 - q and pole order (q^3+1)a + q(q^2-q+1)b + q^3 l at
/// most k∞, where h = Π (z - c)^{w_c}. The pole orders are pairwise
/// distinct, so the list is independent. Sorted by pole order.
std::vector<FunctionExpr> candidate_functions(const FunctionField& ff, const Divisor& g);

/// Basis of ℒ(G). When G differs from its plane cover the basis is the
/// kernel of the Laurent-coefficient functionals that cut ℒ(G) out of
/// ℒ(G_top). Throws on a dimension shortfall when deg G > 2g - 2.
RRBasis rr_basis(const FunctionField& ff, const Divisor& g, unsigned threads = 1);

std::int64_t ell(const FunctionField& ff, const Divisor& g, unsigned threads = 1);

/// ℓ(G - Σ μ_i P_i) from the kernel of f -> coefficient of t^j at P_i for
/// j in [-G(P_i), -G(P_i) + μ_i - 1], applied to rr_basis(G).
std::int64_t reduced_dimension(const FunctionField& ff, const Divisor& g,
                               const std::vector<std::pair<Place, int>>& points,
                               unsigned threads = 1);

/// Membership divisor_of(f) + G >= 0 checked through valuations (termwise
/// lower bound for sums, then series for the places where that bound fails).
bool in_riemann_roch_space(const FunctionField& ff, const FunctionSum& f, const Divisor& g);

}  // namespace gkcodes

#endif  // GKCODES_RIEMANN_ROCH_HPP
