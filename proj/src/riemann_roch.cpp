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

#include "gkcodes/riemann_roch.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gkcodes/linalg.hpp"

namespace gkcodes {

Divisor plane_cover(const CurveTable& curve, const Divisor& g) {
  std::map<Fe, int> planes;
  for (const auto& [p, w] : g.weights()) {
    if (curve.is_infinity(p) || w <= 0) continue;
    int& slot = planes[curve.point(p).z];
    slot = std::max(slot, w);
  }
  Divisor top;
  top.set(curve.infinity(), g.weight(curve.infinity()));
  for (const auto& [c, w] : planes) {
    for (Place p : curve.plane_section_z(c)) top.set(p, w);
  }
  return top;
}

namespace {

struct Monomial {
  std::int64_t pole;
  int a, b, l;
};

}  // namespace

std::vector<FunctionExpr> candidate_functions(const FunctionField& ff, const Divisor& g) {
  const CurveTable& curve = ff.curve();
  const std::int64_t q = static_cast<std::int64_t>(curve.q());
  const std::int64_t q3 = q * q * q;
  const Divisor top = plane_cover(curve, g);

  // h = Π (z - c)^{w_c}; k∞ = q^3 Σ w_c + w∞
  std::map<Fe, int> planes;
  for (const auto& [p, w] : top.weights()) {
    if (!curve.is_infinity(p)) planes[curve.point(p).z] = w;
  }
  std::int64_t k_inf = top.weight(curve.infinity());
  FunctionExpr h_inv;
  for (const auto& [c, w] : planes) {
    k_inf += q3 * w;
    h_inv *= FunctionExpr::of(ff.z_minus(c), -w);
  }
  if (k_inf < 0) return {};

  std::vector<Monomial> monos;
  const std::int64_t px = q3 + 1, py = q * (q * q - q + 1), pz = q3;
  for (int b = 0; b <= q; ++b) {
    for (int l = 0; l <= q * q - q; ++l) {
      for (int a = 0;; ++a) {
        const std::int64_t pole = px * a + py * b + pz * l;
        if (pole > k_inf) break;
        monos.push_back(Monomial{pole, a, b, l});
      }
    }
  }
  std::sort(monos.begin(), monos.end(),
            [](const Monomial& u, const Monomial& v) { return u.pole < v.pole; });
  for (std::size_t i = 1; i < monos.size(); ++i) {
    if (monos[i].pole == monos[i - 1].pole) throw Error("monomial pole orders at P_inf collide");
  }

  std::vector<FunctionExpr> out;
  out.reserve(monos.size());
  for (const Monomial& mo : monos) {
    FunctionExpr f = h_inv;
    f *= FunctionExpr::of(ff.x(), mo.a);
    f *= FunctionExpr::of(ff.y(), mo.b);
    f *= FunctionExpr::of(ff.z(), mo.l);
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

// Rows: one functional per (place, j); columns: the given functions.
Matrix functional_matrix(const FunctionField& ff, const std::vector<FunctionSum>& fns,
                         const std::vector<std::pair<Place, int>>& functionals, unsigned threads) {
  Matrix m(functionals.size(), fns.size());
  parallel_for(functionals.size(), threads, [&](std::size_t r) {
    const auto [p, j] = functionals[r];
    for (std::size_t c = 0; c < fns.size(); ++c) m.at(r, c) = ff.laurent_coefficient(fns[c], p, j);
  });
  return m;
}

std::vector<FunctionSum> combine(const FieldTower& f, const std::vector<FunctionSum>& fns,
                                 const Matrix& kernel) {
  std::vector<FunctionSum> out;
  out.reserve(kernel.rows());
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    FunctionSum s;
    for (std::size_t c = 0; c < fns.size(); ++c) {
      const Fe coef = kernel.at(r, c);
      if (coef == f.zero()) continue;
      for (const auto& t : fns[c].terms) {
        FunctionExpr term = t;
        term.scalar = f.mul(term.scalar, coef);
        s.terms.push_back(std::move(term));
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

RRBasis rr_basis(const FunctionField& ff, const Divisor& g, unsigned threads) {
  const CurveTable& curve = ff.curve();
  const std::int64_t genus = curve.genus();
  RRBasis basis;
  basis.divisor = g;
  if (g.degree() < 0) {
    basis.certified = true;
    return basis;
  }
  const Divisor top = plane_cover(curve, g);
  std::vector<FunctionSum> fns;
  for (auto& e : candidate_functions(ff, g)) fns.emplace_back(std::move(e));

  if (top != g && !fns.empty()) {
    std::vector<std::pair<Place, int>> functionals;
    for (const auto& [p, w] : top.weights()) {
      for (int j = -w; j < -g.weight(p); ++j) functionals.emplace_back(p, j);
    }
    for (const auto& [p, w] : g.weights()) {
      if (top.weight(p) == 0) {
        for (int j = 0; j < -w; ++j) functionals.emplace_back(p, j);
      }
    }
    const Matrix m = functional_matrix(ff, fns, functionals, threads);
    fns = combine(ff.field(), fns, nullspace(ff.field(), m));
  }

  basis.functions = std::move(fns);
  basis.dimension = static_cast<std::int64_t>(basis.functions.size());
  if (g.degree() > 2 * genus - 2) {
    if (basis.dimension != g.degree() + 1 - genus) {
      throw Error("Riemann-Roch dimension shortfall: found " + std::to_string(basis.dimension) +
                  ", expected " + std::to_string(g.degree() + 1 - genus));
    }
    basis.certified = true;
  }
  return basis;
}

std::int64_t ell(const FunctionField& ff, const Divisor& g, unsigned threads) {
  return rr_basis(ff, g, threads).dimension;
}

std::int64_t reduced_dimension(const FunctionField& ff, const Divisor& g,
                               const std::vector<std::pair<Place, int>>& points,
                               unsigned threads) {
  const RRBasis basis = rr_basis(ff, g, threads);
  std::map<Place, int> mult;
  for (const auto& [p, mu] : points) {
    if (p.id >= ff.curve().size()) throw Error("reduction at an unknown place");
    if (mu < 0) throw Error("negative reduction multiplicity");
    mult[p] += mu;
  }
  std::vector<std::pair<Place, int>> functionals;
  for (const auto& [p, mu] : mult) {
    const int base = -g.weight(p);
    for (int j = base; j < base + mu; ++j) functionals.emplace_back(p, j);
  }
  if (functionals.empty() || basis.functions.empty()) return basis.dimension;
  const Matrix m = functional_matrix(ff, basis.functions, functionals, threads);
  return basis.dimension - static_cast<std::int64_t>(rank(ff.field(), m));
}

bool in_riemann_roch_space(const FunctionField& ff, const FunctionSum& f, const Divisor& g) {
  const CurveTable& curve = ff.curve();
  if (f.terms.empty()) return true;
  for (std::uint32_t id = 0; id < curve.size(); ++id) {
    const Place p{id};
    const int bound = -g.weight(p);
    const int low = ff.valuation(f, p);
    for (int j = low; j < bound; ++j) {
      if (ff.laurent_coefficient(f, p, j) != ff.field().zero()) return false;
    }
  }
  return true;
}

}  // namespace gkcodes
