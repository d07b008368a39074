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

#include "gkcodes/symmetry.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gkcodes {

namespace {

std::int64_t qq(const FieldTower& f) { return static_cast<std::int64_t>(f.q()); }
std::int64_t z_exponent(const FieldTower& f) { return qq(f) * qq(f) - qq(f) + 1; }

std::vector<Fe> subfield_elements(const FieldTower& f, std::uint32_t k) {
  std::vector<Fe> out;
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    const Fe x{static_cast<std::uint32_t>(i)};
    if (f.in_subfield(x, k)) out.push_back(x);
  }
  return out;
}

// F_p-basis of an additive subgroup, chosen greedily in index order.
std::vector<Fe> additive_basis(const FieldTower& f, const std::vector<Fe>& group) {
  std::set<Fe> span{f.zero()};
  std::vector<Fe> basis;
  for (Fe x : group) {
    if (span.contains(x)) continue;
    basis.push_back(x);
    std::set<Fe> grown;
    for (Fe s : span) {
      Fe mult = f.zero();
      for (std::uint32_t c = 0; c < f.p(); ++c) {
        grown.insert(f.add(s, mult));
        mult = f.add(mult, x);
      }
    }
    span = std::move(grown);
  }
  return basis;
}

}  // namespace

std::string describe(const CurveAutomorphism& s) {
  std::ostringstream o;
  switch (s.kind) {
    case AutKind::Translation: o << "Translation(a=" << s.a.index << ",b=" << s.b.index << ")"; break;
    case AutKind::Diagonal: o << "Diagonal(lambda=" << s.a.index << ",gamma=" << s.b.index << ")"; break;
    case AutKind::Multiplier: o << "Multiplier(eta=" << s.a.index << ")"; break;
    case AutKind::Inversion: o << "Inversion"; break;
    case AutKind::FieldFrobenius: o << "FieldFrobenius(" << s.power << ")"; break;
  }
  return o.str();
}

void validate_automorphism(const FieldTower& f, const CurveAutomorphism& s) {
  const std::int64_t q = qq(f);
  const std::uint32_t k2 = 2 * f.e();
  switch (s.kind) {
    case AutKind::Translation:
      if (!f.in_subfield(s.a, k2) || !f.in_subfield(s.b, k2)) throw Error("translation parameters must lie in F_{q^2}");
      if (f.add(f.pow(s.b, q), s.b) != f.pow(s.a, q + 1)) throw Error("translation needs b^q + b = a^{q+1}");
      return;
    case AutKind::Diagonal:
      if (s.a == f.zero() || !f.in_subfield(s.a, k2)) throw Error("diagonal lambda must lie in F_{q^2}*");
      if (f.pow(s.b, z_exponent(f)) != s.a) throw Error("diagonal needs gamma^{q^2-q+1} = lambda");
      return;
    case AutKind::Multiplier:
      if (s.a == f.zero() || f.pow(s.a, z_exponent(f)) != f.one()) throw Error("multiplier needs eta^{q^2-q+1} = 1");
      return;
    case AutKind::Inversion:
    case AutKind::FieldFrobenius:
      return;
  }
  throw Error("unknown automorphism kind");
}

CurvePoint apply_point(const FieldTower& f, const CurveAutomorphism& s, const CurvePoint& p) {
  const std::int64_t q = qq(f);
  if (p.infinity) {
    return s.kind == AutKind::Inversion ? CurvePoint::affine(f.zero(), f.zero(), f.zero()) : p;
  }
  switch (s.kind) {
    case AutKind::Translation:
      return CurvePoint::affine(f.add(f.add(p.x, f.mul(f.pow(s.a, q), p.y)), s.b), f.add(p.y, s.a), p.z);
    case AutKind::Diagonal:
      return CurvePoint::affine(f.mul(f.pow(s.a, q + 1), p.x), f.mul(s.a, p.y), f.mul(s.b, p.z));
    case AutKind::Multiplier:
      return CurvePoint::affine(p.x, p.y, f.mul(s.a, p.z));
    case AutKind::Inversion: {
      if (p.x == f.zero()) return CurvePoint::at_infinity();
      const Fe inv = f.inv(p.x);
      return CurvePoint::affine(inv, f.mul(p.y, inv), f.neg(f.mul(p.z, inv)));
    }
    case AutKind::FieldFrobenius:
      return CurvePoint::affine(f.frobenius(p.x, s.power), f.frobenius(p.y, s.power),
                                f.frobenius(p.z, s.power));
  }
  throw Error("unknown automorphism kind");
}

Permutation point_permutation(const CurveTable& curve, const CurveAutomorphism& s) {
  validate_automorphism(curve.field(), s);
  Permutation perm(curve.size());
  for (std::uint32_t i = 0; i < curve.size(); ++i) {
    perm[i] = curve.index_of(apply_point(curve.field(), s, curve.point(Place{i}))).id;
  }
  check_permutation(perm);
  return perm;
}

std::array<Laurent, 3> apply_series(const FieldTower& f, const CurveAutomorphism& s,
                                    const std::array<Laurent, 3>& xyz) {
  const std::int64_t q = qq(f);
  const auto& [x, y, z] = xyz;
  switch (s.kind) {
    case AutKind::Translation:
      return {series::add_constant(f, series::add(f, x, series::scale(f, y, f.pow(s.a, q))), s.b),
              series::add_constant(f, y, s.a), z};
    case AutKind::Diagonal:
      return {series::scale(f, x, f.pow(s.a, q + 1)), series::scale(f, y, s.a), series::scale(f, z, s.b)};
    case AutKind::Multiplier:
      return {x, y, series::scale(f, z, s.a)};
    case AutKind::Inversion: {
      const Laurent inv = series::inverse(f, x);
      return {inv, series::mul(f, y, inv), series::scale(f, series::mul(f, z, inv), f.neg(f.one()))};
    }
    case AutKind::FieldFrobenius:
      throw Error("series transport is defined for geometric automorphisms only");
  }
  throw Error("unknown automorphism kind");
}

namespace {

std::array<Laurent, 3> transported_coordinates(const FunctionField& ff, const CurveAutomorphism& s,
                                               Place p, int relative) {
  const int q3p1 = static_cast<int>(ff.curve().q() * ff.curve().q() * ff.curve().q() + 1);
  const auto xyz = ff.coordinate_series(p, relative + 2 * q3p1 + 2);
  return apply_series(ff.field(), s, xyz);
}

}  // namespace

Laurent pullback_series(const FunctionField& ff, const CurveAutomorphism& s, const Atom& a, Place p,
                        int relative) {
  validate_automorphism(ff.field(), s);
  ff.validate(a);
  return series::normalize(ff.atom_from_coordinates(a, transported_coordinates(ff, s, p, relative)));
}

Laurent pulled_back_parameter(const FunctionField& ff, const CurveAutomorphism& s, Place p,
                              int relative) {
  const FieldTower& f = ff.field();
  const CurveTable& curve = ff.curve();
  validate_automorphism(f, s);
  const auto xyz = transported_coordinates(ff, s, p, relative);
  const CurvePoint image = apply_point(f, s, curve.point(p));
  if (image.infinity) return series::normalize(series::mul(f, xyz[2], series::inverse(f, xyz[0])));
  return series::normalize(series::add_constant(f, xyz[2], f.neg(image.z)));
}

std::vector<CurveAutomorphism> translation_generators(const FieldTower& f) {
  const std::int64_t q = qq(f);
  const auto fq2 = subfield_elements(f, 2 * f.e());
  std::vector<Fe> trace_zero;
  for (Fe b : fq2) {
    if (f.add(f.pow(b, q), b) == f.zero()) trace_zero.push_back(b);
  }
  std::vector<CurveAutomorphism> out;
  for (Fe a : additive_basis(f, fq2)) {
    const Fe target = f.pow(a, q + 1);
    const auto it = std::find_if(fq2.begin(), fq2.end(),
                                 [&](Fe b) { return f.add(f.pow(b, q), b) == target; });
    if (it == fq2.end()) throw Error("no translation partner b for a");
    out.push_back(CurveAutomorphism::translation(a, *it));
  }
  for (Fe b : additive_basis(f, trace_zero)) out.push_back(CurveAutomorphism::translation(f.zero(), b));
  return out;
}

CurveAutomorphism diagonal_generator(const FieldTower& f) {
  const std::int64_t q = qq(f);
  for (Fe l : subfield_elements(f, 2 * f.e())) {
    if (l == f.zero() || f.order(l) != static_cast<std::uint64_t>(q * q - 1)) continue;
    return CurveAutomorphism::diagonal(l, f.solve_power(l, static_cast<std::uint64_t>(z_exponent(f))));
  }
  throw Error("F_{q^2}* has no generator");
}

CurveAutomorphism multiplier_of_order(const FieldTower& f, std::uint64_t n) {
  for (Fe eta : f.nth_roots(n)) {
    if (f.order(eta) == n) return CurveAutomorphism::multiplier(eta);
  }
  throw Error("no root of unity of the requested order");
}

std::vector<CurveAutomorphism> generators_for(const CurveTable& curve, const CodeSpec& spec) {
  const FieldTower& f = curve.field();
  validate_spec(curve, spec);
  const auto m = static_cast<std::uint64_t>(z_exponent(f));
  std::vector<CurveAutomorphism> gens = translation_generators(f);
  if (spec.s == 0) {
    gens.push_back(diagonal_generator(f));
    gens.push_back(multiplier_of_order(f, m));
    if (spec.family == Family::C || spec.family == Family::Cprime) {
      gens.push_back(CurveAutomorphism::inversion());
    }
    gens.push_back(CurveAutomorphism::frobenius(1));
    return gens;
  }

  const std::int64_t r = plane_symmetry_order(qq(f), spec.s);
  if (!planes_closed(curve, spec.planes, r)) {
    throw Error("plane list is not closed under Frobenius and multiplication by the r-th roots of unity");
  }
  const std::set<Fe> extra(spec.planes.begin() + 1, spec.planes.end());
  const CurveAutomorphism base = diagonal_generator(f);
  for (Fe eta : f.nth_roots(m)) {
    const Fe gamma = f.mul(base.b, eta);
    std::set<Fe> moved;
    for (Fe c : extra) moved.insert(f.mul(gamma, c));
    if (moved == extra) {
      gens.push_back(CurveAutomorphism::diagonal(base.a, gamma));
      break;
    }
  }
  if (r > 1) gens.push_back(multiplier_of_order(f, static_cast<std::uint64_t>(r)));
  gens.push_back(CurveAutomorphism::frobenius(1));
  return gens;
}

std::vector<Fe> apply_code_map(const FieldTower& f, const CodeMap& map, const std::vector<Fe>& word) {
  if (word.size() != map.src.size()) throw Error("code map length mismatch");
  std::vector<Fe> out(word.size());
  for (std::size_t j = 0; j < word.size(); ++j) {
    out[j] = f.frobenius(f.mul(map.scale[j], word[map.src[j]]), map.frobenius);
  }
  return out;
}

CodeMap induced_code_map(const FunctionField& ff, const CurveAutomorphism& s, const LinearCode& code) {
  const CurveTable& curve = ff.curve();
  const FieldTower& f = ff.field();
  const Permutation perm = point_permutation(curve, s);
  for (std::uint32_t i = 0; i < curve.size(); ++i) {
    if (code.g.weight(Place{perm[i]}) != code.g.weight(Place{i})) {
      throw Error(describe(s) + " does not preserve G");
    }
  }
  std::vector<int> pos(curve.size(), -1);
  for (std::size_t i = 0; i < code.coordinates.size(); ++i) pos[code.coordinates[i].id] = static_cast<int>(i);

  CodeMap map;
  const std::size_t n = code.coordinates.size();
  map.src.resize(n);
  map.scale.assign(n, f.one());
  const Permutation back = s.geometric() ? perm : inverse(perm);
  for (std::size_t j = 0; j < n; ++j) {
    const int src = pos[back[code.coordinates[j].id]];
    if (src < 0) throw Error(describe(s) + " does not preserve the evaluation set");
    map.src[j] = static_cast<std::uint32_t>(src);
  }
  if (!s.geometric()) {
    map.frobenius = s.power;
    return map;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const int b = code.shifts.empty() ? 0 : code.shifts[j];
    if (b == 0) continue;
    const Laurent t = pulled_back_parameter(ff, s, code.coordinates[j], 1);
    if (t.order != 1 || t.coeffs.empty()) throw Error("pulled-back parameter is not a local parameter");
    map.scale[j] = f.pow(f.inv(t.coeffs[0]), b);
  }
  return map;
}

CodeMap transposition_map(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw Error("transposition index out of range");
  CodeMap map;
  map.src.resize(n);
  for (std::size_t k = 0; k < n; ++k) map.src[k] = static_cast<std::uint32_t>(k);
  std::swap(map.src[i], map.src[j]);
  map.scale.assign(n, Fe{1});
  return map;
}

bool check_invariance(const FieldTower& f, const LinearCode& code, const CodeMap& map) {
  Matrix mapped(0, code.n);
  for (std::size_t r = 0; r < code.generator.rows(); ++r) {
    mapped.append_row(apply_code_map(f, map, code.generator.row(r)));
  }
  return rank(f, stack(code.generator, mapped)) == code.k;
}

GroupOrder closure_order(const CurveTable& curve, const std::vector<CurveAutomorphism>& gens,
                         std::uint64_t budget) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) {
    if (g.geometric()) perms.push_back(point_permutation(curve, g));
  }
  return permutation_group_order(perms, budget);
}

}  // namespace gkcodes
