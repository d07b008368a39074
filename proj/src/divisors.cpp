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

#include "gkcodes/divisors.hpp"

#include <algorithm>
#include <sstream>

namespace gkcodes {

// ---- Divisor --------------------------------------------------------------

Divisor Divisor::single(Place p, int weight) {
  Divisor d;
  d.add(p, weight);
  return d;
}

Divisor Divisor::sum_of(std::span<const Place> places, int weight) {
  Divisor d;
  for (Place p : places) d.add(p, weight);
  return d;
}

int Divisor::weight(Place p) const {
  const auto it = w_.find(p);
  return it == w_.end() ? 0 : it->second;
}

void Divisor::set(Place p, int weight) {
  if (weight == 0) {
    w_.erase(p);
  } else {
    w_[p] = weight;
  }
}

void Divisor::add(Place p, int weight) { set(p, this->weight(p) + weight); }

std::int64_t Divisor::degree() const {
  std::int64_t d = 0;
  for (const auto& [p, w] : w_) d += w;
  return d;
}

bool Divisor::is_effective() const {
  return std::all_of(w_.begin(), w_.end(), [](const auto& kv) { return kv.second > 0; });
}

std::vector<Place> Divisor::support() const {
  std::vector<Place> out;
  out.reserve(w_.size());
  for (const auto& [p, w] : w_) out.push_back(p);
  return out;
}

Divisor& Divisor::operator+=(const Divisor& o) {
  for (const auto& [p, w] : o.w_) add(p, w);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  for (const auto& [p, w] : o.w_) add(p, -w);
  return *this;
}

Divisor operator*(int k, Divisor a) {
  if (k == 0) return Divisor{};
  for (auto& [p, w] : a.w_) w *= k;
  return a;
}

// ---- FunctionExpr ---------------------------------------------------------

FunctionExpr FunctionExpr::constant(Fe c) {
  FunctionExpr f;
  f.scalar = c;
  return f;
}

FunctionExpr FunctionExpr::of(const Atom& a, int exponent) {
  FunctionExpr f;
  if (exponent != 0) f.factors.emplace_back(a, exponent);
  return f;
}

FunctionExpr& FunctionExpr::operator*=(const FunctionExpr& o) {
  // scalar product needs a field; callers combine scalars through
  // FunctionField helpers, so a non-unit scalar on both sides is a bug
  if (o.scalar != Fe{1}) {
    if (scalar != Fe{1}) throw Error("FunctionExpr product of two non-unit scalars");
    scalar = o.scalar;
  }
  std::vector<std::pair<Atom, int>> merged;
  merged.reserve(factors.size() + o.factors.size());
  auto i = factors.begin();
  auto j = o.factors.begin();
  while (i != factors.end() || j != o.factors.end()) {
    if (j == o.factors.end() || (i != factors.end() && i->first < j->first)) {
      merged.push_back(*i++);
    } else if (i == factors.end() || j->first < i->first) {
      merged.push_back(*j++);
    } else {
      const int e = i->second + j->second;
      if (e != 0) merged.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  factors = std::move(merged);
  return *this;
}

FunctionExpr FunctionExpr::pow(int n) const {
  if (scalar != Fe{1} && n != 1) throw Error("FunctionExpr::pow with a non-unit scalar");
  FunctionExpr r;
  r.scalar = scalar;
  if (n == 0) return r;
  for (const auto& [a, e] : factors) r.factors.emplace_back(a, e * n);
  return r;
}

int FunctionExpr::exponent(const Atom& a) const {
  for (const auto& [b, e] : factors) {
    if (b == a) return e;
  }
  return 0;
}

// ---- FunctionField --------------------------------------------------------

FunctionField::FunctionField(const CurveTable& curve)
    : curve_(curve), q_(static_cast<std::int64_t>(curve.q())) {}

Atom FunctionField::x_minus(Fe alpha) const {
  const Atom a{AtomKind::XMinus, alpha, {}};
  validate(a);
  return a;
}

Atom FunctionField::z_minus(Fe c) const {
  if (c == field().zero()) return z();
  const Atom a{AtomKind::ZMinus, c, {}};
  validate(a);
  return a;
}

Atom FunctionField::tangent(Place p) const {
  const Atom a{AtomKind::Tangent, {}, p};
  validate(a);
  return a;
}

void FunctionField::validate(const Atom& a) const {
  const FieldTower& f = field();
  switch (a.kind) {
    case AtomKind::X:
    case AtomKind::Y:
    case AtomKind::Z:
      if (a.param != Fe{} || a.point != Place{}) throw Error("coordinate atom carries parameters");
      return;
    case AtomKind::XMinus: {
      if (a.param.index >= f.size()) throw Error("x - alpha: foreign field element");
      if (a.point != Place{}) throw Error("x - alpha carries a point");
      if (f.in_subfield(a.param, 2 * f.e())) return;
      const auto fiber = curve_.plane_section_x(a.param).size();
      if (fiber != static_cast<std::size_t>(q_ * q_ * q_ + 1)) {
        throw Error("x - alpha: the plane X = alpha is not a full rational fiber");
      }
      return;
    }
    case AtomKind::ZMinus:
      if (a.point != Place{}) throw Error("z - c carries a point");
      if (a.param == f.zero() || !curve_.in_gamma0(a.param)) {
        throw Error("z - c needs c in Gamma_0 minus {0}");
      }
      return;
    case AtomKind::Tangent:
      if (a.param != Fe{}) throw Error("tangent atom carries a field parameter");
      if (a.point.id >= curve_.size() || curve_.is_infinity(a.point) || !curve_.in_orbit1(a.point)) {
        throw Error("tangent atom needs an affine point of O1");
      }
      return;
  }
  throw Error("unknown atom kind");
}

int FunctionField::atom_valuation(const Atom& a, Place p) const {
  const FieldTower& f = field();
  const std::int64_t q = q_;
  const int q3p1 = static_cast<int>(q * q * q + 1);
  const int m = static_cast<int>(q * q - q + 1);
  const bool inf = curve_.is_infinity(p);
  const CurvePoint& pt = curve_.point(p);
  switch (a.kind) {
    case AtomKind::X:
      if (inf) return -q3p1;
      return p == curve_.origin() ? q3p1 : 0;
    case AtomKind::Y:
      if (inf) return -static_cast<int>(q) * m;
      return pt.y == f.zero() ? m : 0;
    case AtomKind::Z:
      if (inf) return -static_cast<int>(q * q * q);
      return pt.z == f.zero() ? 1 : 0;
    case AtomKind::XMinus: {
      if (inf) return -q3p1;
      if (pt.x != a.param) return 0;
      if (!f.in_subfield(a.param, 2 * f.e())) return 1;
      const Fe trace = f.add(f.pow(a.param, q), a.param);
      return trace == f.zero() ? q3p1 : m;
    }
    case AtomKind::ZMinus:
      if (inf) return -static_cast<int>(q * q * q);
      return pt.z == a.param ? 1 : 0;
    case AtomKind::Tangent:
      if (inf) return -q3p1;
      return p == a.point ? q3p1 : 0;
  }
  throw Error("unknown atom kind");
}

Divisor FunctionField::principal_divisor(const Atom& a) const {
  validate(a);
  const FieldTower& f = field();
  Divisor d;
  const Place inf = curve_.infinity();
  d.set(inf, atom_valuation(a, inf));
  auto add_places = [&](std::span<const Place> places) {
    for (Place p : places) {
      const int v = atom_valuation(a, p);
      if (v != 0) d.set(p, v);
    }
  };
  switch (a.kind) {
    case AtomKind::X:
      d.set(curve_.origin(), atom_valuation(a, curve_.origin()));
      break;
    case AtomKind::Y:
    case AtomKind::Z:
      add_places(curve_.plane_section_z(f.zero()));
      break;
    case AtomKind::XMinus:
      add_places(curve_.plane_section_x(a.param));
      break;
    case AtomKind::ZMinus:
      add_places(curve_.plane_section_z(a.param));
      break;
    case AtomKind::Tangent:
      d.set(a.point, atom_valuation(a, a.point));
      break;
  }
  return d;
}

Fe FunctionField::atom_value(const Atom& a, Place p) const {
  if (curve_.is_infinity(p)) throw Error("atom_value at P_inf");
  const FieldTower& f = field();
  const CurvePoint& pt = curve_.point(p);
  switch (a.kind) {
    case AtomKind::X: return pt.x;
    case AtomKind::Y: return pt.y;
    case AtomKind::Z: return pt.z;
    case AtomKind::XMinus: return f.sub(pt.x, a.param);
    case AtomKind::ZMinus: return f.sub(pt.z, a.param);
    case AtomKind::Tangent: {
      const CurvePoint& t = curve_.point(a.point);
      return f.add(f.sub(pt.x, f.mul(f.pow(t.y, q_), pt.y)), f.pow(t.x, q_));
    }
  }
  throw Error("unknown atom kind");
}

Divisor FunctionField::divisor_of(const FunctionExpr& fn) const {
  if (fn.scalar == field().zero()) throw Error("divisor of the zero function");
  Divisor d;
  for (const auto& [a, e] : fn.factors) d += e * principal_divisor(a);
  return d;
}

int FunctionField::valuation(const FunctionExpr& fn, Place p) const {
  if (fn.scalar == field().zero()) throw Error("valuation of the zero function");
  int v = 0;
  for (const auto& [a, e] : fn.factors) v += e * atom_valuation(a, p);
  return v;
}

int FunctionField::valuation(const FunctionSum& fn, Place p) const {
  if (fn.terms.empty()) throw Error("valuation of the empty sum");
  int v = valuation(fn.terms.front(), p);
  for (const auto& t : fn.terms) v = std::min(v, valuation(t, p));
  return v;
}

LocalExpansion FunctionField::compute_affine_expansion(const CurvePoint& pt, int n) const {
  const FieldTower& f = field();
  const std::int64_t q = q_;
  const std::int64_t m = q * q - q + 1;
  const unsigned e = f.e();
  const Fe a = pt.x, b = pt.y, c = pt.z;

  // z = c + t; y = b + Y with Y^{q^2} - Y = (c + t)^m - c^m
  const Laurent z = series::add_constant(f, series::variable(n), c);
  const Laurent r = series::sub(f, series::pow(f, z, m), series::constant(f.pow(c, m), n));
  Laurent big_y = series::constant(f.zero(), n);
  for (int it = 0;; ++it) {
    Laurent next = series::sub(f, series::frobenius_power(f, big_y, 2 * e), r);
    next = series::truncate(next, n);
    if (next.order == big_y.order && next.coeffs == big_y.coeffs) break;
    if (it > n + 2) throw Error("Hensel lift for y did not converge");
    big_y = std::move(next);
  }
  const Laurent y = series::add_constant(f, big_y, b);

  // x = a + X with X^q + X = y^{q+1} - b^{q+1}
  const Laurent norm = series::mul(f, series::frobenius_power(f, y, e), y);
  const Laurent s = series::truncate(
      series::sub(f, norm, series::constant(f.pow(b, q + 1), n)), n);
  Laurent big_x = series::constant(f.zero(), n);
  for (int it = 0;; ++it) {
    Laurent next = series::truncate(series::sub(f, s, series::frobenius_power(f, big_x, e)), n);
    if (next.order == big_x.order && next.coeffs == big_x.coeffs) break;
    if (it > n + 2) throw Error("Hensel lift for x did not converge");
    big_x = std::move(next);
  }
  const Laurent x = series::add_constant(f, big_x, a);
  return LocalExpansion{x, y, z};
}

LocalExpansion FunctionField::expansion_cached(Place p, int n) const {
  {
    std::lock_guard lock(cache_mutex_);
    const auto it = cache_.find(p);
    if (it != cache_.end() && it->second.x.precision() >= n) {
      const LocalExpansion& l = it->second;
      return LocalExpansion{series::truncate(l.x, n), series::truncate(l.y, n),
                            series::truncate(l.z, n)};
    }
  }
  // grow geometrically so repeated small increases stay cheap
  int target = n;
  {
    std::lock_guard lock(cache_mutex_);
    const auto it = cache_.find(p);
    if (it != cache_.end()) target = std::max(n, 2 * it->second.x.precision());
  }
  LocalExpansion l;
  if (curve_.is_infinity(p)) {
    const LocalExpansion o = expansion_cached(curve_.origin(), target);
    l = LocalExpansion{series::negate_variable(field(), o.x), series::negate_variable(field(), o.y),
                       series::variable(target)};
  } else {
    l = compute_affine_expansion(curve_.point(p), target);
  }
  {
    std::lock_guard lock(cache_mutex_);
    auto& slot = cache_[p];
    if (slot.x.precision() < l.x.precision()) slot = l;
  }
  return LocalExpansion{series::truncate(l.x, n), series::truncate(l.y, n), series::truncate(l.z, n)};
}

LocalExpansion FunctionField::local_expansion(Place p, int precision) const {
  if (p.id >= curve_.size()) throw Error("unknown place");
  if (precision < 1) throw Error("local expansion precision must be positive");
  return expansion_cached(p, precision);
}

std::array<Laurent, 3> FunctionField::coordinate_series(Place p, int relative) const {
  const FieldTower& f = field();
  const int n = relative + static_cast<int>(q_ * q_ * q_ + 1);
  const LocalExpansion l = local_expansion(p, n);
  if (!curve_.is_infinity(p)) return {l.x, l.y, l.z};
  const Laurent inv = series::inverse(f, l.x);
  return {inv, series::mul(f, l.y, inv), series::mul(f, l.z, inv)};
}

Laurent FunctionField::atom_from_coordinates(const Atom& a, const std::array<Laurent, 3>& xyz) const {
  const FieldTower& f = field();
  switch (a.kind) {
    case AtomKind::X: return xyz[0];
    case AtomKind::Y: return xyz[1];
    case AtomKind::Z: return xyz[2];
    case AtomKind::XMinus: return series::add_constant(f, xyz[0], f.neg(a.param));
    case AtomKind::ZMinus: return series::add_constant(f, xyz[2], f.neg(a.param));
    case AtomKind::Tangent: {
      const CurvePoint& t = curve_.point(a.point);
      const Laurent l = series::sub(f, xyz[0], series::scale(f, xyz[1], f.pow(t.y, q_)));
      return series::add_constant(f, l, f.pow(t.x, q_));
    }
  }
  throw Error("unknown atom kind");
}

// Each atom times 1/x is a polynomial in (1/x, y/x, z/x).
Laurent FunctionField::numerator_at_infinity(const Atom& a, const LocalExpansion& inf) const {
  const FieldTower& f = field();
  const int n = inf.x.precision();
  switch (a.kind) {
    case AtomKind::X: return series::constant(f.one(), n);
    case AtomKind::Y: return inf.y;
    case AtomKind::Z: return inf.z;
    case AtomKind::XMinus:
      return series::add_constant(f, series::scale(f, inf.x, f.neg(a.param)), f.one());
    case AtomKind::ZMinus: return series::sub(f, inf.z, series::scale(f, inf.x, a.param));
    case AtomKind::Tangent: {
      const CurvePoint& t = curve_.point(a.point);
      const Laurent l = series::sub(f, series::scale(f, inf.x, f.pow(t.x, q_)),
                                    series::scale(f, inf.y, f.pow(t.y, q_)));
      return series::add_constant(f, l, f.one());
    }
  }
  throw Error("unknown atom kind");
}

Laurent FunctionField::atom_series(const Atom& a, Place p, int relative) const {
  validate(a);
  if (relative < 1) throw Error("atom_series needs positive relative precision");
  const FieldTower& f = field();
  const int v = atom_valuation(a, p);
  Laurent s;
  if (curve_.is_infinity(p)) {
    const int q3p1 = static_cast<int>(q_ * q_ * q_ + 1);
    const int n = relative + std::max(q3p1, v + q3p1);
    const LocalExpansion l = local_expansion(p, n);
    s = series::mul(f, numerator_at_infinity(a, l), series::inverse(f, l.x));
  } else {
    const LocalExpansion l = local_expansion(p, v + relative);
    s = atom_from_coordinates(a, {l.x, l.y, l.z});
  }
  const auto sv = series::valuation(s);
  if (!sv || *sv != v) {
    std::ostringstream msg;
    msg << "series valuation of " << to_string(a) << " at place " << p.id
        << " disagrees with its divisor (" << v << ")";
    throw Error(msg.str());
  }
  return series::normalize(std::move(s));
}

Fe FunctionField::laurent_coefficient(const FunctionExpr& fn, Place p, int j) const {
  const FieldTower& f = field();
  const int v = valuation(fn, p);
  if (j < v) return f.zero();
  const int rel = j - v + 1;
  Laurent unit = series::constant(fn.scalar, rel);
  for (const auto& [a, e] : fn.factors) {
    Laurent s = atom_series(a, p, rel);
    s.coeffs.resize(static_cast<std::size_t>(rel));
    s.order = 0;
    unit = series::mul(f, unit, series::pow(f, s, e));
  }
  return unit.coeffs.size() == static_cast<std::size_t>(rel) ? unit.coeffs.back() : f.zero();
}

Fe FunctionField::laurent_coefficient(const FunctionSum& fn, Place p, int j) const {
  const FieldTower& f = field();
  Fe acc = f.zero();
  for (const auto& t : fn.terms) {
    if (t.scalar == f.zero()) continue;
    acc = f.add(acc, laurent_coefficient(t, p, j));
  }
  return acc;
}

Fe FunctionField::evaluate(const FunctionExpr& fn, Place p) const {
  const FieldTower& f = field();
  if (fn.scalar == f.zero()) return f.zero();
  if (!curve_.is_infinity(p)) {
    bool all_units = true;
    for (const auto& [a, e] : fn.factors) {
      if (atom_valuation(a, p) != 0) {
        all_units = false;
        break;
      }
    }
    if (all_units) {
      Fe r = fn.scalar;
      for (const auto& [a, e] : fn.factors) r = f.mul(r, f.pow(atom_value(a, p), e));
      return r;
    }
  }
  const int v = valuation(fn, p);
  if (v < 0) throw Error("evaluate: function has a pole at the place");
  if (v > 0) return f.zero();
  return laurent_coefficient(fn, p, 0);
}

Fe FunctionField::evaluate(const FunctionSum& fn, Place p) const {
  const FieldTower& f = field();
  Fe acc = f.zero();
  for (const auto& t : fn.terms) {
    if (t.scalar == f.zero()) continue;
    if (valuation(t, p) < 0) return evaluate_by_series(fn, p);
    acc = f.add(acc, evaluate(t, p));
  }
  return acc;
}

Fe FunctionField::evaluate_by_series(const FunctionSum& fn, Place p) const {
  return leading_coefficient(fn, p, 0);
}

Fe FunctionField::leading_coefficient(const FunctionSum& fn, Place p, int b) const {
  const FieldTower& f = field();
  if (fn.terms.empty()) return f.zero();
  const int low = valuation(fn, p);
  for (int j = low; j < -b; ++j) {
    if (laurent_coefficient(fn, p, j) != f.zero()) {
      std::ostringstream msg;
      msg << "function has valuation " << j << " < " << -b << " at place " << p.id;
      throw Error(msg.str());
    }
  }
  return laurent_coefficient(fn, p, -b);
}

std::string FunctionField::to_string(const Atom& a) const {
  std::ostringstream s;
  switch (a.kind) {
    case AtomKind::X: s << "x"; break;
    case AtomKind::Y: s << "y"; break;
    case AtomKind::Z: s << "z"; break;
    case AtomKind::XMinus: s << "(x-#" << a.param.index << ")"; break;
    case AtomKind::ZMinus: s << "(z-#" << a.param.index << ")"; break;
    case AtomKind::Tangent: s << "T@" << a.point.id; break;
  }
  return s.str();
}

std::string FunctionField::to_string(const FunctionExpr& fn) const {
  std::ostringstream s;
  s << "#" << fn.scalar.index;
  for (const auto& [a, e] : fn.factors) {
    s << "*" << to_string(a);
    if (e != 1) s << "^" << e;
  }
  return s.str();
}

}  // namespace gkcodes
