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

#include "gkcodes/gk_curve.hpp"

#include <algorithm>

namespace gkcodes {

bool is_on_curve(const FieldTower& f, const CurvePoint& p) {
  if (p.infinity) return true;
  const auto q = static_cast<std::int64_t>(f.q());
  const bool first = f.pow(p.y, q + 1) == f.add(f.pow(p.x, q), p.x);
  const bool second = f.pow(p.z, q * q - q + 1) == f.sub(f.pow(p.y, q * q), p.y);
  return first && second;
}

namespace {

// Counting-sort bucket of every field element by a key function.
struct Buckets {
  std::vector<std::uint32_t> start;
  std::vector<Fe> items;

  template <typename Key>
  Buckets(std::uint64_t size, Key key) : start(size + 1, 0), items(size) {
    std::vector<std::uint32_t> keys(size);
    for (std::uint64_t i = 0; i < size; ++i) {
      keys[i] = key(Fe{static_cast<std::uint32_t>(i)}).index;
      ++start[keys[i] + 1];
    }
    for (std::uint64_t i = 0; i < size; ++i) start[i + 1] += start[i];
    std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
    for (std::uint64_t i = 0; i < size; ++i) items[fill[keys[i]]++] = Fe{static_cast<std::uint32_t>(i)};
  }

  std::span<const Fe> operator[](Fe k) const {
    return std::span<const Fe>(items).subspan(start[k.index], start[k.index + 1] - start[k.index]);
  }
};

}  // namespace

CurveTable::CurveTable(FieldTower field) : field_(std::move(field)) {
  const FieldTower& f = field_;
  const auto q = static_cast<std::int64_t>(f.q());
  const std::uint64_t size = f.size();
  genus_ = (q * q * q * q * q - 2 * q * q * q + q * q) / 2;

  // b grouped by b^{q+1}; c grouped by c^{q^2-q+1}
  const Buckets by_norm(size, [&](Fe b) { return f.pow(b, q + 1); });
  const Buckets by_zpow(size, [&](Fe c) { return f.pow(c, q * q - q + 1); });

  x_start_.assign(size + 1, 0);
  for (std::uint64_t ai = 0; ai < size; ++ai) {
    const Fe a{static_cast<std::uint32_t>(ai)};
    x_start_[ai] = static_cast<std::uint32_t>(points_.size());
    const Fe trace = f.add(f.pow(a, q), a);
    for (Fe b : by_norm[trace]) {
      const Fe rhs = f.sub(f.pow(b, q * q), b);
      for (Fe c : by_zpow[rhs]) points_.push_back(CurvePoint::affine(a, b, c));
    }
  }
  x_start_[size] = static_cast<std::uint32_t>(points_.size());
  points_.push_back(CurvePoint::at_infinity());

  const auto n_affine = static_cast<std::uint32_t>(points_.size() - 1);
  all_affine_.resize(n_affine);
  for (std::uint32_t i = 0; i < n_affine; ++i) all_affine_[i] = Place{i};
  origin_ = index_of(CurvePoint::affine(f.zero(), f.zero(), f.zero()));

  for (std::uint32_t i = 0; i < n_affine; ++i) {
    (points_[i].z == f.zero() ? orbit1_ : orbit2_).push_back(Place{i});
  }
  orbit1_.push_back(infinity());

  // z-plane sections
  z_start_.assign(size + 1, 0);
  for (std::uint32_t i = 0; i < n_affine; ++i) ++z_start_[points_[i].z.index + 1];
  for (std::uint64_t i = 0; i < size; ++i) z_start_[i + 1] += z_start_[i];
  z_order_.resize(n_affine);
  std::vector<std::uint32_t> fill(z_start_.begin(), z_start_.end() - 1);
  for (std::uint32_t i = 0; i < n_affine; ++i) z_order_[fill[points_[i].z.index]++] = Place{i};

  const std::uint64_t full = static_cast<std::uint64_t>(q * q * q + 1);
  for (std::uint64_t ai = 0; ai < size; ++ai) {
    if (x_start_[ai + 1] - x_start_[ai] == full) full_x_.push_back(Fe{static_cast<std::uint32_t>(ai)});
  }

  gamma0_ = gamma0_by_polynomial();
  if (gamma0_ != gamma0_by_fibers()) {
    throw Error("plane-section count disagrees with the polynomial description of Gamma_0");
  }
  gamma0_mask_.assign(size, false);
  for (Fe c : gamma0_) gamma0_mask_[c.index] = true;
}

std::optional<Place> CurveTable::find(const CurvePoint& p) const {
  if (p.infinity) return infinity();
  if (p.x.index >= field_.size()) return std::nullopt;
  const auto begin = points_.begin() + x_start_[p.x.index];
  const auto end = points_.begin() + x_start_[p.x.index + 1];
  const auto it = std::lower_bound(begin, end, p);
  if (it == end || !(*it == p)) return std::nullopt;
  return Place{static_cast<std::uint32_t>(it - points_.begin())};
}

Place CurveTable::index_of(const CurvePoint& p) const {
  if (auto idx = find(p)) return *idx;
  throw Error("point is not an F_{q^6}-rational point of the curve");
}

bool CurveTable::in_orbit1(Place p) const {
  return is_infinity(p) || points_.at(p.id).z == field_.zero();
}

std::span<const Place> CurveTable::plane_section_x(Fe a) const {
  if (a.index >= field_.size()) throw Error("foreign field element");
  return std::span<const Place>(all_affine_)
      .subspan(x_start_[a.index], x_start_[a.index + 1] - x_start_[a.index]);
}

std::span<const Place> CurveTable::plane_section_z(Fe c) const {
  if (c.index >= field_.size()) throw Error("foreign field element");
  return std::span<const Place>(z_order_)
      .subspan(z_start_[c.index], z_start_[c.index + 1] - z_start_[c.index]);
}

bool CurveTable::in_gamma0(Fe c) const {
  return c.index < gamma0_mask_.size() && gamma0_mask_[c.index];
}

std::vector<Fe> CurveTable::gamma0_by_polynomial() const {
  const FieldTower& f = field_;
  const auto q = static_cast<std::int64_t>(f.q());
  const std::int64_t e1 = (q * q * q + 1) * (q * q - 1);
  const std::int64_t e2 = (q * q * q + 1) * (q * q - q);
  std::vector<Fe> out{f.zero()};
  for (std::uint64_t i = 1; i < f.size(); ++i) {
    const Fe c{static_cast<std::uint32_t>(i)};
    if (f.add(f.add(f.pow(c, e1), f.pow(c, e2)), f.one()) == f.zero()) out.push_back(c);
  }
  return out;
}

std::vector<Fe> CurveTable::gamma0_by_fibers() const {
  const std::uint64_t q3 = q() * q() * q();
  std::vector<Fe> out;
  for (std::uint64_t i = 0; i < field_.size(); ++i) {
    if (z_start_[i + 1] - z_start_[i] == q3) out.push_back(Fe{static_cast<std::uint32_t>(i)});
  }
  return out;
}

}  // namespace gkcodes
