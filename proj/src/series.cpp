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

#include "gkcodes/series.hpp"

#include <algorithm>

namespace gkcodes {

Fe Laurent::coefficient(int j) const {
  if (j >= precision()) throw Error("series coefficient beyond known precision");
  if (j < order) return Fe{0};
  return coeffs[static_cast<std::size_t>(j - order)];
}

namespace series {

Laurent constant(Fe c, int precision) {
  Laurent r;
  r.order = 0;
  r.coeffs.assign(static_cast<std::size_t>(std::max(precision, 0)), Fe{0});
  if (!r.coeffs.empty()) r.coeffs[0] = c;
  return r;
}

Laurent variable(int precision) {
  Laurent r;
  r.order = 1;
  r.coeffs.assign(static_cast<std::size_t>(std::max(precision - 1, 0)), Fe{0});
  if (!r.coeffs.empty()) r.coeffs[0] = Fe{1};
  return r;
}

Laurent add(const FieldTower& f, const Laurent& a, const Laurent& b) {
  Laurent r;
  r.order = std::min(a.order, b.order);
  const int prec = std::min(a.precision(), b.precision());
  r.coeffs.assign(static_cast<std::size_t>(std::max(prec - r.order, 0)), Fe{0});
  for (int j = r.order; j < prec; ++j) {
    r.coeffs[static_cast<std::size_t>(j - r.order)] = f.add(a.coefficient(j), b.coefficient(j));
  }
  return r;
}

Laurent scale(const FieldTower& f, const Laurent& a, Fe c) {
  Laurent r = a;
  for (auto& x : r.coeffs) x = f.mul(x, c);
  return r;
}

Laurent sub(const FieldTower& f, const Laurent& a, const Laurent& b) {
  return add(f, a, scale(f, b, f.neg(f.one())));
}

Laurent add_constant(const FieldTower& f, const Laurent& a, Fe c) {
  return add(f, a, constant(c, std::max(a.precision(), 1)));
}

Laurent normalize(Laurent a) {
  std::size_t lead = 0;
  while (lead < a.coeffs.size() && a.coeffs[lead] == Fe{0}) ++lead;
  a.order += static_cast<int>(lead);
  a.coeffs.erase(a.coeffs.begin(), a.coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
  return a;
}

std::optional<int> valuation(const Laurent& a) {
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] != Fe{0}) return a.order + static_cast<int>(i);
  }
  return std::nullopt;
}

Laurent truncate(Laurent a, int precision) {
  if (precision < a.precision()) {
    a.coeffs.resize(static_cast<std::size_t>(std::max(precision - a.order, 0)));
  }
  return a;
}

Laurent mul(const FieldTower& f, const Laurent& a0, const Laurent& b0) {
  const Laurent a = normalize(a0);
  const Laurent b = normalize(b0);
  Laurent r;
  r.order = a.order + b.order;
  // relative precision is limited by the less precise factor
  const std::size_t len = std::min(a.coeffs.size(), b.coeffs.size());
  r.coeffs.assign(len, Fe{0});
  for (std::size_t i = 0; i < len; ++i) {
    if (a.coeffs[i] == Fe{0}) continue;
    for (std::size_t j = 0; i + j < len; ++j) {
      r.coeffs[i + j] = f.add(r.coeffs[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return r;
}

Laurent inverse(const FieldTower& f, const Laurent& a0) {
  const Laurent a = normalize(a0);
  if (a.coeffs.empty()) throw Error("inverse of a series with no known nonzero coefficient");
  const std::size_t len = a.coeffs.size();
  Laurent r;
  r.order = -a.order;
  r.coeffs.assign(len, Fe{0});
  const Fe lead_inv = f.inv(a.coeffs[0]);
  r.coeffs[0] = lead_inv;
  for (std::size_t k = 1; k < len; ++k) {
    Fe acc{0};
    for (std::size_t i = 1; i <= k; ++i) acc = f.add(acc, f.mul(a.coeffs[i], r.coeffs[k - i]));
    r.coeffs[k] = f.neg(f.mul(acc, lead_inv));
  }
  return r;
}

Laurent pow(const FieldTower& f, const Laurent& a, std::int64_t n) {
  if (n < 0) return pow(f, inverse(f, a), -n);
  Laurent base = normalize(a);
  Laurent r = constant(f.one(), static_cast<int>(base.coeffs.size()));
  while (n > 0) {
    if (n & 1) r = mul(f, r, base);
    n >>= 1;
    if (n > 0) base = mul(f, base, base);
  }
  return r;
}

Laurent negate_variable(const FieldTower& f, const Laurent& a) {
  Laurent r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    if ((r.order + static_cast<int>(i)) % 2 != 0) r.coeffs[i] = f.neg(r.coeffs[i]);
  }
  return r;
}

Laurent frobenius_power(const FieldTower& f, const Laurent& a, unsigned k) {
  if (a.order < 0) throw Error("frobenius_power needs a power series");
  const std::int64_t step = static_cast<std::int64_t>(ipow(f.p(), k));
  const std::int64_t prec = a.precision();
  Laurent r;
  r.order = 0;
  // (sum c_i t^i)^{p^k} is known to t^{p^k * prec}; keep at most prec terms
  r.coeffs.assign(static_cast<std::size_t>(prec), Fe{0});
  for (std::int64_t i = a.order; i < prec; ++i) {
    const std::int64_t j = i * step;
    if (j >= prec) break;
    r.coeffs[static_cast<std::size_t>(j)] = f.frobenius(a.coeffs[static_cast<std::size_t>(i - a.order)],
                                                        static_cast<std::int64_t>(k));
  }
  return r;
}

}  // namespace series
}  // namespace gkcodes
