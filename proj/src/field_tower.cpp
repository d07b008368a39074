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

#include "gkcodes/field_tower.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

namespace gkcodes {

namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime; Fermat.
  std::uint64_t r = 1, b = a % p;
  for (std::uint64_t k = p - 2; k > 0; k >>= 1) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = c * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& m, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (k > 0) {
    if (k & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    k >>= 1;
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^{p^k} mod m by repeated p-th powering.
Poly x_pow_p_pow(std::uint32_t k, const Poly& m, std::uint32_t p) {
  Poly x = poly_mod(Poly{0, 1}, m, p);
  for (std::uint32_t i = 0; i < k; ++i) x = poly_powmod(x, p, m, p);
  return x;
}

Poly sub_x(Poly a, std::uint32_t p) {
  if (a.size() < 2) a.resize(2, 0);
  a[1] = (a[1] + p - 1) % p;
  trim(a);
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exponent) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw Error("integer power overflow");
    }
    r *= base;
  }
  return r;
}

bool is_irreducible_mod_p(std::uint32_t p, std::span<const std::uint32_t> monic) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const auto n = static_cast<std::uint32_t>(f.size() - 1);
  if (n == 1) return true;
  // f | x^{p^n} - x
  Poly xn = sub_x(x_pow_p_pow(n, f, p), p);
  if (!poly_mod(xn, f, p).empty()) return false;
  for (std::uint64_t r : prime_factors(n)) {
    Poly g = poly_gcd(f, sub_x(x_pow_p_pow(static_cast<std::uint32_t>(n / r), f, p), p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

bool is_primitive_mod_p(std::uint32_t p, std::span<const std::uint32_t> monic) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2 || f.back() != 1 || f[0] == 0) return false;
  const auto n = static_cast<unsigned>(f.size() - 1);
  const std::uint64_t order = ipow(p, n) - 1;
  if (poly_powmod(Poly{0, 1}, order, f, p) != Poly{1}) return false;
  for (std::uint64_t r : prime_factors(order)) {
    if (poly_powmod(Poly{0, 1}, order / r, f, p) == Poly{1}) return false;
  }
  // The unit group of a reducible quotient is smaller than p^n - 1, so an
  // element of that order already forces irreducibility.
  return true;
}

std::vector<std::uint32_t> smallest_primitive_polynomial(std::uint32_t p, std::uint32_t n) {
  const std::uint64_t count = ipow(p, n);
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    Poly f(n + 1, 0);
    std::uint64_t v = idx;
    for (std::uint32_t i = 0; i < n; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[n] = 1;
    if (f[0] == 0) continue;
    if (is_primitive_mod_p(p, f)) return f;
  }
  throw Error("no primitive polynomial found");
}

FieldTower FieldTower::make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw Error("extension exponent must be positive");
  const std::uint64_t size = ipow(p, 6 * e);
  if (size > kMaxSize) {
    throw Error("field of size " + std::to_string(size) + " exceeds the enumeration guard 2^26");
  }
  return with_modulus(p, e, smallest_primitive_polynomial(p, 6 * e));
}

FieldTower FieldTower::with_modulus(std::uint32_t p, std::uint32_t e,
                                    std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw Error("extension exponent must be positive");
  const std::uint32_t n = 6 * e;
  const std::uint64_t size = ipow(p, n);
  if (size > kMaxSize) {
    throw Error("field of size " + std::to_string(size) + " exceeds the enumeration guard 2^26");
  }
  if (modulus.size() != n + 1 || modulus.back() != 1) {
    throw Error("modulus must be monic of degree " + std::to_string(n));
  }
  for (auto c : modulus) {
    if (c >= p) throw Error("modulus coefficient out of range");
  }
  if (!is_primitive_mod_p(p, modulus)) {
    throw Error("modulus is not a primitive polynomial over F_" + std::to_string(p));
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->n = n;
  t->q = ipow(p, e);
  t->size = size;
  t->modulus = modulus;

  const std::uint64_t order = size - 1;
  t->exp.resize(2 * order);
  t->log.assign(size, 0);
  std::vector<std::uint32_t> digits(n, 0);
  digits[0] = 1;
  std::vector<std::uint64_t> place(n);
  place[0] = 1;
  for (std::uint32_t i = 1; i < n; ++i) place[i] = place[i - 1] * p;
  for (std::uint64_t k = 0; k < order; ++k) {
    std::uint64_t idx = 0;
    for (std::uint32_t i = 0; i < n; ++i) idx += digits[i] * place[i];
    t->exp[k] = Fe{static_cast<std::uint32_t>(idx)};
    t->log[idx] = static_cast<std::uint32_t>(k);
    // multiply by w and reduce by the monic modulus
    const std::uint32_t top = digits[n - 1];
    for (std::uint32_t i = n - 1; i > 0; --i) digits[i] = digits[i - 1];
    digits[0] = 0;
    if (top != 0) {
      for (std::uint32_t i = 0; i < n; ++i) {
        digits[i] = static_cast<std::uint32_t>(
            (digits[i] + std::uint64_t{p - top} * modulus[i]) % p);
      }
    }
  }
  for (std::uint64_t k = 0; k < order; ++k) t->exp[order + k] = t->exp[k];

  t->neg.resize(size);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    std::uint64_t v = idx, out = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint64_t d = v % p;
      v /= p;
      out += ((p - d) % p) * place[i];
    }
    t->neg[idx] = Fe{static_cast<std::uint32_t>(out)};
  }

  FieldTower tower(t);
  if (p != 2 && size <= 1024) {
    t->add_table.resize(size * size);
    for (std::uint64_t a = 0; a < size; ++a) {
      for (std::uint64_t b = 0; b < size; ++b) {
        t->add_table[a * size + b] = tower.add_digits(Fe{static_cast<std::uint32_t>(a)},
                                                      Fe{static_cast<std::uint32_t>(b)});
      }
    }
  }
  return tower;
}

Fe FieldTower::element(std::uint64_t index) const {
  if (index >= t_->size) throw Error("element index " + std::to_string(index) + " out of range");
  return Fe{static_cast<std::uint32_t>(index)};
}

Fe FieldTower::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(t_->p);
  return Fe{static_cast<std::uint32_t>(((v % p) + p) % p)};
}

std::vector<std::uint32_t> FieldTower::coefficients(Fe x) const {
  std::vector<std::uint32_t> out(t_->n);
  std::uint64_t v = x.index;
  for (auto& c : out) {
    c = static_cast<std::uint32_t>(v % t_->p);
    v /= t_->p;
  }
  return out;
}

Fe FieldTower::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != t_->n) throw Error("coefficient vector has wrong length");
  std::uint64_t idx = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= t_->p) throw Error("coefficient out of range");
    idx = idx * t_->p + coeffs[i];
  }
  return Fe{static_cast<std::uint32_t>(idx)};
}

Fe FieldTower::add_digits(Fe a, Fe b) const {
  const std::uint64_t p = t_->p;
  std::uint64_t x = a.index, y = b.index, out = 0, place = 1;
  for (std::uint32_t i = 0; i < t_->n; ++i) {
    out += ((x % p + y % p) % p) * place;
    x /= p;
    y /= p;
    place *= p;
  }
  return Fe{static_cast<std::uint32_t>(out)};
}

Fe FieldTower::add(Fe a, Fe b) const {
  if (t_->p == 2) return Fe{a.index ^ b.index};
  if (!t_->add_table.empty()) return t_->add_table[std::uint64_t{a.index} * t_->size + b.index];
  return add_digits(a, b);
}

Fe FieldTower::inv(Fe a) const {
  if (a.index == 0) throw Error("inversion of zero");
  const std::uint64_t order = t_->size - 1;
  return t_->exp[(order - t_->log[a.index]) % order];
}

Fe FieldTower::pow(Fe a, std::int64_t n) const {
  if (n == 0) return one();
  if (a.index == 0) {
    if (n < 0) throw Error("inversion of zero");
    return zero();
  }
  const auto order = static_cast<std::int64_t>(t_->size - 1);
  const std::int64_t r = (n % order + order) % order;
  const auto k = static_cast<std::uint64_t>(
      (static_cast<__int128>(t_->log[a.index]) * r) % order);
  return t_->exp[k];
}

std::uint64_t FieldTower::log(Fe a) const {
  if (a.index == 0) throw Error("logarithm of zero");
  return t_->log[a.index];
}

Fe FieldTower::frobenius(Fe x, std::int64_t i) const {
  if (x.index == 0) return x;
  const auto n = static_cast<std::int64_t>(t_->n);
  const auto k = static_cast<unsigned>(((i % n) + n) % n);
  const std::uint64_t order = t_->size - 1;
  std::uint64_t mult = 1;
  for (unsigned j = 0; j < k; ++j) mult = mult * t_->p % order;
  return t_->exp[static_cast<std::uint64_t>(static_cast<__int128>(t_->log[x.index]) * mult % order)];
}

bool FieldTower::in_subfield(Fe x, std::uint32_t k) const {
  if (k == 0 || t_->n % k != 0) {
    throw Error("subfield degree " + std::to_string(k) + " does not divide " + std::to_string(t_->n));
  }
  return frobenius(x, k) == x;
}

std::vector<Fe> FieldTower::nth_roots(std::uint64_t n) const {
  if (n == 0) throw Error("root order must be positive");
  const std::uint64_t order = t_->size - 1;
  const std::uint64_t d = std::gcd(n, order);
  std::vector<Fe> out;
  out.reserve(d);
  for (std::uint64_t k = 0; k < d; ++k) out.push_back(t_->exp[k * (order / d)]);
  std::sort(out.begin(), out.end());
  return out;
}

Fe FieldTower::solve_power(Fe a, std::uint64_t n) const {
  if (a.index == 0) throw Error("solve_power of zero");
  if (n == 0) throw Error("root order must be positive");
  const std::uint64_t order = t_->size - 1;
  const std::uint64_t d = std::gcd(n, order);
  const std::uint64_t la = t_->log[a.index];
  if (la % d != 0) throw Error("element is not an n-th power");
  const std::uint64_t m = order / d;
  const std::uint64_t nn = (n / d) % m;
  // inverse of nn modulo m by extended Euclid
  std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(nn);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t qq = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - qq * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - qq * s1);
  }
  const auto mi = static_cast<std::int64_t>(m);
  const std::uint64_t inv_nn = m == 1 ? 0 : static_cast<std::uint64_t>(((s0 % mi) + mi) % mi);
  const std::uint64_t j0 =
      m == 1 ? 0 : static_cast<std::uint64_t>(static_cast<__int128>(la / d) * inv_nn % m);
  Fe best{std::numeric_limits<std::uint32_t>::max()};
  for (std::uint64_t t = 0; t < d; ++t) best = std::min(best, t_->exp[j0 + t * m]);
  return best;
}

std::uint64_t FieldTower::order(Fe a) const {
  const std::uint64_t group = t_->size - 1;
  return group / std::gcd(std::uint64_t{log(a)}, group);
}

std::string FieldTower::description() const {
  std::ostringstream os;
  os << "p=" << t_->p << " e=" << t_->e << " modulus=";
  for (std::size_t i = 0; i < t_->modulus.size(); ++i) {
    if (i) os << ',';
    os << t_->modulus[i];
  }
  return os.str();
}

}  // namespace gkcodes
