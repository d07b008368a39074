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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "gkcodes/field_tower.hpp"

using namespace gkcodes;

namespace {

// carry-less product of two GF(2)[w] residues, reduced by a degree-n modulus
std::uint32_t gf2_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus_bits, unsigned n) {
  std::uint32_t r = 0;
  for (unsigned i = 0; i < n; ++i) {
    if ((b >> i) & 1U) r ^= a << i;
  }
  for (unsigned d = 2 * n; d-- > n;) {
    if ((r >> d) & 1U) r ^= modulus_bits << (d - n);
  }
  return r;
}

// schoolbook product in F_p[w]/(modulus) on digit vectors
std::vector<std::uint32_t> poly_mul_mod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                        const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t n = modulus.size() - 1;
  std::vector<std::uint32_t> r(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = 2 * n - 1; d >= n; --d) {
    const std::uint32_t c = r[d];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= n; ++k) r[d - n + k] = (r[d - n + k] + p * p - c * modulus[k]) % p;
  }
  r.resize(n);
  return r;
}

int mobius(unsigned n) {
  int mu = 1;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

// number of monic irreducible polynomials of degree n over F_p (necklace count)
std::uint64_t irreducible_count(std::uint32_t p, unsigned n) {
  std::int64_t sum = 0;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d == 0) sum += mobius(d) * static_cast<std::int64_t>(ipow(p, n / d));
  }
  return static_cast<std::uint64_t>(sum) / n;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto pr : prime_factors(n)) r = r / pr * (pr - 1);
  return r;
}

}  // namespace

TEST_CASE("primality and factoring helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(727));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(729));
  CHECK(prime_factors(728) == std::vector<std::uint64_t>{2, 7, 13});
  CHECK(prime_factors(63) == std::vector<std::uint64_t>{3, 7});
  CHECK(ipow(3, 6) == 729);
  CHECK_THROWS_AS(ipow(2, 70), Error);
}

TEST_CASE("irreducible and primitive polynomial counts match the necklace formulas") {
  for (auto [p, n] : {std::pair{2U, 6U}, std::pair{2U, 4U}, std::pair{3U, 3U}}) {
    std::uint64_t irreducible = 0, primitive = 0;
    const std::uint64_t total = ipow(p, n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<std::uint32_t> poly(n + 1, 0);
      std::uint64_t v = idx;
      for (unsigned i = 0; i < n; ++i, v /= p) poly[i] = static_cast<std::uint32_t>(v % p);
      poly[n] = 1;
      irreducible += is_irreducible_mod_p(p, poly) ? 1 : 0;
      primitive += is_primitive_mod_p(p, poly) ? 1 : 0;
    }
    CHECK(irreducible == irreducible_count(p, n));
    CHECK(primitive == euler_phi(total - 1) / n);
  }
}

TEST_CASE("default moduli are the smallest primitive polynomials") {
  CHECK(smallest_primitive_polynomial(2, 6) == std::vector<std::uint32_t>{1, 1, 0, 0, 0, 0, 1});
  const auto m3 = smallest_primitive_polynomial(3, 6);
  CHECK(is_primitive_mod_p(3, m3));
  // nothing smaller in canonical order is primitive
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < 6; ++i) index += m3[i] * ipow(3, static_cast<unsigned>(i));
  for (std::uint64_t idx = 0; idx < index; ++idx) {
    std::vector<std::uint32_t> poly(7, 0);
    std::uint64_t v = idx;
    for (int i = 0; i < 6; ++i, v /= 3) poly[i] = static_cast<std::uint32_t>(v % 3);
    poly[6] = 1;
    CHECK_FALSE(is_primitive_mod_p(3, poly));
  }
}

TEST_CASE("F_64 multiplication agrees with carry-less arithmetic on all pairs") {
  const FieldTower f = FieldTower::make(2, 1);
  REQUIRE(f.size() == 64);
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < f.modulus().size(); ++i) bits |= f.modulus()[i] << i;
  for (std::uint32_t a = 0; a < 64; ++a) {
    for (std::uint32_t b = 0; b < 64; ++b) {
      REQUIRE(f.mul(Fe{a}, Fe{b}).index == gf2_mul(a, b, bits, 6));
      REQUIRE(f.add(Fe{a}, Fe{b}).index == (a ^ b));
    }
  }
}

TEST_CASE("F_729 arithmetic agrees with schoolbook polynomial arithmetic") {
  const FieldTower f = FieldTower::make(3, 1);
  REQUIRE(f.size() == 729);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20000; ++i) {
    const Fe a{static_cast<std::uint32_t>(rng() % 729)}, b{static_cast<std::uint32_t>(rng() % 729)};
    const auto expect = poly_mul_mod(f.coefficients(a), f.coefficients(b), f.modulus(), 3);
    REQUIRE(f.mul(a, b) == f.from_coefficients(expect));
    const auto ca = f.coefficients(a), cb = f.coefficients(b);
    std::vector<std::uint32_t> sum(6);
    for (int k = 0; k < 6; ++k) sum[k] = (ca[k] + cb[k]) % 3;
    REQUIRE(f.add(a, b) == f.from_coefficients(sum));
  }
}

TEST_CASE("canonical index, logs and constants") {
  const FieldTower f = FieldTower::make(3, 1);
  CHECK(f.zero().index == 0);
  CHECK(f.one().index == 1);
  CHECK(f.from_int(-1).index == 2);
  CHECK(f.from_int(4) == f.one());
  CHECK(f.element(728).index == 728);
  CHECK_THROWS_AS(f.element(729), Error);
  for (std::uint32_t i = 1; i < f.size(); ++i) {
    REQUIRE(f.exp(f.log(Fe{i})) == Fe{i});
    REQUIRE(f.mul(Fe{i}, f.inv(Fe{i})) == f.one());
  }
  CHECK(f.order(f.generator()) == 728);
  CHECK_THROWS_AS(f.inv(f.zero()), Error);
  CHECK(f.pow(f.zero(), 0) == f.one());
  CHECK(f.pow(f.generator(), -1) == f.inv(f.generator()));
  CHECK(f.description() == "p=3 e=1 modulus=" + [&] {
          std::string s;
          for (std::size_t i = 0; i < f.modulus().size(); ++i) s += (i ? "," : "") + std::to_string(f.modulus()[i]);
          return s;
        }());
}

TEST_CASE("Frobenius and subfields") {
  for (auto p : {2U, 3U}) {
    const FieldTower f = FieldTower::make(p, 1);
    for (std::uint32_t i = 0; i < f.size(); ++i) {
      const Fe x{i};
      REQUIRE(f.frobenius(x, 6) == x);
      REQUIRE(f.frobenius(x, 1) == f.pow(x, p));
      REQUIRE(f.frobenius(f.frobenius(x, 1), -1) == x);
    }
    for (std::uint32_t k : {1U, 2U, 3U, 6U}) {
      std::uint64_t count = 0;
      for (std::uint32_t i = 0; i < f.size(); ++i) count += f.in_subfield(Fe{i}, k) ? 1 : 0;
      CHECK(count == ipow(p, k));
    }
    CHECK_THROWS_AS(f.in_subfield(f.one(), 4), Error);
  }
}

TEST_CASE("roots of unity and power solving") {
  const FieldTower f = FieldTower::make(2, 1);
  for (std::uint64_t n : {1U, 3U, 7U, 9U, 21U, 63U, 5U}) {
    const auto roots = f.nth_roots(n);
    CHECK(roots.size() == std::gcd<std::uint64_t>(n, 63));
    CHECK(std::is_sorted(roots.begin(), roots.end()));
    for (Fe r : roots) CHECK(f.pow(r, static_cast<std::int64_t>(n)) == f.one());
  }
  for (std::uint32_t i = 1; i < 64; ++i) {
    const Fe a{i};
    const Fe cube = f.pow(a, 3);
    const Fe root = f.solve_power(cube, 3);
    CHECK(f.pow(root, 3) == cube);
    CHECK(root <= a);  // minimal index
  }
  CHECK_THROWS_AS(f.solve_power(f.zero(), 3), Error);
  CHECK_THROWS_AS(f.solve_power(f.generator(), 3), Error);
}

TEST_CASE("explicit moduli") {
  CHECK_NOTHROW(FieldTower::with_modulus(2, 1, {1, 1, 0, 0, 0, 0, 1}));
  CHECK_THROWS_AS(FieldTower::with_modulus(2, 1, {1, 0, 0, 0, 0, 0, 1}), Error);
  CHECK_THROWS_AS(FieldTower::with_modulus(2, 1, {1, 1, 0, 1}), Error);
  CHECK_THROWS_AS(FieldTower::make(4, 1), Error);
}
