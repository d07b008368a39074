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

#ifndef GKCODES_FIELD_TOWER_HPP
#define GKCODES_FIELD_TOWER_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkcodes {

/// Base exception for every contract violation raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element of F_{p^{6e}} identified by its canonical index: the
/// little-endian coefficient vector (c_0, ..., c_{6e-1}) over F_p read as the
/// base-p integer sum c_i p^i. Index 0 is zero and index 1 is one.
struct Fe {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Fe, Fe) = default;
};

bool is_prime(std::uint64_t n);

/// Distinct prime factors of n in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Rabin's test over F_p: a monic polynomial f of degree n is irreducible iff
/// f divides x^{p^n} - x and gcd(f, x^{p^{n/r}} - x) = 1 for every prime r | n.
/// Coefficients are little-endian; the leading coefficient must be 1.
bool is_irreducible_mod_p(std::uint32_t p, std::span<const std::uint32_t> monic);

/// True iff x has multiplicative order p^n - 1 modulo the monic polynomial f.
bool is_primitive_mod_p(std::uint32_t p, std::span<const std::uint32_t> monic);

/// The lexicographically smallest primitive monic polynomial of degree n
/// over F_p, ordered by the canonical index of its lower coefficients.
std::vector<std::uint32_t> smallest_primitive_polynomial(std::uint32_t p, std::uint32_t n);

/// Arithmetic context for F_p ⊂ F_q ⊂ F_{q^2} ⊂ F_{q^3} ⊂ F_{q^6}, q = p^e,
/// realised as the single flat extension F_p[w]/(modulus) of degree 6e. The
/// subfields are the fixed fields of the Frobenius powers. Arithmetic goes
/// through log/antilog tables with w as the multiplicative generator.
///
/// Copies share the immutable tables, so a FieldTower is cheap to pass by
/// value and safe to use from any number of threads.
class FieldTower {
 public:
  /// Largest supported field size; every suite enumerates the whole field.
  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 26;

  /// Tower for q = p^e with the smallest primitive modulus of degree 6e.
  static FieldTower make(std::uint32_t p, std::uint32_t e);

  /// Tower with an explicit modulus (little-endian, monic, degree 6e). Throws
  /// unless the modulus is primitive.
  static FieldTower with_modulus(std::uint32_t p, std::uint32_t e,
                                 std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return t_->p; }
  std::uint32_t e() const { return t_->e; }
  std::uint64_t q() const { return t_->q; }
  std::uint32_t degree() const { return t_->n; }
  std::uint64_t size() const { return t_->size; }
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }

  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }
  Fe generator() const { return t_->exp[1]; }

  /// Element with the given canonical index; throws when out of range.
  Fe element(std::uint64_t index) const;
  /// Embedding of an integer through F_p.
  Fe from_int(std::int64_t v) const;

  std::vector<std::uint32_t> coefficients(Fe x) const;
  Fe from_coefficients(std::span<const std::uint32_t> coeffs) const;

  Fe add(Fe a, Fe b) const;
  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
  Fe neg(Fe a) const { return t_->neg[a.index]; }
  Fe mul(Fe a, Fe b) const {
    if (a.index == 0 || b.index == 0) return Fe{0};
    return t_->exp[t_->log[a.index] + t_->log[b.index]];
  }
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  /// a^n for any integer n; negative n requires a != 0. 0^0 = 1.
  Fe pow(Fe a, std::int64_t n) const;

  /// Discrete logarithm to base generator(); a must be nonzero.
  std::uint64_t log(Fe a) const;
  Fe exp(std::uint64_t k) const { return t_->exp[k % (t_->size - 1)]; }

  /// x^{p^i}; i may be negative and is taken modulo 6e.
  Fe frobenius(Fe x, std::int64_t i) const;

  /// True iff x lies in F_{p^k}; k must divide 6e.
  bool in_subfield(Fe x, std::uint32_t k) const;

  /// All x with x^n = 1, sorted by canonical index.
  std::vector<Fe> nth_roots(std::uint64_t n) const;

  /// The minimal-index x with x^n = a. Throws for a = 0 or a non-n-th power.
  Fe solve_power(Fe a, std::uint64_t n) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Fe a) const;

  /// "p=2 e=1 modulus=1,1,0,0,0,0,1" (little-endian coefficients).
  std::string description() const;

 private:
  struct Tables {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::uint32_t n = 0;
    std::uint64_t q = 0;
    std::uint64_t size = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<Fe> exp;              // length 2(size-1): no reduction in mul
    std::vector<std::uint32_t> log;   // log[0] unused
    std::vector<Fe> neg;
    std::vector<Fe> add_table;        // size^2 entries for small odd p
  };

  explicit FieldTower(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  Fe add_digits(Fe a, Fe b) const;

  std::shared_ptr<const Tables> t_;
};

/// Integer power with overflow check.
std::uint64_t ipow(std::uint64_t base, unsigned exponent);

}  // namespace gkcodes

#endif  // GKCODES_FIELD_TOWER_HPP
