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

#ifndef GKCODES_PERM_GROUP_HPP
#define GKCODES_PERM_GROUP_HPP

#include <cstdint>
#include <vector>

namespace gkcodes {

/// Permutation of {0, ..., n-1}: point i goes to perm[i].
using Permutation = std::vector<std::uint32_t>;

Permutation identity_permutation(std::size_t n);
/// Apply a, then b.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
bool is_identity(const Permutation& a);
/// Throws unless a is a bijection of {0, ..., n-1}.
void check_permutation(const Permutation& a);

struct GroupOrder {
  std::uint64_t order = 1;
  /// False when the budget ran out; order is then a lower bound.
  bool exact = true;
};

/// Order of the group generated by gens, by Schreier–Sims with Schreier
/// vectors. `budget` caps the number of Schreier generators sifted; when it
/// is exhausted the product of the basic orbit lengths found so far is
/// returned as a lower bound.
GroupOrder permutation_group_order(const std::vector<Permutation>& gens, std::uint64_t budget);

}  // namespace gkcodes

#endif  // GKCODES_PERM_GROUP_HPP
