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

#include "gkcodes/perm_group.hpp"

#include <optional>
#include <stdexcept>

#include "gkcodes/field_tower.hpp"

namespace gkcodes {

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error("composing permutations of different degree");
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Permutation inverse(const Permutation& a) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint32_t>(i);
  return r;
}

bool is_identity(const Permutation& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != i) return false;
  }
  return true;
}

void check_permutation(const Permutation& a) {
  std::vector<bool> hit(a.size(), false);
  for (auto x : a) {
    if (x >= a.size() || hit[x]) throw Error("not a permutation");
    hit[x] = true;
  }
}

namespace {

constexpr int kNotInOrbit = -1;
constexpr int kBasePoint = -2;

class SchreierSims {
 public:
  SchreierSims(std::size_t n, std::uint64_t budget) : n_(n), budget_(budget) {}

  bool run(const std::vector<Permutation>& gens) {
    for (const auto& g : gens) {
      if (is_identity(g)) continue;
      bool moves_base = false;
      for (auto b : base_) moves_base = moves_base || g[b] != b;
      if (!moves_base) base_.push_back(first_moved(g));
      add_strong(g);
    }
    levels_.resize(base_.size());
    for (std::size_t i = 0; i < base_.size(); ++i) {
      for (std::size_t s = 0; s < strong_.size(); ++s) {
        bool fixes = true;
        for (std::size_t b = 0; b < i; ++b) fixes = fixes && strong_[s][base_[b]] == base_[b];
        if (fixes) levels_[i].gens.push_back(s);
      }
      rebuild_level(i);
    }

    std::size_t i = base_.size();
    while (i-- > 0) {
      std::optional<std::size_t> restart;
      // Schreier generators u_β s u_{β^s}^{-1} for the level-i orbit
      for (std::size_t oi = 0; oi < levels_[i].orbit.size() && !restart; ++oi) {
        const std::uint32_t beta = levels_[i].orbit[oi];
        for (std::size_t si = 0; si < levels_[i].gens.size() && !restart; ++si) {
          if (++sifted_ > budget_) return false;
          const std::size_t s = levels_[i].gens[si];
          Permutation h = compose(transversal(i, beta), strong_[s]);
          strip_level(i, h);
          auto [res, j] = sift(h, i + 1);
          if (is_identity(res)) continue;
          if (j == base_.size()) {
            base_.push_back(first_moved(res));
            levels_.emplace_back();
          }
          const std::size_t idx = add_strong(res);
          for (std::size_t l = i + 1; l <= j; ++l) {
            levels_[l].gens.push_back(idx);
            rebuild_level(l);
          }
          restart = j;
        }
      }
      // resume at the deepest level that changed
      if (restart) i = *restart + 1;
    }
    return true;
  }

  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (const auto& l : levels_) o *= l.orbit.size();
    return o;
  }

 private:
  struct Level {
    std::vector<std::size_t> gens;  // indices into strong_
    std::vector<std::uint32_t> orbit;
    std::vector<int> schreier;      // generator index reaching a point, or a marker
  };

  static std::uint32_t first_moved(const Permutation& g) {
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (g[x] != x) return static_cast<std::uint32_t>(x);
    }
    throw Error("identity has no moved point");
  }

  std::size_t add_strong(const Permutation& g) {
    strong_.push_back(g);
    strong_inv_.push_back(inverse(g));
    return strong_.size() - 1;
  }

  void rebuild_level(std::size_t i) {
    Level& l = levels_[i];
    l.schreier.assign(n_, kNotInOrbit);
    l.orbit.assign(1, base_[i]);
    l.schreier[base_[i]] = kBasePoint;
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      const std::uint32_t x = l.orbit[k];
      for (std::size_t s : l.gens) {
        const std::uint32_t y = strong_[s][x];
        if (l.schreier[y] == kNotInOrbit) {
          l.schreier[y] = static_cast<int>(s);
          l.orbit.push_back(y);
        }
      }
    }
  }

  // element mapping base_[i] to x
  Permutation transversal(std::size_t i, std::uint32_t x) const {
    std::vector<std::size_t> word;
    while (levels_[i].schreier[x] != kBasePoint) {
      const auto s = static_cast<std::size_t>(levels_[i].schreier[x]);
      word.push_back(s);
      x = strong_inv_[s][x];
    }
    Permutation u = identity_permutation(n_);
    for (auto it = word.rbegin(); it != word.rend(); ++it) u = compose(u, strong_[*it]);
    return u;
  }

  // h maps base_[i] into the level-i orbit; multiply by inverse generators
  // until base_[i] is fixed
  void strip_level(std::size_t i, Permutation& h) const {
    std::uint32_t x = h[base_[i]];
    while (levels_[i].schreier[x] != kBasePoint) {
      const auto s = static_cast<std::size_t>(levels_[i].schreier[x]);
      h = compose(h, strong_inv_[s]);
      x = h[base_[i]];
    }
  }

  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const {
    for (std::size_t i = from; i < base_.size(); ++i) {
      if (levels_[i].schreier[g[base_[i]]] == kNotInOrbit) return {g, i};
      strip_level(i, g);
    }
    return {g, base_.size()};
  }

  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t sifted_ = 0;
  std::vector<std::uint32_t> base_;
  std::vector<Permutation> strong_, strong_inv_;
  std::vector<Level> levels_;
};

}  // namespace

GroupOrder permutation_group_order(const std::vector<Permutation>& gens, std::uint64_t budget) {
  if (gens.empty()) return GroupOrder{1, true};
  const std::size_t n = gens.front().size();
  for (const auto& g : gens) {
    if (g.size() != n) throw Error("generators act on different point sets");
    check_permutation(g);
  }
  SchreierSims ss(n, budget);
  const bool done = ss.run(gens);
  return GroupOrder{ss.order(), done};
}

}  // namespace gkcodes
