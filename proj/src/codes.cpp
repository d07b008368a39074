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

#include "gkcodes/codes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gkcodes {

std::string family_name(Family f) {
  switch (f) {
    case Family::C: return "C";
    case Family::Cprime: return "Cprime";
    case Family::Cbar: return "Cbar";
    case Family::Ctilde: return "Ctilde";
  }
  throw Error("unknown family");
}

Family parse_family(const std::string& s) {
  if (s == "C") return Family::C;
  if (s == "Cprime") return Family::Cprime;
  if (s == "Cbar") return Family::Cbar;
  if (s == "Ctilde") return Family::Ctilde;
  throw Error("unknown code family '" + s + "' (expected C, Cprime, Cbar or Ctilde)");
}

std::int64_t delta(std::int64_t q) { return std::gcd<std::int64_t>(3, q + 1); }

std::int64_t plane_symmetry_order(std::int64_t q, std::int64_t s) {
  return std::gcd(s, (q * q - q + 1) / delta(q));
}

bool planes_closed(const CurveTable& curve, const std::vector<Fe>& planes, std::int64_t r) {
  const FieldTower& f = curve.field();
  if (planes.empty()) return true;
  const std::set<Fe> extra(planes.begin() + 1, planes.end());
  const auto roots = f.nth_roots(static_cast<std::uint64_t>(r));
  for (Fe c : extra) {
    if (!extra.contains(f.frobenius(c, 1))) return false;
    for (Fe l : roots) {
      if (!extra.contains(f.mul(l, c))) return false;
    }
  }
  return true;
}

PlaneSelection auto_planes(const CurveTable& curve, int s) {
  const FieldTower& f = curve.field();
  const auto& gamma0 = curve.gamma0();
  if (s < 0 || static_cast<std::size_t>(s) + 1 > gamma0.size()) {
    throw Error("plane count s out of range for Gamma_0");
  }
  const std::int64_t r = plane_symmetry_order(static_cast<std::int64_t>(curve.q()), s);
  const auto roots = f.nth_roots(static_cast<std::uint64_t>(r));

  // orbits of <Frobenius, mu_r> on Gamma_0 \ {0}, ordered by smallest member
  std::vector<std::vector<Fe>> orbits;
  std::set<Fe> seen;
  for (Fe c : gamma0) {
    if (c == f.zero() || seen.contains(c)) continue;
    std::vector<Fe> orbit{c};
    seen.insert(c);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      std::vector<Fe> next{f.frobenius(orbit[i], 1)};
      for (Fe l : roots) next.push_back(f.mul(l, orbit[i]));
      for (Fe n : next) {
        if (seen.insert(n).second) orbit.push_back(n);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  // reach[i][t]: some union of orbits i.. has exactly t elements
  const std::size_t k = orbits.size();
  std::vector<std::vector<bool>> reach(k + 1, std::vector<bool>(static_cast<std::size_t>(s) + 1, false));
  reach[k][0] = true;
  for (std::size_t i = k; i-- > 0;) {
    for (int t = 0; t <= s; ++t) {
      const int sz = static_cast<int>(orbits[i].size());
      reach[i][t] = reach[i + 1][t] || (t >= sz && reach[i + 1][t - sz]);
    }
  }

  PlaneSelection sel;
  sel.planes.push_back(f.zero());
  if (reach[0][s]) {
    int left = s;
    for (std::size_t i = 0; i < k && left > 0; ++i) {
      const int sz = static_cast<int>(orbits[i].size());
      if (sz <= left && reach[i + 1][left - sz]) {
        sel.planes.insert(sel.planes.end(), orbits[i].begin(), orbits[i].end());
        left -= sz;
      }
    }
    std::sort(sel.planes.begin() + 1, sel.planes.end());
    sel.closed = true;
  } else {
    for (Fe c : gamma0) {
      if (static_cast<int>(sel.planes.size()) == s + 1) break;
      if (c != f.zero()) sel.planes.push_back(c);
    }
    sel.closed = planes_closed(curve, sel.planes, r);
  }
  return sel;
}

void validate_spec(const CurveTable& curve, const CodeSpec& spec) {
  if (spec.m < 1) throw Error("multiplicity m must be positive");
  if (spec.s < 0) throw Error("plane count s must be non-negative");
  if (spec.family == Family::C || spec.family == Family::Cprime) {
    if (spec.s != 0) throw Error("families C and Cprime take no extra planes");
    if (!(spec.planes.empty() || (spec.planes.size() == 1 && spec.planes[0] == Fe{0}))) {
      throw Error("families C and Cprime take no extra planes");
    }
    return;
  }
  if (spec.family == Family::Cbar && spec.s < 1) throw Error("Cbar needs s >= 1");
  if (spec.planes.size() != static_cast<std::size_t>(spec.s) + 1) {
    throw Error("plane list must hold c_0 = 0 followed by s elements");
  }
  if (spec.planes[0] != Fe{0}) throw Error("plane list must start with c_0 = 0");
  std::set<Fe> distinct;
  for (Fe c : spec.planes) {
    if (!curve.in_gamma0(c)) throw Error("plane c = " + std::to_string(c.index) + " is not in Gamma_0");
    if (!distinct.insert(c).second) throw Error("plane list has repeated elements");
  }
}

CodeDivisors derive_divisors(const CurveTable& curve, const CodeSpec& spec) {
  validate_spec(curve, spec);
  CodeDivisors out;
  switch (spec.family) {
    case Family::C:
    case Family::Cprime:
      for (Place p : curve.orbit1()) out.g.set(p, spec.m);
      break;
    case Family::Cbar:
      out.g.set(curve.infinity(), spec.m);
      [[fallthrough]];
    case Family::Ctilde:
      for (Fe c : spec.planes) {
        for (Place p : curve.plane_section_z(c)) out.g.set(p, spec.m);
      }
      break;
  }
  for (std::uint32_t id = 0; id < curve.size(); ++id) {
    const Place p{id};
    if (spec.family == Family::Cprime || out.g.weight(p) == 0) out.d.push_back(p);
  }
  return out;
}

namespace {

std::int64_t base_count(std::int64_t q) {
  const std::int64_t q3 = q * q * q;
  return q3 * q3 * q * q - q3 * q3 + q3 * q * q;  // q^8 - q^6 + q^5
}

std::int64_t genus_of(std::int64_t q) { return (q * q * q * q * q - 2 * q * q * q + q * q) / 2; }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

std::int64_t formula_length(std::int64_t q, const CodeSpec& spec) {
  const std::int64_t q3 = q * q * q, s = spec.s;
  switch (spec.family) {
    case Family::C: return base_count(q) - q3;
    case Family::Cprime: return base_count(q) + 1;
    case Family::Cbar: return base_count(q) - (s + 1) * q3;
    case Family::Ctilde: return base_count(q) - (s + 1) * q3 + 1;
  }
  throw Error("unknown family");
}

std::int64_t formula_degree(std::int64_t q, const CodeSpec& spec) {
  const std::int64_t q3 = q * q * q, s = spec.s, m = spec.m;
  switch (spec.family) {
    case Family::C:
    case Family::Cprime: return m * (q3 + 1);
    case Family::Cbar: return m + m * (s + 1) * q3;
    case Family::Ctilde: return m * (s + 1) * q3;
  }
  throw Error("unknown family");
}

std::int64_t formula_designed_distance(std::int64_t q, const CodeSpec& spec) {
  const std::int64_t q3 = q * q * q, s = spec.s, m = spec.m;
  switch (spec.family) {
    case Family::C: return base_count(q) - q3 - m * (q3 + 1);
    case Family::Cprime: return base_count(q) + 1 - m * (q3 + 1);
    case Family::Cbar: return base_count(q) - (m + 1) * (s + 1) * q3 - m;
    case Family::Ctilde: return base_count(q) - (m + 1) * (s + 1) * q3 + 1;
  }
  throw Error("unknown family");
}

std::int64_t cbar_designed_distance_by_degree(std::int64_t q, std::int64_t m, std::int64_t s) {
  const std::int64_t q3 = q * q * q;
  const std::int64_t n = base_count(q) - (s + 1) * q3;
  return n - (m + m * (s + 1) * q3);
}

std::int64_t formula_dimension(std::int64_t q, const CodeSpec& spec) {
  const std::int64_t q3 = q * q * q, s = spec.s, m = spec.m;
  const std::int64_t c2 = (q * q * q * q * q - 2 * q3 + q * q - 2) / 2;
  switch (spec.family) {
    case Family::C:
    case Family::Cprime: return m * (q3 + 1) - c2;
    case Family::Cbar: return m * (1 + (s + 1) * q3) - c2;
    case Family::Ctilde: return m * (s + 1) * q3 - (q * q * q * q * q - 2 * q3 + q * q - 4) / 2;
  }
  throw Error("unknown family");
}

std::int64_t riemann_roch_dimension(std::int64_t q, const CodeSpec& spec) {
  return formula_degree(q, spec) + 1 - genus_of(q);
}

MRange dimension_range(std::int64_t q, const CodeSpec& spec) {
  const std::int64_t q3 = q * q * q, q5 = q3 * q * q, s = spec.s;
  switch (spec.family) {
    case Family::C:
    case Family::Cprime: return MRange{q * q - 1, q5 - q3 - 1};
    case Family::Cbar: {
      const std::int64_t den = (s + 1) * q3 + 1;
      return MRange{ceil_div(q5 - 2 * q3 + q * q - 1, den),
                    floor_div(base_count(q) - (s + 1) * q3 - 1, den)};
    }
    case Family::Ctilde:
      return MRange{ceil_div(q5 - 2 * q3 + q * q - 1, (s + 1) * q3),
                    floor_div(q5 - q3 + q * q, s + 1) - 1};
  }
  throw Error("unknown family");
}

std::size_t weight(const std::vector<Fe>& word) {
  return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Fe x) { return x != Fe{0}; }));
}

std::vector<Fe> code_word(const FunctionField& ff, const FunctionSum& f,
                          const std::vector<Place>& coordinates, const std::vector<int>& shifts,
                          unsigned threads) {
  std::vector<Fe> word(coordinates.size());
  parallel_for(coordinates.size(), threads, [&](std::size_t i) {
    const int b = shifts.empty() ? 0 : shifts[i];
    word[i] = b == 0 ? ff.evaluate(f, coordinates[i]) : ff.leading_coefficient(f, coordinates[i], b);
  });
  return word;
}

LinearCode evaluation_code(const FunctionField& ff, const Divisor& g, const std::vector<Place>& d,
                           const std::vector<int>& shifts, unsigned threads) {
  if (!shifts.empty() && shifts.size() != d.size()) throw Error("shift vector length mismatch");
  const FieldTower& f = ff.field();
  const RRBasis basis = rr_basis(ff, g, threads);
  std::vector<std::vector<Fe>> rows(basis.functions.size());
  parallel_for(rows.size(), threads, [&](std::size_t r) {
    rows[r] = code_word(ff, basis.functions[r], d, shifts, 1);
  });
  LinearCode code;
  code.n = d.size();
  code.g = g;
  code.coordinates = d;
  code.shifts = shifts;
  code.basis_size = basis.functions.size();
  code.generator = Matrix(0, d.size());
  IncrementalBasis independent(f, d.size());
  for (const auto& row : rows) {
    if (independent.try_add(row)) code.generator.append_row(row);
  }
  code.k = code.generator.rows();
  return code;
}

LinearCode build_code(const FunctionField& ff, const CodeSpec& spec, unsigned threads) {
  const CurveTable& curve = ff.curve();
  const auto q = static_cast<std::int64_t>(curve.q());
  const CodeDivisors divs = derive_divisors(curve, spec);
  const std::int64_t dstar = formula_designed_distance(q, spec);
  if (dstar <= 0) throw Error("designed distance d* = " + std::to_string(dstar) + " is not positive");
  std::vector<int> shifts;
  if (spec.family == Family::Cprime) {
    for (Place p : divs.d) shifts.push_back(divs.g.weight(p));
  }
  LinearCode code = evaluation_code(ff, divs.g, divs.d, shifts, threads);
  if (static_cast<std::int64_t>(code.n) != formula_length(q, spec)) {
    throw Error("code length disagrees with the family formula");
  }
  code.label = family_name(spec.family);
  code.designed_distance = dstar;
  return code;
}

Witness witness_min_weight(const FunctionField& ff, const CodeSpec& spec) {
  const CurveTable& curve = ff.curve();
  const CodeDivisors divs = derive_divisors(curve, spec);
  Witness w;
  std::vector<int> shifts;
  switch (spec.family) {
    case Family::Cbar:
      throw Error("no minimum-weight witness is claimed for Cbar");
    case Family::Cprime:
      for (Place p : divs.d) shifts.push_back(divs.g.weight(p));
      [[fallthrough]];
    case Family::C: {
      const auto& abscissas = curve.full_x_abscissas();
      if (static_cast<std::size_t>(spec.m) > abscissas.size()) {
        throw Error("not enough full x-fibers for the witness");
      }
      for (int i = 0; i < spec.m; ++i) w.function *= FunctionExpr::of(ff.x_minus(abscissas[static_cast<std::size_t>(i)]));
      w.function *= FunctionExpr::of(ff.z(), -spec.m);
      break;
    }
    case Family::Ctilde: {
      const std::set<Fe> used(spec.planes.begin(), spec.planes.end());
      std::vector<Fe> spare;
      for (Fe c : curve.gamma0()) {
        if (!used.contains(c)) spare.push_back(c);
      }
      const std::size_t need = static_cast<std::size_t>(spec.m) * spec.planes.size();
      if (spare.size() < need) throw Error("not enough spare planes in Gamma_0 for the witness");
      for (std::size_t i = 0; i < spec.planes.size(); ++i) {
        for (int j = 0; j < spec.m; ++j) {
          w.function *= FunctionExpr::of(ff.z_minus(spare[i * static_cast<std::size_t>(spec.m) + static_cast<std::size_t>(j)]));
          w.function *= FunctionExpr::of(ff.z_minus(spec.planes[i]), -1);
        }
      }
      break;
    }
  }
  // pole divisor is G exactly
  Divisor poles;
  const Divisor div = ff.divisor_of(w.function);
  for (const auto& [p, v] : div.weights()) {
    if (v < 0) poles.set(p, -v);
  }
  if (poles != divs.g) throw Error("witness pole divisor differs from G");
  w.word = code_word(ff, FunctionSum(w.function), divs.d, shifts);
  w.weight = weight(w.word);
  return w;
}

LinearCode dual_code(const FieldTower& f, const LinearCode& code) {
  LinearCode d;
  d.label = "dual(" + code.label + ")";
  d.n = code.n;
  d.coordinates = code.coordinates;
  d.shifts = code.shifts;
  d.generator = code.k == 0 ? nullspace(f, Matrix(1, code.n)) : nullspace(f, code.generator);
  d.k = d.generator.rows();
  return d;
}

DistanceReport exhaustive_min_distance(const FieldTower& f, const LinearCode& code,
                                       std::uint64_t budget,
                                       std::optional<std::size_t> witness_weight) {
  DistanceReport rep;
  if (code.k == 0) return rep;
  const std::uint64_t size = f.size();
  // projective message count (size^k - 1)/(size - 1), saturating
  std::uint64_t count = 0;
  bool affordable = true;
  for (std::size_t i = 0; i < code.k && affordable; ++i) {
    count = count * size + 1;
    affordable = count <= budget;
  }

  if (affordable) {
    std::size_t best = code.n + 1;
    std::vector<std::uint64_t> digits;
    for (std::size_t lead = 0; lead < code.k; ++lead) {
      const std::size_t free = code.k - lead - 1;
      digits.assign(free, 0);
      while (true) {
        std::vector<Fe> word = code.generator.row(lead);
        for (std::size_t j = 0; j < free; ++j) {
          if (digits[j] == 0) continue;
          const Fe c{static_cast<std::uint32_t>(digits[j])};
          for (std::size_t i = 0; i < code.n; ++i) {
            word[i] = f.add(word[i], f.mul(c, code.generator.at(lead + 1 + j, i)));
          }
        }
        best = std::min(best, weight(word));
        std::size_t pos = 0;
        while (pos < free && ++digits[pos] == size) digits[pos++] = 0;
        if (pos == free) break;
      }
    }
    rep.lower = rep.upper = static_cast<std::int64_t>(best);
    rep.enumerated = true;
    return rep;
  }

  rep.lower = std::max<std::int64_t>(code.designed_distance, 1);
  std::size_t best = code.n;
  const Echelon e = rref(f, code.generator);
  for (std::size_t r = 0; r < e.reduced.rows(); ++r) best = std::min(best, weight(e.reduced.row(r)));
  if (witness_weight) best = std::min(best, *witness_weight);
  rep.upper = static_cast<std::int64_t>(best);
  return rep;
}

std::int64_t singleton_defect(const LinearCode& code, const DistanceReport& d) {
  if (!d.exact()) throw Error("Singleton defect needs a certified minimum distance");
  return static_cast<std::int64_t>(code.n) + 1 - static_cast<std::int64_t>(code.k) - d.lower;
}

OmegaReport omega_equivalence(const FunctionField& ff, int m, unsigned threads) {
  const CurveTable& curve = ff.curve();
  const FieldTower& f = ff.field();
  const auto q = static_cast<std::int64_t>(curve.q());
  const std::int64_t q2 = q * q, q3 = q2 * q, q5 = q3 * q2;
  if (m < 1 || m >= q5 - q3 + q2 - 2) throw Error("Omega equivalence needs 1 <= m < q^5 - q^3 + q^2 - 2");

  const CodeSpec spec{Family::C, m, 0, {}};
  const LinearCode code = build_code(ff, spec, threads);
  const CodeDivisors divs = derive_divisors(curve, spec);
  Divisor big_g;
  const int big_m = static_cast<int>(q5 - q3 + q2 - m - 2);
  for (Place p : curve.orbit1()) big_g.set(p, big_m);
  const LinearCode big = evaluation_code(ff, big_g, divs.d, {}, threads);

  FunctionExpr phi;
  for (Fe a : curve.full_x_abscissas()) phi *= FunctionExpr::of(ff.x_minus(a));
  for (Place p : curve.orbit1()) {
    if (!curve.is_infinity(p)) phi *= FunctionExpr::of(ff.tangent(p));
  }
  phi *= FunctionExpr::of(ff.z(), -static_cast<int>(q5 + q2 - 1));

  OmegaReport rep;
  rep.u.resize(divs.d.size());
  const FunctionSum phi_sum(phi);
  parallel_for(divs.d.size(), threads, [&](std::size_t i) {
    const Fe lead = ff.leading_coefficient(phi_sum, divs.d[i], -1);
    if (lead == f.zero()) throw Error("Omega equivalence: dz/phi has no simple pole at a point of D");
    rep.u[i] = f.inv(lead);
  });

  const LinearCode dual = dual_code(f, code);
  Matrix scaled = big.generator;
  for (std::size_t r = 0; r < scaled.rows(); ++r) {
    for (std::size_t c = 0; c < scaled.cols(); ++c) scaled.at(r, c) = f.mul(scaled.at(r, c), rep.u[c]);
  }
  rep.dual_dimension = dual.k;
  rep.scaled_dimension = rank(f, scaled);
  rep.stacked_rank = rank(f, stack(scaled, dual.generator));
  if (rep.stacked_rank != rep.dual_dimension || rep.stacked_rank != rep.scaled_dimension) {
    throw Error("Omega equivalence failed: dual dimension " + std::to_string(rep.dual_dimension) +
                ", scaled dimension " + std::to_string(rep.scaled_dimension) + ", stacked rank " +
                std::to_string(rep.stacked_rank));
  }
  return rep;
}

}  // namespace gkcodes
