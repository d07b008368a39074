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

#ifndef GKCODES_CLI_HPP
#define GKCODES_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gkcodes/codes.hpp"
#include "gkcodes/symmetry.hpp"

namespace gkcodes::cli {

using nlohmann::json;

/// Settings shared by every subcommand.
struct RunConfig {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  /// Explicit field modulus (little-endian, monic); empty means the default.
  std::vector<std::uint32_t> modulus;
  Family family = Family::C;
  int m = 3;
  int s = 0;
  /// "auto" or comma-separated canonical indices of c_1, ..., c_s.
  std::string planes = "auto";
  std::string format;
  unsigned threads = 1;
  std::uint64_t budget = 1'000'000;
  bool force = false;
  std::string out;
  /// Comma-separated verify suites; empty selects the default for q.
  std::string suites;
};

FieldTower make_field(const RunConfig& cfg);
/// Resolves the plane list and validates the family parameters.
CodeSpec make_spec(const CurveTable& curve, const RunConfig& cfg);
/// Throws unless m lies in the family's dimension range; --force skips this.
void check_range(const CurveTable& curve, const CodeSpec& spec, bool force);

std::string atom_kind_name(AtomKind k);
json field_json(const FieldTower& f);
json divisor_json(const Divisor& d);
json function_json(const FunctionField& ff, const FunctionExpr& f);
json function_json(const FunctionField& ff, const FunctionSum& f);

/// "# field ..." header, then "index,a,b,c,orbit" rows; P∞ has empty
/// coordinates.
void write_points_csv(std::ostream& out, const CurveTable& curve);
json points_json(const CurveTable& curve);

/// Header lines "# key value", then k rows of n canonical indices.
void write_matrix(std::ostream& out, const FieldTower& f, const CodeSpec& spec, const LinearCode& code);
/// Comma-separated rows behind the same header.
void write_matrix_csv(std::ostream& out, const FieldTower& f, const CodeSpec& spec, const LinearCode& code);

struct MatrixFile {
  std::map<std::string, std::string> header;
  std::vector<std::vector<std::uint32_t>> rows;
};
/// Reads either matrix layout; checks the row count against the "k" header.
MatrixFile read_matrix(std::istream& in);

json code_sidecar(const FieldTower& f, const CodeSpec& spec, const LinearCode& code);
json rrbasis_json(const FunctionField& ff, const RRBasis& basis);

/// One row of the parameter table: n, d (or the d* lower bound), m range,
/// formula and measured k, and the automorphism verdicts.
json table_row(const FunctionField& ff, const CodeSpec& spec, const RunConfig& cfg);
/// Generators with their parameters, invariance verdicts and closure order.
json aut_report(const FunctionField& ff, const CodeSpec& spec, const RunConfig& cfg);

struct CheckRecord {
  std::string suite;
  std::string check;
  std::string proposition;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::vector<CheckRecord> checks;
  std::vector<std::pair<std::string, double>> suite_seconds;
  double seconds = 0;

  bool passed() const;
  std::vector<CheckRecord> failures() const;
  json to_json() const;
};

/// Suites: field, points, planes, divisors, rr, codes, duality, symmetry.
/// q = 2 runs all of them exhaustively; larger q defaults to the reduced
/// set field, points, planes, codes with sampled field checks and a single
/// code instance. A field that cannot be constructed fails the field suite
/// and stops the run.
VerifyReport run_verify(const RunConfig& cfg);
std::vector<std::string> default_suites(std::uint64_t q);

/// Parses argv and dispatches; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gkcodes::cli

#endif  // GKCODES_CLI_HPP
