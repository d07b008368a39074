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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gkcodes/cli.hpp"

using namespace gkcodes;
using gkcodes::cli::json;

namespace {

struct Result {
  int status = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "gkcodes");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "gkcodes_test_cli";
  std::filesystem::create_directories(dir);
  return dir;
}

const std::filesystem::path golden{GKCODES_GOLDEN_DIR};

}  // namespace

TEST_CASE("points csv matches the golden file and the curve equations") {
  const auto path = scratch() / "points.csv";
  const Result r = invoke({"points", "--p", "2", "--e", "1", "--format", "csv", "--out", path.string()});
  REQUIRE(r.status == 0);
  const std::string text = slurp(path);
  CHECK(text == slurp(golden / "points_q2.csv"));

  const FieldTower f = FieldTower::make(2, 1);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "# field " + f.description());
  std::getline(in, line);
  CHECK(line == "index,a,b,c,orbit");
  int rows = 0, o1 = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> cols;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cols.push_back(c);
    if (line.back() == ',') cols.emplace_back();
    REQUIRE(cols.size() == 5);
    o1 += cols[4] == "O1" ? 1 : 0;
    if (cols[1].empty()) continue;
    const Fe a{static_cast<std::uint32_t>(std::stoul(cols[1]))};
    const Fe b{static_cast<std::uint32_t>(std::stoul(cols[2]))};
    const Fe c{static_cast<std::uint32_t>(std::stoul(cols[3]))};
    CHECK(f.pow(b, 3) == f.add(f.pow(a, 2), a));
    CHECK(f.pow(c, 3) == f.sub(f.pow(b, 4), b));
  }
  CHECK(rows == 225);
  CHECK(o1 == 9);
}

TEST_CASE("build is deterministic and matches the golden matrix") {
  const auto dir = scratch();
  const auto a = dir / "a.matrix", b = dir / "b.matrix";
  REQUIRE(invoke({"build", "--p", "2", "--e", "1", "--family", "C", "--m", "3", "--threads", "1", "--out", a.string()})
              .status == 0);
  REQUIRE(invoke({"build", "--p", "2", "--e", "1", "--family", "C", "--m", "3", "--threads", "8", "--out", b.string()})
              .status == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a.string() + ".json") == slurp(b.string() + ".json"));
  CHECK(slurp(a) == slurp(golden / "C_q2_m3.matrix"));
  CHECK(slurp(a.string() + ".json") == slurp(golden / "C_q2_m3.matrix.json"));

  std::ifstream in(a);
  const cli::MatrixFile mf = cli::read_matrix(in);
  const json side = json::parse(slurp(a.string() + ".json"));
  CHECK(side["k"].get<std::size_t>() == mf.rows.size());
  CHECK(side["n"].get<std::size_t>() == mf.rows.front().size());
  CHECK(mf.header.at("dstar") == "189");

  // the file holds the generator of the library's code
  const FieldTower f = FieldTower::make(2, 1);
  const CurveTable curve(f);
  const FunctionField ff(curve);
  CodeSpec sp;
  sp.m = 3;
  const LinearCode code = build_code(ff, sp);
  REQUIRE(mf.rows.size() == code.k);
  for (std::size_t i = 0; i < code.k; ++i) {
    for (std::size_t j = 0; j < code.n; ++j) REQUIRE(mf.rows[i][j] == code.generator.at(i, j).index);
  }
  // csv layout reads back to the same rows
  std::ostringstream csv;
  cli::write_matrix_csv(csv, f, sp, code);
  std::istringstream csv_in(csv.str());
  CHECK(cli::read_matrix(csv_in).rows == mf.rows);
}

TEST_CASE("read_matrix rejects a truncated file") {
  std::istringstream in("# gkcodes-matrix 1\n# k 2\n1 2 3\n");
  CHECK_THROWS_AS(cli::read_matrix(in), Error);
}

TEST_CASE("table rows") {
  const Result r = invoke({"table", "--p", "2", "--e", "1", "--family", "C", "--m", "3"});
  REQUIRE(r.status == 0);
  const json row = json::parse(r.out);
  CHECK(row["n"] == 216);
  CHECK(row["k_measured"] == 18);
  CHECK(row["k_formula"] == 18);
  CHECK(row["d_star"] == 189);
  CHECK(row["witness_weight"] == 189);
  CHECK(row["automorphisms"]["closure"]["order"] == 648);

  const Result t = invoke({"table", "--p", "2", "--e", "1", "--family", "Ctilde", "--m", "3", "--s", "0"});
  REQUIRE(t.status == 0);
  const json trow = json::parse(t.out);
  CHECK(trow["n"] == 217);
  CHECK(trow["k_measured"] == 15);
  CHECK(trow.contains("k_formula_discrepancy"));
}

TEST_CASE("exit statuses") {
  // m below the stated range
  const Result low = invoke({"build", "--p", "2", "--e", "1", "--family", "C", "--m", "1", "--out",
                             (scratch() / "low.matrix").string()});
  CHECK(low.status == 2);
  CHECK_FALSE(low.err.empty());
  CHECK(invoke({"build", "--p", "2", "--e", "1", "--family", "C", "--m", "1", "--force", "--out",
                (scratch() / "low.matrix").string()})
            .status == 0);
  CHECK(invoke({"table", "--p", "2", "--e", "1", "--family", "Nope"}).status == 2);
  CHECK(invoke({"verify", "--p", "4", "--e", "1"}).status == 2);
  // a reducible modulus is an assertion failure, not a usage error
  const Result bad = invoke({"verify", "--p", "2", "--e", "1", "--modulus", "1,0,0,0,0,0,1", "--suite", "field"});
  CHECK(bad.status == 1);
  CHECK(bad.err.find("Field-Modulus mismatch") != std::string::npos);
  CHECK(invoke({"verify", "--p", "2", "--e", "1", "--suite", "field,points,planes"}).status == 0);
}

TEST_CASE("rrbasis output") {
  const Result r = invoke({"rrbasis", "--p", "2", "--e", "1", "--family", "C", "--m", "3"});
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["dimension"] == 18);
  CHECK(j["functions"].size() == 18);
}
