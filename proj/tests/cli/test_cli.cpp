// Copyright 2026 The qclone Authors
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

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qclone");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = qclone::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("qclone_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("reports are byte-identical across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"demo", "--n", "3", "--seed", "7"},
           {"audit", "--n", "2"},
           {"iterate", "--k", "1", "--seed", "3"},
           {"variants", "--n", "3", "--seed", "1"},
           {"compile", "--n", "2"},
           {"sweep", "--n", "2", "--points", "5"}}) {
    const Invocation a = invoke(args);
    const Invocation b = invoke(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("demo exit codes and content") {
  const Invocation ok = invoke({"demo", "--n", "3", "--seed", "7"});
  REQUIRE(ok.code == 0);
  const json r = json::parse(ok.out);
  CHECK(r["command"] == "demo");
  CHECK(r["fully_encrypted"] == true);
  CHECK(r["passed"] == true);
  CHECK(r["input"]["source"] == "haar:7");

  const Invocation single = invoke({"demo", "--n", "1", "--psi", "+"});
  CHECK(single.code == 0);
  CHECK(json::parse(single.out)["fully_encrypted"] == false);

  CHECK(invoke({"demo", "--n", "2", "--psi", "bogus"}).code == 2);
  CHECK(invoke({"demo", "--n", "0"}).code == 2);
  CHECK(invoke({"demo", "--n", "abc"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({}).code == 2);
}

TEST_CASE("numbers are rounded to 12 significant digits") {
  CHECK(qclone::cli::round_significant(0.1234567890123456) == 0.123456789012);
  CHECK(qclone::cli::round_significant(0.0) == 0.0);
  const json r = json::parse(invoke({"demo", "--n", "2", "--psi", "0"}).out);
  CHECK(r["t"].get<double>() == qclone::cli::round_significant(qclone::kPi / 4));
}

TEST_CASE("compile reports measured counts against the closed forms") {
  const Invocation inv = invoke({"compile", "--n", "2"});
  const json r = json::parse(inv.out);
  CHECK(r["encoding"]["two_qubit"] == 8);
  CHECK(r["encoding"]["count_matches"] == true);
  CHECK(r["encoding"]["equivalent"] == true);
  CHECK(r["decoding"]["formula_two_qubit"] == 37);
  CHECK(r["decoding"]["controlled_two_qubit"] == 30);
  CHECK(r["decoding"]["equivalent"] == true);
  CHECK(r["total"]["within_bound"] == true);
  // The measured decoder is one gate below the closed form, which is reported as a failure.
  CHECK(r["decoding"]["two_qubit"] == 36);
  CHECK(inv.code == 1);
}

TEST_CASE("compile writes circuit files") {
  const fs::path dir = scratch_dir("compile");
  const Invocation inv = invoke({"compile", "--n", "2", "--format", "openqasm2", "--out", dir.string()});
  CHECK(inv.code == 1);
  CHECK(fs::exists(dir / "encoding.qasm"));
  CHECK(fs::exists(dir / "decoding.qasm"));
  CHECK(slurp(dir / "encoding.qasm").rfind("OPENQASM 2.0;", 0) == 0);
  fs::remove_all(dir);
}

TEST_CASE("sweep emits one CSV row per grid point") {
  const Invocation inv = invoke({"sweep", "--n", "2", "--points", "3"});
  REQUIRE(inv.code == 0);
  std::istringstream lines(inv.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].rfind("t,", 0) == 0);

  const fs::path dir = scratch_dir("sweep");
  const Invocation to_file = invoke({"sweep", "--n", "2", "--points", "3", "--out", (dir / "s.csv").string()});
  CHECK(to_file.code == 0);
  CHECK(slurp(dir / "s.csv") == inv.out);
  CHECK(json::parse(to_file.out)["rows"] == 3);
  fs::remove_all(dir);
}

TEST_CASE("--out replaces the file atomically") {
  const fs::path dir = scratch_dir("atomic");
  const fs::path target = dir / "report.json";
  {
    std::ofstream stale(target);
    stale << "stale";
  }
  const Invocation inv = invoke({"audit", "--n", "2", "--out", target.string()});
  CHECK(inv.code == 0);
  CHECK(inv.out.empty());
  const json r = json::parse(slurp(target));
  CHECK(r["command"] == "audit");
  CHECK_FALSE(fs::exists(dir / "report.json.tmp"));
  CHECK(invoke({"audit", "--n", "2", "--out", (dir / "missing" / "r.json").string()}).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("iterate and variants pass") {
  const json it = json::parse(invoke({"iterate", "--k", "2", "--psi", "+i"}).out);
  CHECK(it["num_clones"] == 9);
  CHECK(it["num_noise"] == 8);
  CHECK(it["key_size"] == 4);
  CHECK(it["passed"] == true);
  CHECK(invoke({"iterate", "--k", "0"}).code == 2);
  CHECK(invoke({"variants", "--n", "4", "--seed", "2"}).code == 0);
  CHECK(invoke({"variants", "--n", "3", "--seed", "2"}).code == 0);
}
