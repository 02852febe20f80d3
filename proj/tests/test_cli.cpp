// Copyright 2026 The QMSA Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qmsa/cli.hpp"

using namespace qmsa;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  const char* dir = std::getenv("QMSA_TEST_TMPDIR");
  return (std::filesystem::path(dir ? dir : std::filesystem::temp_directory_path().string()) / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const std::string kTridiag = R"({"kind":"explicit","coeffs":{"-1":1,"0":2,"1":1}})";

}  // namespace

TEST_CASE("grid parsing", "[cli]") {
  CHECK(parse_grid("16,32,64") == std::vector<int>{16, 32, 64});
  CHECK_THROWS_AS(parse_grid("16,8"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1,4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("4,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("4,4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid(""), std::invalid_argument);
}

TEST_CASE("equiv cp", "[cli]") {
  const std::string prefix = tmp("cli_cp");
  const auto r = run({"equiv", "cp", "--symbol", "geo:0.5", "--grid", "16,32,64,128,256", "--out", prefix});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(slurp(prefix + ".json"));
  CHECK(j["kind"] == "cp");
  CHECK(j["verdicts"]["passed"] == true);
  const auto& recs = j["records"];
  REQUIRE(recs.size() == 5);
  for (std::size_t q = 1; q < recs.size(); ++q) CHECK(recs[q]["d_n"].get<double>() < recs[q - 1]["d_n"].get<double>());
  const auto csv = slurp(prefix + ".csv");
  CHECK(csv.rfind("n,norm_a,norm_b,d_n,d_n_closed", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);

  // Byte-identical reruns.
  const std::string again = tmp("cli_cp_again");
  CHECK(run({"equiv", "cp", "--symbol", "geo:0.5", "--grid", "16,32,64,128,256", "--out", again}).code == 0);
  CHECK(slurp(prefix + ".json") == slurp(again + ".json"));
  CHECK(slurp(prefix + ".csv") == slurp(again + ".csv"));
}

TEST_CASE("equiv cp with a delta symbol", "[cli]") {
  const std::string prefix = tmp("cli_delta");
  const auto r = run({"equiv", "cp", "--symbol", R"({"kind":"explicit","coeffs":{"0":1.0}})", "--grid", "4,8,16",
                      "--out", prefix});
  CHECK(r.code == 0);
  for (const auto& rec : nlohmann::json::parse(slurp(prefix + ".json"))["records"]) CHECK(rec["d_n"] == 0.0);
}

TEST_CASE("equiv cp reads symbols from files", "[cli]") {
  const std::string path = tmp("cli_symbol.json");
  std::ofstream(path) << R"({"kind":"geometric","scale":1.0,"ratio":0.5})";
  CHECK(run({"equiv", "cp", "--symbol", path, "--grid", "8,16,32"}).code == 0);
}

TEST_CASE("equiv usage and verdict errors", "[cli]") {
  const auto bad = run({"equiv", "cp", "--symbol", "{bad"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("malformed") != std::string::npos);
  CHECK(run({"equiv", "cp"}).code == 2);
  CHECK(run({"equiv", "cp", "--symbol", "geo:0.5", "--grid", "32,16"}).code == 2);
  CHECK(run({"equiv", "cp", "--symbol", "geo:0.5", "--grid", "1,16"}).code == 2);
  CHECK(run({"equiv", "cp", "--symbol", R"({"kind":"explicit","coeffs":{"1":-1}})", "--grid", "4,8"}).code == 2);
  CHECK(run({"equiv"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"equiv", "cp", "--symbol", "geo:0.5", "--grid", "16,32", "--ratio", "0.1"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("equiv wclt", "[cli]") {
  const std::string prefix = tmp("cli_wclt");
  const auto r = run({"equiv", "wclt", "--coeffs",
                      R"({"gamma_plus":"geo:0.6","gamma_minus":"geo:0.6","zeta_plus":"geo:0.4","zeta_minus":"geo:0.4"})",
                      "--grid", "16,32,64", "--out", prefix});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(slurp(prefix + ".json"));
  CHECK(j["kind"] == "wclt");
  CHECK(j["records"][0].contains("g_cyclic_imag"));
  CHECK(run({"equiv", "wclt"}).code == 2);
}

TEST_CASE("oracle", "[cli]") {
  const auto r = run({"oracle", "--n", "6", "--seed", "42", "--expect-cp"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("choi_toeplitz_min_eig") != std::string::npos);

  const auto neg = run({"oracle", "--n", "4", "--expect-cp", "--symbol",
                        R"({"kind":"explicit","coeffs":{"-1":0.5,"0":1,"1":-0.5}})"});
  CHECK(neg.code == 1);
  CHECK(neg.out.find("FAIL choi_toeplitz_min_eig") != std::string::npos);

  const auto big = run({"oracle", "--n", "13"});
  CHECK(big.code == 2);
  CHECK(big.err.find("n <= 12") != std::string::npos);

  // Same seed, same residual lines.
  CHECK(run({"oracle", "--n", "5", "--seed", "7"}).out == run({"oracle", "--n", "5", "--seed", "7"}).out);
}

TEST_CASE("spectrum", "[cli]") {
  const std::string prefix = tmp("cli_spec");
  const auto r = run({"spectrum", "--symbol", kTridiag, "--n", "8", "--out", prefix});
  CHECK(r.code == 0);
  std::istringstream csv(slurp(prefix + ".csv"));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "label,re,im");
  bool has1 = false, has2 = false, has3 = false;
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    std::stringstream ss(line);
    std::string label, re, im;
    std::getline(ss, label, ',');
    std::getline(ss, re, ',');
    const double v = std::stod(re);
    has1 = has1 || std::abs(v - 1.0) < 1e-9;
    has2 = has2 || std::abs(v - 2.0) < 1e-9;
    has3 = has3 || std::abs(v - 3.0) < 1e-9;
  }
  CHECK(rows == 64);
  CHECK((has1 && has2 && has3));
  CHECK(slurp(prefix + "_hist.csv").rfind("bin_left,bin_right,count", 0) == 0);
  CHECK(!slurp(prefix + "_circulant.csv").empty());

  const std::string one = tmp("cli_spec_one");
  CHECK(run({"spectrum", "--symbol", "delta:2.5", "--n", "1", "--out", one}).code == 0);
  CHECK(slurp(one + ".csv") == "label,re,im\n0,2.5,0\n");
}

TEST_CASE("moments", "[cli]") {
  const std::string prefix = tmp("cli_moments");
  const auto r = run({"moments", "--symbol", kTridiag, "--s-max", "4", "--grid", "8,16,32,64", "--out", prefix});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(slurp(prefix + ".json"));
  CHECK(j["shrink"] == true);
  CHECK(j["rows"].size() == 16);
  CHECK(run({"moments", "--symbol", kTridiag, "--s-max", "9"}).code == 2);
  CHECK(run({"moments", "--symbol", kTridiag, "--s-max", "0"}).code == 2);
}
