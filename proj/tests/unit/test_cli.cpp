// SPDX-License-Identifier: Apache-2.0
//
// dmaswipt: DMA-aided multiuser MISO power-splitting SWIPT optimization
// Copyright (C) 2026 The dmaswipt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <catch_amalgamated.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "dmaswipt/results_io.hpp"

#ifdef DMASWIPT_CLI_PATH

namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "dmaswipt_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args) {
  const std::string cmd = std::string("\"") + DMASWIPT_CLI_PATH + "\" " + args + " >" +
                          (scratch() / "stdout.txt").string() + " 2>" +
                          (scratch() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tiny_config() {
  const fs::path p = scratch() / "tiny.cfg";
  std::ofstream(p) << "n_rows = 2\nn_cols = 4\nmax_iterations = 2\n"
                      "max_initializations = 2\neh_grid_dbm = -30, -10\n"
                      "eh_models = linear:eta=0.5\nmc_users = 2\n";
  return p.string();
}

}  // namespace

TEST_CASE("dump-config echoes the default scenario", "[cli]") {
  REQUIRE(run("dump-config") == 0);
  const std::string out = slurp(scratch() / "stdout.txt");
  CHECK(out.find("n_rows = 8\n") != std::string::npos);
  CHECK(out.find("n_cols = 64\n") != std::string::npos);
  CHECK(out.find("carrier_frequency_hz = 2.8e+10\n") != std::string::npos);
  CHECK(out.find("alpha = 0.6\n") != std::string::npos);
  CHECK(out.find("beta = 827.67\n") != std::string::npos);
  CHECK(out.find("antenna_noise_dbm = -70\n") != std::string::npos);

  REQUIRE(run("dump-config --format json --desk-scale") == 0);
  CHECK(slurp(scratch() / "stdout.txt").find("\"n_rows\": 4") != std::string::npos);
}

TEST_CASE("configuration errors exit with 2", "[cli]") {
  CHECK(run("run --ps fixed:1.5") == 2);
  CHECK(run("run --bogus-flag") == 2);
  CHECK(run("") == 2);
  CHECK(run("run --scheme holo") == 2);
  CHECK(run("run --config /nonexistent.cfg") == 2);
  CHECK(run("run --full-scale --desk-scale") == 2);
  CHECK(run("sweep-eh --format xml") == 2);
}

TEST_CASE("unreachable EH targets exit with 3", "[cli]") {
  const std::string cfg = tiny_config();
  CHECK(run("run --config " + cfg +
            " --eh-model logistic:esat_dbm=-20,a=150,b=0.014") == 3);
  CHECK(run("sweep-eh --config " + cfg +
            " --eh-model logistic:esat_dbm=-40,a=150,b=0.014") == 3);
}

TEST_CASE("sweep output is byte-identical across runs and thread counts", "[cli]") {
  const std::string cfg = tiny_config();
  const fs::path a = scratch() / "a.csv", b = scratch() / "b.csv", c = scratch() / "c.csv";
  REQUIRE(run("sweep-eh --config " + cfg + " --seed 7 --out " + a.string()) == 0);
  REQUIRE(run("sweep-eh --config " + cfg + " --seed 7 --out " + b.string()) == 0);
  REQUIRE(run("sweep-eh --config " + cfg + " --seed 7 --parallel 4 --out " + c.string()) == 0);
  const std::string first = slurp(a);
  CHECK(first.rfind(std::string(dmaswipt::kCsvHeader) + "\n", 0) == 0);
  CHECK(first == slurp(b));
  CHECK(first == slurp(c));

  REQUIRE(run("run --config " + cfg + " --format json") == 0);
  CHECK(slurp(scratch() / "stdout.txt").find("\"best_trace_dbm\"") != std::string::npos);
}

#endif
