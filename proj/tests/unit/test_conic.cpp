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
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "dmaswipt/conic.hpp"
#include "dmaswipt/errors.hpp"
#include "test_util.hpp"

using namespace dmaswipt;
using namespace dmaswipt::conic;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

CMat identity(int n) { return CMat::Identity(n, n); }

CMat unit(int n, int i, int j) {
  CMat m = CMat::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

}  // namespace

TEST_CASE("trace lower bound", "[conic]") {
  ConicProblem p;
  const auto w = p.add_hermitian_psd(2);
  p.add_constraint(LinearExpr().add(w, identity(2)), Sense::GreaterEqual, 1.0);
  p.minimize(LinearExpr().add(w, identity(2)));
  const auto s = solve(p);
  REQUIRE(s.status == SolveStatus::Optimal);
  CHECK_THAT(s.objective, WithinRel(1.0, 1e-7));
  CHECK_THAT(s.constraint_duals[0], WithinRel(1.0, 1e-6));
  CHECK(s.achieved_tolerance <= 1e-8);
}

TEST_CASE("weighted diagonal constraint", "[conic]") {
  ConicProblem p;
  const auto w = p.add_hermitian_psd(2);
  CMat f = CMat::Zero(2, 2);
  f(0, 0) = 2.0;
  f(1, 1) = 1.0;
  p.add_constraint(LinearExpr().add(w, f), Sense::GreaterEqual, 1.0);
  p.minimize(LinearExpr().add(w, identity(2)));
  const auto s = solve(p);
  REQUIRE(s.optimal());
  CHECK_THAT(s.objective, WithinRel(0.5, 1e-7));
  CHECK_THAT(s.hermitian[0](0, 0).real(), WithinAbs(0.5, 1e-6));
  CHECK(std::abs(s.hermitian[0](1, 1)) <= 1e-6);
  CHECK(std::abs(s.hermitian[0](0, 1)) <= 1e-6);
}

TEST_CASE("negative trace is infeasible", "[conic]") {
  ConicProblem p;
  const auto w = p.add_hermitian_psd(2);
  p.add_constraint(LinearExpr().add(w, identity(2)), Sense::LessEqual, -1.0);
  p.minimize(LinearExpr().add(w, identity(2)));
  const auto s = solve(p);
  CHECK(s.status == SolveStatus::Infeasible);
  CHECK(std::string(to_string(s.status)) == "infeasible");
}

TEST_CASE("unbounded scalar program", "[conic]") {
  ConicProblem p;
  const auto x = p.add_scalar(0.0);
  p.add_constraint(LinearExpr().add(x, 1.0), Sense::GreaterEqual, 1.0);
  p.minimize(LinearExpr().add(x, -1.0));
  CHECK(solve(p).status == SolveStatus::Unbounded);
}

TEST_CASE("minimum eigenvalue through an SDP", "[conic]") {
  // min Re Tr(A W) s.t. Tr W = 1, W >= 0 equals lambda_min(A).
  std::mt19937_64 rng(17);
  for (int n : {1, 2, 3, 5, 8}) {
    const CMat a = test::random_hermitian(rng, n);
    ConicProblem p;
    const auto w = p.add_hermitian_psd(n);
    p.add_constraint(LinearExpr().add(w, identity(n)), Sense::Equal, 1.0);
    p.minimize(LinearExpr().add(w, a));
    const auto s = solve(p);
    REQUIRE(s.optimal());
    Eigen::SelfAdjointEigenSolver<CMat> eig(a);
    const double lmin = eig.eigenvalues()(0);
    CHECK(std::abs(s.objective - lmin) <= 1e-7 * (1.0 + std::abs(lmin)));
    CHECK(std::abs(s.dual_objective - lmin) <= 1e-7 * (1.0 + std::abs(lmin)));
  }
}

TEST_CASE("complex coupling term", "[conic]") {
  // max Re(W_01 * conj(c)) over Tr W = 1 gives |c| / 2.
  const cdouble c(0.3, -0.4);
  CMat f = CMat::Zero(2, 2);
  f(0, 1) = -0.5 * std::conj(c);
  f(1, 0) = -0.5 * c;
  ConicProblem p;
  const auto w = p.add_hermitian_psd(2);
  p.add_constraint(LinearExpr().add(w, identity(2)), Sense::Equal, 1.0);
  p.minimize(LinearExpr().add(w, f));
  const auto s = solve(p);
  REQUIRE(s.optimal());
  CHECK_THAT(s.objective, WithinRel(-0.5 * std::abs(c), 1e-7));
}

TEST_CASE("rotated cone epigraph of 1/x", "[conic]") {
  // min t + x  s.t.  t x >= 1  ->  2 at t = x = 1.
  ConicProblem p;
  const auto t = p.add_scalar(0.0);
  const auto x = p.add_scalar(0.0);
  p.add_rotated_cone(LinearExpr().add(t, 1.0), LinearExpr().add(x, 1.0), LinearExpr(1.0));
  p.minimize(LinearExpr().add(t, 1.0).add(x, 1.0));
  const auto s = solve(p);
  REQUIRE(s.optimal());
  CHECK_THAT(s.objective, WithinRel(2.0, 1e-7));
  CHECK_THAT(s.scalars[0], WithinRel(1.0, 1e-5));
  CHECK_THAT(s.scalars[1], WithinRel(1.0, 1e-5));
}

TEST_CASE("rotated cone with affine sides matches the closed form", "[conic]") {
  // min u + c v  s.t.  u rho >= a, v (1 - rho) >= b,  rho in [eps, 1 - eps].
  const double a = 2.0, b = 0.5, c = 3.0;
  ConicProblem p;
  const auto rho = p.add_scalar(1e-4, 1 - 1e-4);
  const auto u = p.add_scalar(0.0);
  const auto v = p.add_scalar(0.0);
  p.add_rotated_cone(LinearExpr().add(u, 1.0), LinearExpr().add(rho, 1.0),
                     LinearExpr(std::sqrt(a)));
  p.add_rotated_cone(LinearExpr().add(v, 1.0), LinearExpr(1.0).add(rho, -1.0),
                     LinearExpr(std::sqrt(b)));
  p.minimize(LinearExpr().add(u, 1.0).add(v, c));
  const auto s = solve(p);
  REQUIRE(s.optimal());
  // a / r + c b / (1 - r) is minimized at r = sqrt(a) / (sqrt(a) + sqrt(cb)).
  const double r = std::sqrt(a) / (std::sqrt(a) + std::sqrt(c * b));
  CHECK_THAT(s.scalars[0], WithinRel(r, 1e-5));
  CHECK_THAT(s.objective, WithinRel(a / r + c * b / (1 - r), 1e-7));
}

TEST_CASE("scalar bounds and offsets", "[conic]") {
  ConicProblem p;
  const auto x = p.add_scalar(-2.0, 3.0);
  const auto y = p.add_scalar(1.0);
  p.add_constraint(LinearExpr().add(x, 1.0).add(y, 1.0), Sense::LessEqual, 10.0);
  p.minimize(LinearExpr(5.0).add(x, -1.0).add(y, 2.0));
  const auto s = solve(p);
  REQUIRE(s.optimal());
  CHECK_THAT(s.scalars[0], WithinAbs(3.0, 1e-6));
  CHECK_THAT(s.scalars[1], WithinAbs(1.0, 1e-6));
  CHECK_THAT(s.objective, WithinRel(5.0 - 3.0 + 2.0, 1e-7));
  CHECK(std::abs(s.constraint_duals[0]) <= 1e-6);
}

TEST_CASE("dual signs", "[conic]") {
  ConicProblem p;
  const auto x = p.add_scalar(0.0);
  p.add_constraint(LinearExpr().add(x, 1.0), Sense::GreaterEqual, 2.0);
  p.add_constraint(LinearExpr().add(x, -1.0), Sense::LessEqual, -3.0);
  p.minimize(LinearExpr().add(x, 1.0));
  const auto s = solve(p);
  REQUIRE(s.optimal());
  CHECK_THAT(s.objective, WithinRel(3.0, 1e-7));
  CHECK(std::abs(s.constraint_duals[0]) <= 1e-6);
  CHECK_THAT(s.constraint_duals[1], WithinRel(-1.0, 1e-5));
}

TEST_CASE("Farkas duals point at conflicting rows", "[conic]") {
  ConicProblem p;
  const auto w = p.add_hermitian_psd(2);
  const auto x = p.add_scalar(0.0);
  p.add_constraint(LinearExpr().add(x, 1.0), Sense::GreaterEqual, 1.0);
  p.add_constraint(LinearExpr().add(w, unit(2, 0, 0)), Sense::GreaterEqual, 1.0);
  p.add_constraint(LinearExpr().add(w, unit(2, 0, 0)), Sense::LessEqual, 0.5);
  p.minimize(LinearExpr().add(w, identity(2)).add(x, 1.0));
  const auto s = solve(p);
  REQUIRE(s.status == SolveStatus::Infeasible);
  REQUIRE(s.constraint_duals.size() == 3);
  const double big = std::max(std::abs(s.constraint_duals[1]), std::abs(s.constraint_duals[2]));
  CHECK(big > 0.0);
  CHECK(std::abs(s.constraint_duals[0]) <= 1e-6 * big);
}

TEST_CASE("real embedding trace identity", "[conic]") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 6;
    const CMat a = test::random_hermitian(rng, n);
    const CMat x = test::random_hermitian(rng, n);
    const double complex_trace = (a * x).trace().real();
    const double real_trace = (real_embedding(a) * real_embedding(x)).trace();
    CHECK(std::abs(real_trace - 2 * complex_trace) <= 1e-12 * (1 + std::abs(real_trace)));
    CHECK((complex_from_embedding(real_embedding(a)) - a).norm() == 0.0);
    Eigen::SelfAdjointEigenSolver<CMat> ec(a);
    Eigen::SelfAdjointEigenSolver<RMat> er(real_embedding(a));
    for (int i = 0; i < n; ++i) {
      CHECK_THAT(er.eigenvalues()(2 * i), WithinAbs(ec.eigenvalues()(i), 1e-10));
      CHECK_THAT(er.eigenvalues()(2 * i + 1), WithinAbs(ec.eigenvalues()(i), 1e-10));
    }
  }
}

TEST_CASE("rotated cone membership", "[conic]") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const double t = u(rng), r = u(rng), s = u(rng);
    const bool direct = t >= 0 && r >= 0 && t * r >= s * s;
    CHECK(rotated_cone_contains(t, r, s) == direct);
  }
  CHECK(rotated_cone_contains(1.0, 1.0, 1.0));
  CHECK(!rotated_cone_contains(1.0, 1.0, 1.0001));
  CHECK(rotated_cone_contains(1.0, 1.0, 1.0001, 1e-3));
}

TEST_CASE("expression checks and evaluation", "[conic]") {
  ConicProblem p;
  const auto w = p.add_hermitian_psd(2);
  const auto x = p.add_scalar(0.0);
  CHECK_THROWS_AS(p.add_constraint(LinearExpr().add(w, identity(3)), Sense::Equal, 0.0),
                  DimensionError);
  CHECK_THROWS(p.add_constraint(LinearExpr().add(HermitianVar{7}, identity(2)), Sense::Equal, 0.0));
  CHECK_THROWS(p.add_rotated_cone(LinearExpr().add(w, identity(2)), LinearExpr().add(x, 1.0),
                                  LinearExpr(1.0)));
  CHECK_THROWS(p.add_scalar(std::numeric_limits<double>::infinity()));

  const LinearExpr e = LinearExpr(1.0).add(w, identity(2)).add(x, 2.0).add(x, 1.0);
  CHECK(e.scalar_terms().size() == 1);
  const double v = p.evaluate(e, {CMat::Identity(2, 2) * 0.5}, {2.0});
  CHECK_THAT(v, WithinRel(1.0 + 1.0 + 6.0, 1e-15));
}

TEST_CASE("SDPA dump", "[conic]") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "dmaswipt_sdpa_test";
  fs::remove_all(dir);
  fs::create_directories(dir);

  ConicProblem p;
  const auto w = p.add_hermitian_psd(2);
  const auto x = p.add_scalar(0.0);
  p.add_constraint(LinearExpr().add(w, identity(2)).add(x, 1.0), Sense::GreaterEqual, 1.0);
  p.minimize(LinearExpr().add(w, identity(2)).add(x, 2.0));
  SolverOptions opt;
  opt.dump_directory = dir.string();
  const auto s = solve(p, opt);
  REQUIRE(s.optimal());

  int files = 0;
  std::string text;
  for (const auto& entry : fs::directory_iterator(dir)) {
    ++files;
    CHECK(entry.path().extension() == ".dat-s");
    std::ifstream in(entry.path());
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  REQUIRE(files == 1);
  std::istringstream lines(text);
  std::string line;
  std::vector<std::string> data;
  while (std::getline(lines, line))
    if (!line.empty() && line[0] != '"' && line[0] != '*') data.push_back(line);
  REQUIRE(data.size() >= 4);
  CHECK(std::stoi(data[0]) == 1);  // one row
  CHECK(std::stoi(data[1]) == 2);  // PSD block + LP block
  CHECK(data[2].find("-") != std::string::npos);
  fs::remove_all(dir);
}
