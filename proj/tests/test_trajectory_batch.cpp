// Copyright 2026 The screwdyn Authors
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

#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "random_model.hpp"
#include "screwdyn/batch.hpp"
#include "screwdyn/dynamics.hpp"
#include "screwdyn/trajectory.hpp"

using namespace screwdyn;
using namespace screwdyn::testing;

namespace {

TrajectoryTable parse(const std::string& text, int n) {
  std::istringstream in(text);
  return parse_trajectory(in, n);
}

}  // namespace

TEST_CASE("parse trajectory tables") {
  const TrajectoryTable a = parse("t,q1,q2\n0,1,2\n0.5,3,4\n", 2);
  CHECK(a.samples() == 2);
  CHECK(a.order() == 0);
  CHECK(a.q(1, 0) == 3.0);
  CHECK(a.t[1] == 0.5);
  const JointState s = a.state(1);
  CHECK(s.q == Eigen::Vector2d(3, 4));
  CHECK(s.qd.isZero(0.0));

  // Comments, blank lines, no header, all derivative orders.
  const TrajectoryTable b = parse("# comment\n\n0,1,2,3\n1e-3,4,5,6\n", 1);
  CHECK(b.order() == 2);
  CHECK(b.qd(0, 0) == 2.0);
  CHECK(b.qdd(1, 0) == 6.0);
  CHECK(parse("t, q1, qd1\n0, 1.5, -2\n", 1).qd(0, 0) == -2.0);

  CHECK_THROWS_AS(parse("", 2), DomainError);
  CHECK_THROWS_AS(parse("0,1\n", 2), DomainError);
  CHECK_THROWS_AS(parse("0,1,2\n1,1\n", 1), DomainError);
  CHECK_THROWS_AS(parse("0,1,2,3\n", 2), DomainError);
  CHECK_THROWS_AS(parse("0,1\n0,2\n", 1), DomainError);
  CHECK_THROWS_AS(parse("0,1\n1,x\n", 1), DomainError);
  CHECK_THROWS_AS(read_trajectory("/nonexistent/traj.csv", 1), std::ios_base::failure);
  try {
    parse("0,1\n1,2\n0.5,3\n", 1);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("trajectory round trip is exact") {
  Rng rng(91);
  for (int order = 0; order <= 2; ++order) {
    TrajectoryTable tab;
    tab.n = 3;
    const int m = 25;
    for (int r = 0; r < m; ++r) tab.t.push_back(0.01 * r + uniform(rng, 0.0, 1e-3));
    tab.q = MatrixXd::Random(m, 3) * 1e3;
    if (order >= 1) tab.qd = MatrixXd::Random(m, 3) / 7.0;
    if (order >= 2) tab.qdd = MatrixXd::Random(m, 3) * 1e-9;
    std::stringstream ss;
    write_trajectory(ss, tab);
    const TrajectoryTable back = parse_trajectory(ss, 3);
    CHECK(back.order() == order);
    CHECK(back.t == tab.t);
    CHECK(back.q == tab.q);
    if (order >= 1) CHECK(back.qd == tab.qd);
    if (order >= 2) CHECK(back.qdd == tab.qdd);
  }
  CHECK(trajectory_header(2, 1) == std::vector<std::string>{"t", "q1", "q2", "qd1", "qd2"});
  CHECK(format_double(0.1) == "0.10000000000000001");
  std::ostringstream row;
  write_csv_row(row, {1.0, -2.5});
  CHECK(row.str() == "1,-2.5\n");
}

TEST_CASE("batch kernels: serial and parallel agree") {
  Rng rng(92);
  const ChainModel m = random_chain(rng, 6, {.tree = true});
  std::vector<JointState> states;
  std::vector<VectorXd> qs;
  for (int k = 0; k < 300; ++k) {
    states.push_back(random_state(rng, 6, 2.0));
    qs.push_back(states.back().q);
  }
  for (const char* threads : {"1", "3"}) {
    setenv("SCREWDYN_THREADS", threads, 1);
    CHECK(batch_threads() == std::atoi(threads));
    for (Rep rep : {Rep::body, Rep::spatial, Rep::hybrid, Rep::mixed}) {
      const auto a = batch_idyn(m, states, rep, true, Exec::serial);
      const auto b = batch_idyn(m, states, rep, true, Exec::parallel);
      REQUIRE(a.size() == states.size());
      for (size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k] == b[k]);
        CHECK(a[k] == idyn(m, states[k], rep));
      }
      const auto ja = batch_jacobian(m, qs, rep, Exec::serial), jb = batch_jacobian(m, qs, rep, Exec::parallel);
      const auto ta = batch_twists(m, states, rep, Exec::serial), tb = batch_twists(m, states, rep, Exec::parallel);
      for (size_t k = 0; k < qs.size(); ++k) {
        CHECK(ja[k] == jb[k]);
        CHECK(ja[k] == jacobian(m, qs[k], rep).J);
        for (int i = 0; i < 6; ++i) CHECK(ta[k][i].vec() == tb[k][i].vec());
      }
    }
    const auto fa = batch_fk(m, qs, Exec::serial), fb = batch_fk(m, qs, Exec::parallel);
    for (size_t k = 0; k < qs.size(); ++k) {
      for (int i = 0; i < 6; ++i) CHECK(fa[k][i].matrix4() == fb[k][i].matrix4());
    }
  }
  setenv("SCREWDYN_THREADS", "zero", 1);
  CHECK(batch_threads() >= 1);
  unsetenv("SCREWDYN_THREADS");

  // Errors inside the parallel region reach the caller.
  std::vector<JointState> bad = states;
  bad[150].qd.resize(2);
  CHECK_THROWS_AS(batch_idyn(m, bad, Rep::body, true, Exec::parallel), DomainError);
  CHECK_THROWS_AS(batch_idyn(m, bad, Rep::body, true, Exec::serial), DomainError);
}
