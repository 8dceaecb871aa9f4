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

#include <array>

#include "doctest.h"
#include "oracles.hpp"
#include "random_model.hpp"
#include "screwdyn/jacobian_derivatives.hpp"

using namespace screwdyn;
using namespace screwdyn::testing;

namespace {

double dist(const Screw& a, const Screw& b) { return (a.vec() - b.vec()).cwiseAbs().maxCoeff(); }
double dist(const Vec6& a, const Screw& b) { return (a - b.vec()).cwiseAbs().maxCoeff(); }

auto column_fn(const ChainModel& m, Rep rep, int i, int j) {
  return [&m, rep, i, j](const VectorXd& q) -> Vec6 { return jacobian(m, q, rep).J.block<6, 1>(6 * i, j); };
}

}  // namespace

TEST_CASE("first-order partials match finite differences") {
  Rng rng(51);
  for (int c = 0; c < 50; ++c) {
    const int n = 2 + c % 7;
    const ChainModel m = random_chain(rng, n, {.tree = c % 2 == 1});
    const VectorXd q = random_state(rng, n).q;
    const JacobianDerivatives d(m, q);
    for (Rep rep : {Rep::body, Rep::spatial, Rep::hybrid}) {
      CAPTURE(to_string(rep));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const auto f = column_fn(m, rep, i, j);
          for (int k = 0; k < n; ++k) {
            const Vec6 ref = fd1(f, q, k, 1e-5);
            const Screw an = d.partial(rep, i, j, k);
            CHECK(dist(ref, an) < 1e-7);
            CHECK(dist(an, jacobian_partial(m, q, rep, i, j, k)) == 0.0);
          }
        }
      }
    }
  }
}

TEST_CASE("partial domain conditions") {
  Rng rng(52);
  const ChainModel m = random_chain(rng, 6, {.tree = true});
  const VectorXd q = random_state(rng, 6).q;
  const JacobianDerivatives d(m, q);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      for (int k = 0; k < 6; ++k) {
        if (k == j || m.is_ancestor_or_self(k, j)) {
          CHECK(d.partial(Rep::body, i, j, k).vec().isZero(0.0));
        }
        if (m.is_ancestor_or_self(j, k)) CHECK(d.partial(Rep::spatial, i, j, k).vec().isZero(0.0));
        if (!m.is_ancestor_or_self(j, i) || !m.is_ancestor_or_self(k, i)) {
          CHECK(d.partial(Rep::body, i, j, k).vec().isZero(0.0));
          CHECK(d.partial(Rep::hybrid, i, j, k).vec().isZero(0.0));
        }
      }
    }
  }
  CHECK_THROWS_AS(d.partial(Rep::body, 6, 0, 0), DomainError);
  CHECK_THROWS_AS(d.partial(Rep::body, 0, -1, 0), DomainError);
  CHECK_THROWS_AS(d.partial(Rep::mixed, 0, 0, 0), DomainError);
  const std::array<int, 2> idx{0, 1};
  CHECK_THROWS_AS(d.partial_n(Rep::hybrid, 1, 0, idx), DomainError);
}

TEST_CASE("second-order partials match finite differences") {
  Rng rng(53);
  for (int c = 0; c < 50; ++c) {
    const int n = 2 + c % 5;
    const ChainModel m = random_chain(rng, n, {.tree = c % 2 == 0});
    const VectorXd q = random_state(rng, n).q;
    const JacobianDerivatives d(m, q);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          for (int r = k; r < n; ++r) {
            const std::array<int, 2> idx{k, r};
            for (Rep rep : {Rep::body, Rep::spatial}) {
              CAPTURE(to_string(rep));
              const Screw an = d.partial_n(rep, i, j, idx);
              // Differentiate the first-order partial once more.
              const auto g = [&](const VectorXd& x) -> Vec6 {
                return JacobianDerivatives(m, x).partial(rep, i, j, k).vec();
              };
              CHECK(dist(fd1(g, q, r, 1e-5), an) < 1e-6);
              CHECK(dist(fd2(column_fn(m, rep, i, j), q, k, r, 1e-4), an) < 1e-6);
              const std::array<int, 2> swapped{r, k};
              CHECK(dist(an, d.partial_n(rep, i, j, swapped)) == 0.0);
            }
            const Screw h2 = d.hybrid_partial2(i, j, k, r);
            CHECK(dist(fd2(column_fn(m, Rep::hybrid, i, j), q, k, r, 1e-4), h2) < 1e-6);
          }
        }
      }
    }
  }
}

TEST_CASE("third-order partials match finite differences") {
  Rng rng(54);
  for (int c = 0; c < 50; ++c) {
    const int n = 2 + c % 4;
    const ChainModel m = random_chain(rng, n, {.tree = c % 3 == 0});
    const VectorXd q = random_state(rng, n).q;
    const JacobianDerivatives d(m, q);
    const int i = n - 1;
    for (int j = 0; j < n; ++j) {
      for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
          for (int e = b; e < n; ++e) {
            const std::array<int, 3> idx{a, b, e};
            for (Rep rep : {Rep::body, Rep::spatial}) {
              CAPTURE(to_string(rep));
              const Vec6 ref = fd3(column_fn(m, rep, i, j), q, a, b, e, 1e-3);
              CHECK(dist(ref, d.partial_n(rep, i, j, idx)) < 1e-4);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("order one of partial_n equals partial") {
  Rng rng(55);
  const ChainModel m = random_chain(rng, 5, {.tree = true});
  const JacobianDerivatives d(m, random_state(rng, 5).q);
  for (Rep rep : {Rep::body, Rep::spatial}) {
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        for (int k = 0; k < 5; ++k) {
          const std::array<int, 1> idx{k};
          CHECK(dist(d.partial_n(rep, i, j, idx), d.partial(rep, i, j, k)) < 1e-15);
        }
      }
    }
  }
}

TEST_CASE("spatial Jacobian time derivative") {
  Rng rng(56);
  const double h = 1e-5;
  for (int c = 0; c < 30; ++c) {
    const ChainModel m = random_chain(rng, 6, {.tree = c % 2 == 1});
    const JointState s = random_state(rng, 6, 2.0);
    const std::vector<Screw> jd = spatial_jacobian_dot(m, s.q, s.qd);
    const KinematicsCache v = twists(m, s.q, s.qd, Rep::spatial);
    const SystemJacobian js = jacobian(m, s.q, Rep::spatial);
    for (int j = 0; j < 6; ++j) {
      const auto col = [&](double t) -> Vec6 {
        return jacobian(m, s.q + t * s.qd, Rep::spatial).J.block<6, 1>(6 * j, j);
      };
      CHECK(dist((col(h) - col(-h)) * (0.5 / h), jd[j]) < 1e-7);
      CHECK(dist(jd[j], lie_bracket(v.twists[j], js.column(j, j))) < 1e-12);
    }
  }
}
