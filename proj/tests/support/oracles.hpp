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

// Independent reference computations: finite-difference stencils and
// textbook closed forms.

#ifndef SCREWDYN_TESTS_ORACLES_HPP_
#define SCREWDYN_TESTS_ORACLES_HPP_

#include <cmath>
#include <string>

#include <Eigen/Dense>

namespace screwdyn::testing {

// ∂f/∂x_a, central, O(h²).
template <class F, class X>
auto fd1(const F& f, const X& x, int a, double h) {
  X xp = x, xm = x;
  xp[a] += h;
  xm[a] -= h;
  const auto fp = f(xp), fm = f(xm);
  return decltype(fp)((fp - fm) * (0.5 / h));
}

// ∂²f/∂x_a∂x_b, four-point central stencil (a == b allowed), O(h²).
template <class F, class X>
auto fd2(const F& f, const X& x, int a, int b, double h) {
  auto at = [&](double sa, double sb) {
    X y = x;
    y[a] += sa * h;
    y[b] += sb * h;
    return f(y);
  };
  const auto pp = at(1, 1), pm = at(1, -1), mp = at(-1, 1), mm = at(-1, -1);
  return decltype(pp)((pp - pm - mp + mm) * (0.25 / (h * h)));
}

// ∂³f/∂x_a∂x_b∂x_c, eight-point central stencil, O(h²).
template <class F, class X>
auto fd3(const F& f, const X& x, int a, int b, int c, double h) {
  auto at = [&](double sa, double sb, double sc) {
    X y = x;
    y[a] += sa * h;
    y[b] += sb * h;
    y[c] += sc * h;
    return f(y);
  };
  const auto ppp = at(1, 1, 1);
  auto acc = decltype(ppp)(ppp - at(1, 1, -1) - at(1, -1, 1) + at(1, -1, -1) - at(-1, 1, 1) +
                           at(-1, 1, -1) + at(-1, -1, 1) - at(-1, -1, -1));
  return decltype(ppp)(acc * (0.125 / (h * h * h)));
}

// Fourth-order central difference of a curve at t = 0.
template <class F>
auto fd_t4(const F& f, double h) {
  const auto p1 = f(h), m1 = f(-h), p2 = f(2 * h), m2 = f(-2 * h);
  return decltype(p1)((8.0 * (p1 - m1) - (p2 - m2)) * (1.0 / (12.0 * h)));
}

// Planar two-link arm with revolute joints about a common horizontal axis.
// q1 is measured from the horizontal, q2 relative to link 1; a positive
// rotation lowers the link. I1, I2 are centroidal moments about the joint
// axis direction, g the magnitude of gravity.
struct TwoLinkArm {
  double m1 = 1, m2 = 1, l1 = 1, lc1 = 0.5, lc2 = 0.5;
  double I1 = 1.0 / 12.0, I2 = 1.0 / 12.0;
  double g = 9.80665;

  // τ = M(q)q̈ + c(q, q̇) + ∂U/∂q from the Lagrangian
  //   T = ½m1 lc1² q̇1² + ½I1 q̇1²
  //     + ½m2 (l1² q̇1² + lc2²(q̇1+q̇2)² + 2 l1 lc2 cos q2 q̇1(q̇1+q̇2))
  //     + ½I2 (q̇1+q̇2)²
  //   U = -g (m1 lc1 sin q1 + m2 (l1 sin q1 + lc2 sin(q1+q2)))
  Eigen::Vector2d torque(const Eigen::Vector2d& q, const Eigen::Vector2d& qd,
                         const Eigen::Vector2d& qdd) const {
    const double c2 = std::cos(q[1]), s2 = std::sin(q[1]);
    const double m11 = I1 + I2 + m1 * lc1 * lc1 + m2 * (l1 * l1 + lc2 * lc2 + 2 * l1 * lc2 * c2);
    const double m12 = I2 + m2 * (lc2 * lc2 + l1 * lc2 * c2);
    const double m22 = I2 + m2 * lc2 * lc2;
    const double h = m2 * l1 * lc2 * s2;
    const double g1 = -g * ((m1 * lc1 + m2 * l1) * std::cos(q[0]) + m2 * lc2 * std::cos(q[0] + q[1]));
    const double g2 = -g * m2 * lc2 * std::cos(q[0] + q[1]);
    return Eigen::Vector2d(
        m11 * qdd[0] + m12 * qdd[1] - h * (2 * qd[0] * qd[1] + qd[1] * qd[1]) + g1,
        m12 * qdd[0] + m22 * qdd[1] + h * qd[0] * qd[0] + g2);
  }
};

// Period of a physical pendulum released from rest at amplitude θ0:
// 4 K(sin(θ0/2)) / ω0 with ω0² = m g l / I_pivot.
inline double pendulum_period(double m, double g, double l, double i_pivot, double theta0) {
  const double w0 = std::sqrt(m * g * l / i_pivot);
  return 4.0 * std::comp_ellint_1(std::sin(0.5 * theta0)) / w0;
}

// Directory with the bundled sample models.
inline std::string models_dir() { return SCREWDYN_MODELS_DIR; }
inline std::string test_data_dir() { return SCREWDYN_TEST_DATA_DIR; }

}  // namespace screwdyn::testing

#endif  // SCREWDYN_TESTS_ORACLES_HPP_
