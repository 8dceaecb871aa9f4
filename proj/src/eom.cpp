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

#include "screwdyn/eom.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>

#include "screwdyn/dynamics.hpp"

namespace screwdyn {

namespace {

MatrixXd block_inertia(const ChainModel& m) {
  const int n = m.n();
  MatrixXd mm = MatrixXd::Zero(6 * n, 6 * n);
  for (int i = 0; i < n; ++i) mm.block<6, 6>(6 * i, 6 * i) = m.inertia(i).matrix();
  return mm;
}

Mat4 hat4(const Screw& x) {
  Mat4 h = Mat4::Zero();
  h.topLeftCorner<3, 3>() = hat3(x.ang());
  h.topRightCorner<3, 1>() = x.lin();
  return h;
}

void check_applied(const ChainModel& m, const std::vector<Wrench>& w) {
  if (!w.empty() && static_cast<int>(w.size()) != m.n()) {
    throw DomainError("applied wrench count differs from the number of bodies");
  }
}

VectorXd solve_spd(const MatrixXd& a, const VectorXd& b, const char* what) {
  Eigen::LLT<MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) {
    throw NumericalError(std::string(what) +
                         ": mass matrix is not positive definite");
  }
  VectorXd x = llt.solve(b);
  if (!x.allFinite()) throw NumericalError(std::string(what) + ": non-finite solution");
  return x;
}

}  // namespace

MatrixXd mass_matrix(const ChainModel& m, const VectorXd& q) {
  const SystemJacobian sj = jacobian(m, q, Rep::body);
  const int n = m.n();
  MatrixXd out = MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const MatrixXd ji = sj.body_block(i);
    out.noalias() += ji.transpose() * m.inertia(i).matrix() * ji;
  }
  return 0.5 * (out + out.transpose());
}

MatrixXd coriolis_matrix(const ChainModel& m, const VectorXd& q,
                         const VectorXd& qd) {
  const int n = m.n();
  if (qd.size() != n) throw DomainError("qd has wrong length");
  const SystemJacobian sj = jacobian(m, q, Rep::body);
  const KinematicsCache c = twists(m, q, qd, Rep::body);
  MatrixXd a = MatrixXd::Zero(6 * n, 6 * n);
  MatrixXd b = MatrixXd::Zero(6 * n, 6 * n);
  for (int i = 0; i < n; ++i) {
    a.block<6, 6>(6 * i, 6 * i) = qd[i] * ad_matrix(m.screw_body(i)).matrix();
    b.block<6, 6>(6 * i, 6 * i) = ad_matrix(c.twists[i]).matrix();
  }
  const MatrixXd mm = block_inertia(m);
  return -sj.J.transpose() * (mm * sj.A * a + b.transpose() * mm) * sj.J;
}

double ChristoffelTensor::symmetry_residual() const {
  double r = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        r = std::max(r, std::abs((*this)(i, j, k) - (*this)(i, k, j)));
  return r;
}

MatrixXd ChristoffelTensor::coriolis(const VectorXd& qd) const {
  MatrixXd c = MatrixXd::Zero(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) c(i, j) += (*this)(i, j, k) * qd[k];
  return c;
}

ChristoffelTensor christoffel(const ChainModel& m, const VectorXd& q,
                              ChristoffelVariant variant) {
  const int n = m.n();
  const SystemJacobian sj = jacobian(m, q, Rep::body);
  ChristoffelTensor g(n);
  for (int l = 0; l < n; ++l) {
    const std::vector<int>& path = m.path(l);
    const int len = static_cast<int>(path.size());
    std::vector<Screw> jc(len);
    std::vector<Wrench> mj(len);
    std::vector<Mat4> jh(len);
    for (int a = 0; a < len; ++a) {
      jc[a] = sj.column(l, path[a]);
      mj[a] = m.inertia(l) * jc[a];
      jh[a] = hat4(jc[a]);
    }
    const Mat4& p = m.pseudo_inertia(l);
    for (int ai = 0; ai < len; ++ai) {
      for (int aj = 0; aj < len; ++aj) {
        for (int ak = aj; ak < len; ++ak) {
          double v;
          if (variant == ChristoffelVariant::standard) {
            v = 0.5 * (mj[ak].pair(lie_bracket(jc[ai], jc[aj])) +
                       mj[aj].pair(lie_bracket(jc[ai], jc[ak])) +
                       mj[ai].pair(lie_bracket(jc[aj], jc[ak])));
          } else {
            v = (jh[aj] * jh[ak] * p * jh[ai].transpose()).trace();
          }
          const int i = path[ai], j = path[aj], k = path[ak];
          g(i, j, k) += v;
          if (j != k) g(i, k, j) += v;
        }
      }
    }
  }
  return g;
}

VectorXd applied_generalized_forces(const ChainModel& m, const VectorXd& q,
                                    const std::vector<Wrench>& applied,
                                    bool gravity) {
  check_applied(m, applied);
  const int n = m.n();
  const SystemJacobian sj = jacobian(m, q, Rep::body);
  const std::vector<Pose> c = fk(m, q);
  VectorXd out = VectorXd::Zero(n);
  for (int l = 0; l < n; ++l) {
    Wrench w;
    if (!applied.empty()) w += applied[l];
    if (gravity) w += gravity_wrench(m, l, c[l], Rep::body);
    out.noalias() += sj.body_block(l).transpose() * w.vec();
  }
  return out;
}

EomMatrices eom_matrices(const ChainModel& m, const VectorXd& q,
                         const VectorXd& qd, const std::vector<Wrench>& applied,
                         bool gravity) {
  return EomMatrices{mass_matrix(m, q), coriolis_matrix(m, q, qd),
                     applied_generalized_forces(m, q, applied, gravity)};
}

VectorXd projection_eom(const ChainModel& m, const JointState& s,
                        const std::vector<Wrench>& applied,
                        const VectorXd& q_joint, bool gravity) {
  check_applied(m, applied);
  const int n = m.n();
  const KinematicsCache c = accelerations(m, s, Rep::body);
  const SystemJacobian sj = jacobian(m, s.q, Rep::body);
  VectorXd r = VectorXd::Zero(n);
  for (int l = 0; l < n; ++l) {
    Wrench w = ne_wrench(m.inertia(l), c.twists[l], c.accels[l], Rep::body);
    if (!applied.empty()) w -= applied[l];
    if (gravity) w -= gravity_wrench(m, l, c.poses[l], Rep::body);
    r.noalias() += sj.body_block(l).transpose() * w.vec();
  }
  if (q_joint.size() == n) r -= q_joint;
  return r;
}

VectorXd fdyn(const ChainModel& m, const VectorXd& q, const VectorXd& qd,
              const VectorXd& q_joint, const std::vector<Wrench>& applied,
              bool gravity) {
  const int n = m.n();
  const EomMatrices e = eom_matrices(m, q, qd, applied, gravity);
  VectorXd rhs = e.Q_applied - e.C * qd;
  if (q_joint.size() == n) {
    rhs += q_joint;
  } else if (q_joint.size() != 0) {
    throw DomainError("fdyn: joint force vector has wrong length");
  }
  return solve_spd(e.M, rhs, "fdyn");
}

std::vector<Momentum> spatial_momenta(const ChainModel& m, const VectorXd& q,
                                      const VectorXd& qd) {
  const KinematicsCache c = twists(m, q, qd, Rep::spatial);
  std::vector<Momentum> pi(m.n());
  for (int l = 0; l < m.n(); ++l) {
    pi[l] = m.inertia(l).to_spatial(c.poses[l]) * c.twists[l];
  }
  return pi;
}

VectorXd joint_velocities_from_momenta(const ChainModel& m, const VectorXd& q,
                                       const std::vector<Momentum>& pi) {
  const int n = m.n();
  if (static_cast<int>(pi.size()) != n) {
    throw DomainError("momentum count differs from the number of bodies");
  }
  const SystemJacobian sj = jacobian(m, q, Rep::spatial);
  VectorXd jt_pi = VectorXd::Zero(n);
  for (int l = 0; l < n; ++l) {
    jt_pi.noalias() += sj.body_block(l).transpose() * pi[l].vec();
  }
  return solve_spd(mass_matrix(m, q), jt_pi, "momentum_rhs");
}

MomentumRhs momentum_rhs(const ChainModel& m, const VectorXd& q,
                         const std::vector<Momentum>& pi,
                         const VectorXd& q_joint,
                         const std::vector<Wrench>& applied_spatial,
                         bool gravity) {
  const int n = m.n();
  check_applied(m, applied_spatial);
  MomentumRhs out;
  out.qd = joint_velocities_from_momenta(m, q, pi);

  std::vector<Wrench> applied_body;
  if (!applied_spatial.empty()) {
    const std::vector<Pose> c = fk(m, q);
    applied_body.resize(n);
    for (int l = 0; l < n; ++l) {
      applied_body[l] = wrench_transform(c[l], applied_spatial[l]);
    }
  }
  out.qdd = fdyn(m, q, out.qd, q_joint, applied_body, gravity);

  JointState s;
  s.q = q;
  s.qd = out.qd;
  s.qdd = out.qdd;
  const KinematicsCache c = accelerations(m, s, Rep::spatial);
  out.pi_dot.resize(n);
  for (int l = 0; l < n; ++l) {
    const SpatialInertia ms = m.inertia(l).to_spatial(c.poses[l]);
    out.pi_dot[l] = ne_wrench(ms, c.twists[l], c.accels[l], Rep::spatial);
  }
  return out;
}

double kinetic_energy(const ChainModel& m, const VectorXd& q,
                      const VectorXd& qd) {
  return 0.5 * qd.dot(mass_matrix(m, q) * qd);
}

double potential_energy(const ChainModel& m, const VectorXd& q) {
  const std::vector<Pose> c = fk(m, q);
  double u = 0.0;
  for (int l = 0; l < m.n(); ++l) {
    u -= m.body(l).mass * m.gravity().dot(c[l].apply(m.body(l).com));
  }
  return u;
}

Mat6 spatial_inertia_rate(const Mat6& ms, const Screw& vs) {
  const Mat6 ad = ad_matrix(vs).matrix();
  return -ad.transpose() * ms - ms * ad;
}

Mat6 spatial_coriolis(const Mat6& ms, const Screw& vs) {
  return -ad_matrix(vs).matrix().transpose() * ms;
}

}  // namespace screwdyn
