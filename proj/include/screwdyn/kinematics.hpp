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

// Product-of-exponentials kinematics: poses, twists, accelerations, jerks and
// system Jacobians in body, spatial, hybrid and mixed representation.

#ifndef SCREWDYN_KINEMATICS_HPP_
#define SCREWDYN_KINEMATICS_HPP_

#include <vector>

#include <Eigen/Dense>

#include "screwdyn/chain_model.hpp"
#include "screwdyn/op_counts.hpp"
#include "screwdyn/rep.hpp"
#include "screwdyn/se3.hpp"

namespace screwdyn {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct JointState {
  VectorXd q, qd, qdd, qddd;

  static JointState zeros(int n);
  // Throws DomainError unless every vector up to the given derivative order
  // (0: q, 1: qd, 2: qdd, 3: qddd) has length n.
  void check(int n, int order) const;
};

struct Twist {
  Screw s;
  Rep rep = Rep::body;
  int body_index = 0;
};

struct KinematicsCache {
  Rep rep = Rep::body;
  std::vector<Pose> poses;      // C_i
  std::vector<Pose> rel_poses;  // C_{π(i),i}
  std::vector<Screw> twists;
  std::vector<Screw> accels;    // empty below acceleration level
  std::vector<Screw> jerks;     // empty below jerk level
};

// C_{π(i),i} = B_i exp(X_i q_i)
std::vector<Pose> relative_poses(const ChainModel& m, const VectorXd& q);
// C_i = C_{π(i)} B_i exp(X_i q_i)
std::vector<Pose> fk(const ChainModel& m, const VectorXd& q);
// C_i = (Π over ancestors exp(Y_j q_j)) A_i
std::vector<Pose> fk_spatial_poe(const ChainModel& m, const VectorXd& q);

struct SystemJacobian {
  Rep rep = Rep::body;
  int n = 0;
  MatrixXd J;  // 6n x n
  MatrixXd A;  // 6n x 6n, block lower triangular
  MatrixXd X;  // 6n x n, block diagonal

  Screw column(int i, int j) const {
    return Screw(Vec6(J.block<6, 1>(6 * i, j)));
  }
  // 6 x n Jacobian of body i.
  MatrixXd body_block(int i) const { return J.middleRows(6 * i, 6); }
};

// body   J_{i,j} = Ad_{C_{i,j}} X_j,          A = [Ad_{C_{i,j}}],  X = diag(X_j)
// spatial J_{i,j} = Ad_{C_j A_j⁻¹} Y_j,        A = [Ad_{C_j A_j⁻¹}], X = diag(Y_j)
// hybrid J_{i,j} = Ad_{r_j - r_i} Ad_{R_j}X_j, A = [Ad_{r_{i,j}}],  X = diag(Ad_{R_j}X_j)
// mixed  diag(R_iᵀ, I) applied to the hybrid blocks.
// Blocks with j not an ancestor-or-self of i are zero.
SystemJacobian jacobian(const ChainModel& m, const VectorXd& q, Rep rep);

KinematicsCache twists(const ChainModel& m, const VectorXd& q,
                       const VectorXd& qd, Rep rep,
                       OpCountReport* counts = nullptr);
KinematicsCache accelerations(const ChainModel& m, const JointState& s,
                              Rep rep, OpCountReport* counts = nullptr);
KinematicsCache jerks(const ChainModel& m, const JointState& s, Rep rep);

// Stacked 6n body accelerations from J q̈ - A a V.
VectorXd body_accel_matrix_form(const ChainModel& m, const JointState& s);
// Stacked 6n spatial accelerations from J q̈ + L b diag(J) q̇.
VectorXd spatial_accel_matrix_form(const ChainModel& m, const JointState& s);

// Joint accelerations from body-fixed twists and accelerations.
VectorXd accel_ik(const ChainModel& m, const VectorXd& q,
                  const std::vector<Screw>& body_twists,
                  const std::vector<Screw>& body_accels);

// Linear maps between representations given the body pose.
Screw convert_screw(const Screw& v, Rep from, Rep to, const Pose& pose);
Twist convert_twist(const Twist& t, Rep to, const Pose& pose);

}  // namespace screwdyn

#endif  // SCREWDYN_KINEMATICS_HPP_
