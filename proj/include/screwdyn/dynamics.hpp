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

// Newton-Euler equations and recursive inverse dynamics.
//
// Applied wrenches, gravity included, act on the body and enter with a minus
// sign: Q = Jᵀ(M V̇ - ad_Vᵀ M V - W_app).

#ifndef SCREWDYN_DYNAMICS_HPP_
#define SCREWDYN_DYNAMICS_HPP_

#include <vector>

#include "screwdyn/chain_model.hpp"
#include "screwdyn/kinematics.hpp"
#include "screwdyn/op_counts.hpp"

namespace screwdyn {

// Resultant wrench of one body.
//   body, spatial: M V̇ - ad_Vᵀ M V
//   hybrid:        M V̇ + ad_{(ω,0)} M (ω, 0)
// Throws DomainError if the inertia's representation differs from rep, or for
// the mixed representation.
Wrench ne_wrench(const SpatialInertia& m, const Screw& v, const Screw& vd,
                 Rep rep);
Wrench ne_wrench(const SpatialInertia& m, const Twist& v, const Twist& vd);

// Fast paths for a frame at the COM, with Θ resolved in that frame's axes.
//   body:   (Θω̇ + ω×Θω, m(v̇ + ω×v))
//   hybrid: (Θω̇ + ω×Θω, m v̇)
Wrench ne_wrench_com(Rep rep, double mass, const Mat3& theta, const Screw& v,
                     const Screw& vd);

// Resultant wrench of body i measured at the origin of frame j and resolved in
// frame k (j, k body indices or kGround). With G = (R_k, r_j):
//   ^kW = ^kM (^kV̇ + ad_{V_G} ^kV) - ad_{^kV}ᵀ ^kM ^kV
// where V_G is the body twist of G.
Wrench ne_wrench_arbitrary(const ChainModel& m, const JointState& s, int i,
                           int j, int k);

// Gravity wrench on body i in the given representation (body, spatial or
// hybrid), computed from the body pose.
Wrench gravity_wrench(const ChainModel& m, int i, const Pose& c, Rep rep);

struct IdynOptions {
  bool gravity = true;
  // Per-body applied wrenches in the recursion's representation; empty for
  // none. For Rep::mixed they are read as hybrid wrenches.
  std::vector<Wrench> applied;
  OpCountReport* counts = nullptr;
};

struct IdynResult {
  VectorXd Q;
  // Wrench transmitted by joint i into body i, in the recursion's
  // representation.
  std::vector<Wrench> joint_wrenches;
};

// rep ∈ {body, spatial, hybrid}; mixed is evaluated through hybrid.
IdynResult idyn_full(const ChainModel& m, const JointState& s, Rep rep,
                     const IdynOptions& opt = {});
VectorXd idyn(const ChainModel& m, const JointState& s, Rep rep,
              const IdynOptions& opt = {});

}  // namespace screwdyn

#endif  // SCREWDYN_DYNAMICS_HPP_
